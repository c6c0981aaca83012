#include <doctest.h>

#include <cmath>
#include <vector>

#include "fixtures.hpp"
#include "kgosc/cornell_spectrum.hpp"
#include "kgosc/ode_oracle.hpp"
#include "kgosc/ph_spectrum.hpp"

using namespace kgosc;

namespace {

// Smallest-magnitude converged root of the requested sign, the state the
// solver is really claiming for the label. Returned by value: the outcome
// argument is usually a temporary.
SpectrumSolution principal(const SolveOutcome& out) {
  REQUIRE(out.status == SolveStatus::ok);
  const SpectrumSolution* best = nullptr;
  for (const auto& s : out.solutions) {
    if (!s.converged) continue;
    if (!best || std::abs(s.energy) < std::abs(best->energy)) best = &s;
  }
  REQUIRE(best != nullptr);
  return *best;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("effective coefficient matches the closed assemblies") {
  // radial_coefficient builds W(r) from the raw potential profiles; the
  // spectrum modules build the same W from collected powers of r. Agreement
  // is the independence check between the two routes.
  const std::vector<double> radii = {0.05, 0.1, 0.5, 1.0, 2.0, 5.0};
  SUBCASE("pseudoharmonic") {
    const PhProblem p = fixtures::ph_figure();
    const StateLabel st = fixtures::ph_figure_state(1, 0);
    const Problem prob = p;
    for (double e : {-3.0, 1.3, 9.2}) {
      const PhOperatorCoeffs c = ph_operator_coeffs(e, p, st);
      for (double r : radii) {
        const double direct = radial_coefficient(r, e, prob, st);
        const double closed = c.osc * r * r + c.cent / (r * r) + c.shift;
        const double pot = 1.0 * r * r + 1.0 / (r * r) + 1.0;
        const double big = std::abs(e) + pot + st.mass;
        CHECK(std::abs(direct - closed) <= 1e-12 * (1.0 + big * big + std::abs(closed)));
      }
    }
  }
  SUBCASE("cornell") {
    const CornellProblem p = fixtures::cornell_figure();
    const StateLabel st = fixtures::cornell_figure_state(1, 1);
    const Problem prob = p;
    for (double e : {-2.4, 0.4, 2.0}) {
      const CornellOperatorCoeffs c = cornell_operator_coeffs(e, p, st);
      for (double r : radii) {
        const double direct = radial_coefficient(r, e, prob, st);
        const double closed =
            c.cent / (r * r) + c.coulomb / r + c.shift + c.linear * r + c.osc * r * r;
        const double pot = r + 1.0 / r + 0.5 * r + 0.1 / r;
        const double big = std::abs(e) + pot + st.mass;
        CHECK(std::abs(direct - closed) <= 1e-12 * (1.0 + big * big + std::abs(closed)));
      }
    }
  }
}

TEST_CASE("grid resolution") {
  const Problem prob = fixtures::ph_figure();
  const StateLabel st = fixtures::ph_figure_state();
  SUBCASE("automatic outer radius") {
    const RadialGrid g = resolve_grid(RadialGrid{}, prob, st, 9.2);
    CHECK(g.r_max > 1.0);
    CHECK(std::isfinite(g.r_max));
    CHECK(g.points == RadialGrid{}.points);
  }
  SUBCASE("explicit outer radius kept") {
    RadialGrid want;
    want.r_max = 11.5;
    CHECK(resolve_grid(want, prob, st, 9.2).r_max == 11.5);
  }
  SUBCASE("rejections") {
    RadialGrid bad;
    bad.r_min = 0.0;
    CHECK_THROWS_AS(resolve_grid(bad, prob, st, 9.2), std::invalid_argument);
    RadialGrid coarse;
    coarse.points = 8;
    CHECK_THROWS_AS(resolve_grid(coarse, prob, st, 9.2), std::invalid_argument);
    CHECK_THROWS_AS(radial_coefficient(0.0, 1.0, prob, st), std::domain_error);
  }
}

TEST_CASE("shooting confirms the pseudoharmonic figure levels") {
  const PhProblem p = fixtures::ph_figure();
  const Problem prob = p;
  for (int n : {0, 1, 2}) {
    const StateLabel st = fixtures::ph_figure_state(n, 0);
    const SpectrumSolution& sol = principal(ph_solve(p, st, Branch::positive));

    const auto oracle = oracle_root_near(sol.energy, prob, st);
    REQUIRE(oracle.has_value());
    CHECK(std::abs(*oracle - sol.energy) <= 1e-6 * std::max(1.0, std::abs(sol.energy)));

    const PhProfile prof = ph_wavefunction(sol, p, st, false);
    CHECK(ode_residual(prof, sol.energy, prob, st) <= 1e-6);

    const OracleVerdict verdict = confirm_solution(sol, prob, st);
    CHECK(verdict.confirmed);
    CHECK(verdict.node_count == n);
  }
}

TEST_CASE("shooting amplitude changes sign across an eigenvalue") {
  const PhProblem p = fixtures::ph_figure();
  const StateLabel st = fixtures::ph_figure_state(0, 0);
  const Problem prob = p;
  const double e0 = principal(ph_solve(p, st, Branch::positive)).energy;
  CHECK(shoot(e0 - 0.05, prob, st) * shoot(e0 + 0.05, prob, st) < 0.0);
}

TEST_CASE("uniform and log spacings agree on the eigenvalue") {
  const PhProblem p = fixtures::ph_figure();
  const StateLabel st = fixtures::ph_figure_state(0, 0);
  const Problem prob = p;
  const double e0 = principal(ph_solve(p, st, Branch::positive)).energy;
  RadialGrid logg;
  logg.spacing = RadialGrid::Spacing::log_uniform;
  const auto from_log = oracle_root_near(e0, prob, st, logg);
  REQUIRE(from_log.has_value());
  CHECK(std::abs(*from_log - e0) <= 1e-6 * std::abs(e0));
  const PhProfile prof = ph_wavefunction(principal(ph_solve(p, st, Branch::positive)), p, st);
  CHECK(ode_residual(prof, e0, prob, st, logg) <= 1e-6);
}

TEST_CASE("operator residual shrinks fourth order under refinement") {
  const PhProblem p = fixtures::ph_figure();
  const StateLabel st = fixtures::ph_figure_state(1, 0);
  const Problem prob = p;
  const SpectrumSolution& sol = principal(ph_solve(p, st, Branch::positive));
  const PhProfile prof = ph_wavefunction(sol, p, st, false);

  // Coarse grids away from the origin power law, so the stencil truncation
  // term dominates and halving the spacing is an exact halving.
  RadialGrid coarse;
  coarse.r_min = 0.05;
  coarse.r_max = 6.0;
  coarse.points = 1001;
  RadialGrid fine = coarse;
  fine.points = 2001;

  const double rc = ode_residual(prof, sol.energy, prob, st, coarse);
  const double rf = ode_residual(prof, sol.energy, prob, st, fine);
  CHECK(rc > 0.0);
  CHECK(rf > 0.0);
  CHECK(rc / rf >= 8.0);
}

TEST_CASE("node counts equal the radial quantum number") {
  const PhProblem p = fixtures::ph_figure();
  const Problem prob = p;
  for (int n = 0; n <= 4; ++n) {
    const StateLabel st = fixtures::ph_figure_state(n, 0);
    const SpectrumSolution& sol = principal(ph_solve(p, st, Branch::positive));
    const PhProfile prof = ph_wavefunction(sol, p, st, false);
    const RadialGrid grid = resolve_grid(RadialGrid{}, prob, st, sol.energy);
    CHECK(count_nodes(prof, grid) == n);
  }
}

TEST_CASE("an injected sign flip adds exactly one node") {
  const PhProblem p = fixtures::ph_figure();
  const StateLabel st = fixtures::ph_figure_state(1, 0);
  const Problem prob = p;
  const SpectrumSolution& sol = principal(ph_solve(p, st, Branch::positive));
  const PhProfile prof = ph_wavefunction(sol, p, st, false);
  const RadialGrid grid = resolve_grid(RadialGrid{}, prob, st, sol.energy);

  const int base = count_nodes(prof, grid);
  // flip well below the genuine node of the first excited profile
  const double node_r = std::sqrt((1.0 + prof.exponent_index()) / prof.argument_scale());
  const double flip_r = 0.5 * node_r;
  const auto flipped = [&prof, flip_r](double r) { return r < flip_r ? prof(r) : -prof(r); };
  CHECK(count_nodes(flipped, grid) == base + 1);
}

TEST_CASE("wrong energies are rejected") {
  const PhProblem p = fixtures::ph_figure();
  const StateLabel st = fixtures::ph_figure_state(0, 0);
  const Problem prob = p;
  const SpectrumSolution& sol = principal(ph_solve(p, st, Branch::positive));
  const PhProfile prof = ph_wavefunction(sol, p, st, false);
  const double at_root = ode_residual(prof, sol.energy, prob, st);

  SUBCASE("residual grows by an order of magnitude off the eigenvalue") {
    const double off = ode_residual(prof, sol.energy + 0.1, prob, st);
    CHECK(off >= 10.0 * at_root);
  }
  SUBCASE("verdict turns negative for a shifted candidate") {
    SpectrumSolution fake = sol;
    fake.energy = sol.energy + 0.1;
    const OracleVerdict verdict = confirm_solution(fake, prob, st);
    CHECK(!verdict.confirmed);
    CHECK(verdict.residual_norm > 1e-6);
  }
}

TEST_CASE("verdict follows the match-or-residual rule") {
  const PhProblem p = fixtures::ph_figure();
  const StateLabel st = fixtures::ph_figure_state(0, 0);
  const Problem prob = p;
  const SpectrumSolution& sol = principal(ph_solve(p, st, Branch::positive));

  OracleOptions strict;
  strict.confirm_tol_rel = 1e-30;
  strict.residual_tol = 1e-30;
  CHECK(!confirm_solution(sol, prob, st, RadialGrid{}, strict).confirmed);

  OracleOptions loose_residual = strict;
  loose_residual.residual_tol = 1e30;
  CHECK(confirm_solution(sol, prob, st, RadialGrid{}, loose_residual).confirmed);

  OracleOptions loose_energy = strict;
  loose_energy.confirm_tol_rel = 1e30;
  const OracleVerdict ve = confirm_solution(sol, prob, st, RadialGrid{}, loose_energy);
  REQUIRE(ve.oracle_energy.has_value());
  CHECK(ve.confirmed);
}

TEST_CASE("cornell verdicts are reported without being forced") {
  // The truncated series is not an exact solution away from special
  // parameter sets, so the numbers are recorded, not asserted.
  const CornellProblem p = fixtures::cornell_figure();
  const StateLabel st = fixtures::cornell_figure_state(0, 0);
  const Problem prob = p;
  const SolveOutcome out = cornell_solve(p, st, Branch::positive);
  REQUIRE(out.status == SolveStatus::ok);
  REQUIRE(!out.solutions.empty());
  const OracleVerdict verdict = confirm_solution(out.solutions.back(), prob, st);
  CHECK(std::isfinite(verdict.mismatch));
  CHECK(std::isfinite(verdict.residual_norm));
  CHECK(verdict.residual_norm >= 0.0);
  CHECK(verdict.node_count >= 0);
  MESSAGE("cornell verdict: residual_norm=", verdict.residual_norm,
          " mismatch=", verdict.mismatch, " nodes=", verdict.node_count,
          " oracle=", verdict.oracle_energy ? *verdict.oracle_energy : 0.0,
          " bracketed=", verdict.oracle_energy.has_value());
}

}  // TEST_SUITE
