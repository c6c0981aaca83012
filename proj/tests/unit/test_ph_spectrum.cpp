#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fixtures.hpp"
#include "kgosc/ode_oracle.hpp"
#include "kgosc/ph_spectrum.hpp"

using namespace kgosc;

namespace {

PhProblem bare_problem(double a1, double a2, double a3, double b, double d, double omega,
                       double omega_c, double alpha = 1.0, double phi = 0.0, double chi = 0.0) {
  return PhProblem{SpacetimeParams(alpha, chi), FieldParams(omega_c, phi, omega),
                   CouplingSpec(b, d), PseudoharmonicSpec(a1, a2, a3)};
}

}  // namespace

TEST_SUITE("ph") {

TEST_CASE("operator coefficients at fixed points") {
  SUBCASE("free case collapses to the mass shell") {
    const PhProblem p = bare_problem(0, 0, 0, 0, 0, 0, 0);
    const StateLabel st(0, 0, 0.7, 2.0);
    const PhOperatorCoeffs c = ph_operator_coeffs(2.0, p, st);
    CHECK(c.osc == 0.0);
    CHECK(c.cent == 0.0);
    CHECK(c.shift == doctest::Approx(4.0 - 0.49 - 4.0).epsilon(1e-15));
  }
  SUBCASE("harmonic coefficient from the potential alone") {
    const PhProblem p = bare_problem(1, 0, 0, 0, 0, 0, 0);
    const StateLabel st(0, 0, 0.0, 2.0);
    CHECK(ph_operator_coeffs(2.0, p, st).osc == -8.0);  // -2 a1 (E + m)
  }
}

TEST_CASE("free reduction of the residual") {
  const PhProblem p = bare_problem(0, 0, 0, 0, 0, 0, 0);
  const StateLabel st(0, 0, 1.5, 2.0);
  const double e_shell = std::sqrt(1.5 * 1.5 + 4.0);
  const auto f = ph_residual(e_shell, p, st);
  REQUIRE(f.has_value());
  CHECK(std::abs(*f) <= 1e-12);
}

TEST_CASE("free limit solve returns the rest energy pair") {
  const PhProblem p = bare_problem(0, 0, 0, 0, 0, 0, 0);
  const StateLabel st(0, 0, 0.0, 2.0);
  const SolveOutcome out = ph_solve(p, st, Branch::both);
  REQUIRE(out.status == SolveStatus::ok);
  REQUIRE(out.solutions.size() == 2);
  CHECK(out.solutions[0].energy == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(out.solutions[1].energy == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("pure magnetic closed relation is satisfied by scanned roots") {
  // no potential, no oscillator: E^2 = k^2 + m^2 + (2 m w_c / alpha) zeta
  //                                   + 2 m w_c (2n + 1 + |zeta| / alpha)
  const double alpha = 0.8, wc = 0.8, m = 2.0, k = 1.0, phi = 0.6, chi = 0.7;
  const PhProblem p = bare_problem(0, 0, 0, 0, 0, 0, wc, alpha, phi, chi);
  for (int n : {0, 2}) {
    for (int ell : {-2, 0, 1}) {
      const StateLabel st(n, ell, k, m);
      const double zeta = ell - phi - k * chi;
      const double rhs = k * k + m * m + (2.0 * m * wc / alpha) * zeta +
                         2.0 * m * wc * (2.0 * n + 1.0 + std::abs(zeta) / alpha);
      REQUIRE(rhs > 0.0);
      const SolveOutcome out = ph_solve(p, st, Branch::positive);
      REQUIRE(out.status == SolveStatus::ok);
      REQUIRE(!out.solutions.empty());
      CHECK(std::abs(out.solutions.back().energy - std::sqrt(rhs)) <= 1e-9);
    }
  }
}

TEST_CASE("figure-set ground state against the frozen shooting value") {
  // Value pinned by the independent shooting integrator before the spectral
  // code existed; agreement here ties the scan to physics, not to itself.
  const double frozen_oracle = 9.1591848491;
  const SolveOutcome out =
      ph_solve(fixtures::ph_figure(), fixtures::ph_figure_state(0, 0), Branch::positive);
  REQUIRE(out.status == SolveStatus::ok);
  REQUIRE(!out.solutions.empty());
  const SpectrumSolution& ground = out.solutions.back();
  CHECK(ground.converged);
  CHECK(std::abs(ground.energy - frozen_oracle) / frozen_oracle <= 1e-8);
  CHECK(ground.residual <= 1e-10);
}

TEST_CASE("quantization identity holds at every converged root") {
  const PhProblem p = fixtures::ph_figure();
  for (int n : {0, 1, 3}) {
    for (int ell : {-1, 0, 2}) {
      const StateLabel st(n, ell, 1.0, 2.0);
      const SolveOutcome out = ph_solve(p, st, Branch::both);
      REQUIRE(out.status == SolveStatus::ok);
      for (const auto& s : out.solutions) {
        if (!s.converged) continue;
        const PhOperatorCoeffs c = ph_operator_coeffs(s.energy, p, st);
        REQUIRE(c.osc < 0.0);
        REQUIRE(c.cent <= 0.0);
        const double lhs = c.shift;
        const double rhs =
            2.0 * std::sqrt(-c.osc) * (2.0 * st.n + 1.0 + std::sqrt(-c.cent));
        CHECK(std::abs(lhs - rhs) <= 1e-8 * (1.0 + std::abs(c.shift)));
        CHECK(s.constraint_residual <= 1e-8 * (1.0 + std::abs(c.shift)));
      }
    }
  }
}

TEST_CASE("reduced relation with flux and torsion off") {
  // With phi = chi = 0, omega = 0, a2 = a3 = 0 the root must satisfy
  // E^2 = k^2 + m^2 + 2 m w_c ell / alpha
  //       + 2 sqrt(2 a1 (E + m) + m^2 w_c^2) (2n + 1 + |ell| / alpha).
  const double alpha = 0.8, wc = 0.8, m = 2.0, k = 1.0, a1 = 1.0;
  const PhProblem p = bare_problem(a1, 0, 0, 0, 0, 0, wc, alpha);
  for (int n : {0, 1}) {
    for (int ell : {-1, 0, 3}) {
      const StateLabel st(n, ell, k, m);
      const SolveOutcome out = ph_solve(p, st, Branch::positive);
      REQUIRE(out.status == SolveStatus::ok);
      REQUIRE(!out.solutions.empty());
      const double e = out.solutions.back().energy;
      const double rhs = k * k + m * m + 2.0 * m * wc * ell / alpha +
                         2.0 * std::sqrt(2.0 * a1 * (e + m) + m * m * wc * wc) *
                             (2.0 * n + 1.0 + std::abs(ell) / alpha);
      CHECK(std::abs(e * e - rhs) <= 1e-8 * (1.0 + std::abs(rhs)));
    }
  }
}

TEST_CASE("invalid and degenerate requests are reported, not solved") {
  SUBCASE("negative a1") {
    const PhProblem p = bare_problem(-1, 0, 0, 0, 0, 0, 0);
    const SolveOutcome out = ph_solve(p, StateLabel(0, 0, 1.0, 2.0), Branch::both);
    CHECK(out.status == SolveStatus::invalid_request);
    CHECK(out.solutions.empty());
  }
  SUBCASE("inverse-square only, nothing confines") {
    const PhProblem p = bare_problem(0, 0.5, 0, 0, 0, 0, 0);
    const SolveOutcome out = ph_solve(p, StateLabel(0, 0, 1.0, 2.0), Branch::both);
    CHECK(out.status == SolveStatus::degenerate_confinement);
    CHECK(out.solutions.empty());
  }
  SUBCASE("oscillator frequency without coupling profile still degenerates") {
    // omega > 0 but b = d = 0 leaves no r^2 term either
    const PhProblem p = bare_problem(0, 0, 0.3, 0, 0, 0.5, 0);
    const SolveOutcome out = ph_solve(p, StateLabel(0, 0, 1.0, 2.0), Branch::both);
    CHECK(out.status == SolveStatus::degenerate_confinement);
  }
}

TEST_CASE("residual undefined region forms a single low-energy interval") {
  // R1 and R2 are linear in E with positive slope here, so the defined set is
  // a half line; scanning must report the rest as one gap.
  const PhProblem p = fixtures::ph_limit_base();
  const StateLabel st(0, 1, 1.0, 2.0);
  ScanConfig scan = ph_default_scan(p, st);
  const SolveOutcome out = ph_solve(p, st, scan, Branch::both);
  REQUIRE(out.status == SolveStatus::ok);
  REQUIRE(!out.gaps.empty());
  CHECK(out.gaps.front().first <= scan.e_min + 1e-12);
  for (const auto& g : out.gaps) CHECK(g.second < 0.0);  // undefined only below -m-ish
}

TEST_CASE("profile shape and normalization") {
  const PhProblem p = fixtures::ph_figure();
  const StateLabel st = fixtures::ph_figure_state(2, 0);
  const SolveOutcome out = ph_solve(p, st, Branch::positive);
  REQUIRE(out.status == SolveStatus::ok);
  REQUIRE(!out.solutions.empty());
  const SpectrumSolution& s = out.solutions.back();

  const PhProfile raw = ph_wavefunction(s, p, st, false);
  CHECK(raw.normalization() == 1.0);
  CHECK(raw.exponent_index() >= 0.0);
  CHECK(raw.gaussian_rate() > 0.0);
  CHECK(raw.degree() == 2);
  CHECK(raw.suggested_cutoff() > 1.0);

  const PhProfile normed = ph_wavefunction(s, p, st, true);
  // independent check of the quadrature: midpoint rule on a fine mesh
  const double cut = normed.suggested_cutoff();
  const int cells = 200000;
  const double h = cut / cells;
  double integral = 0.0;
  for (int i = 0; i < cells; ++i) {
    const double r = (i + 0.5) * h;
    const double v = normed(r);
    integral += v * v * r * h;
  }
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("profile request fails away from a bound-state energy") {
  const PhProblem p = fixtures::ph_limit_base();
  const StateLabel st(0, 1, 1.0, 2.0);
  SpectrumSolution fake;
  fake.energy = -40.0;  // deep in the undefined region: R1 < 0 there
  fake.converged = true;
  CHECK_THROWS_AS(ph_wavefunction(fake, p, st, false), std::domain_error);
}

}  // TEST_SUITE
