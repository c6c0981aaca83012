#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fixtures.hpp"
#include "kgosc/cornell_spectrum.hpp"
#include "kgosc/model.hpp"
#include "kgosc/ph_spectrum.hpp"

using namespace kgosc;

TEST_SUITE("model") {

TEST_CASE("effective shift is ell minus flux minus k chi") {
  SUBCASE("unit everything cancels to -1") {
    const StateLabel st(0, 1, 1.0, 2.0);
    const FieldParams fl(0.0, 1.0, 0.0);
    const SpacetimeParams sp(1.0, 1.0);
    CHECK(effective_shift(st, fl, sp).zeta == -1.0);
  }
  SUBCASE("all zero inputs give zero regardless of chi") {
    const StateLabel st(0, 0, 0.0, 2.0);
    const SpacetimeParams sp(1.0, 17.25);
    CHECK(effective_shift(st, FieldParams(0.0, 0.0, 0.0), sp).zeta == 0.0);
  }
  SUBCASE("fractional flux and dislocation") {
    const StateLabel st(0, 3, 2.0, 2.0);
    const FieldParams fl(0.0, 0.5, 0.0);
    const SpacetimeParams sp(1.0, 0.25);
    CHECK(effective_shift(st, fl, sp).zeta == 2.0);
  }
}

TEST_CASE("constructors reject out-of-domain values") {
  CHECK_THROWS_AS(SpacetimeParams(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(SpacetimeParams(-0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(SpacetimeParams(1.5, 0.0), std::invalid_argument);
  CHECK_NOTHROW(SpacetimeParams(1.5, 0.0, true));
  CHECK_NOTHROW(SpacetimeParams(1.0, -3.0));

  CHECK_THROWS_AS(FieldParams(-0.1, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(FieldParams(0.0, 0.0, -0.1), std::invalid_argument);
  CHECK_NOTHROW(FieldParams(0.0, -2.5, 0.0));  // flux may have either sign

  CHECK_THROWS_AS(StateLabel(-1, 0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(StateLabel(0, 0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(StateLabel(0, 0, 0.0, -2.0), std::invalid_argument);
  CHECK_NOTHROW(StateLabel(0, -7, -1.0, 2.0));

  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(SpacetimeParams(nan, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(FieldParams(0.0, nan, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(CouplingSpec(nan, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(PseudoharmonicSpec(nan, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(CornellSpec(0.0, 0.0, nan, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(StateLabel(0, 0, nan, 1.0), std::invalid_argument);
}

// Two parameter sets with the same (n, zeta, k, mass) must produce pointwise
// identical residuals: the flux and the dislocation have no other channel
// into the spectrum.
TEST_CASE("zeta sufficiency for the pseudoharmonic residual") {
  // Dyadic flux/dislocation values so both routes to zeta = 1.25 are exact:
  // (ell=2, phi=0.5) and (ell=1, phi=-0.5) with the same chi = 0.25, k = 1.
  PhProblem a = fixtures::ph_limit_base();
  a.fields = FieldParams(a.fields.omega_c, 0.5, a.fields.omega);
  a.spacetime = SpacetimeParams(a.spacetime.alpha, 0.25);
  const StateLabel sa(1, 2, 1.0, 2.0);
  PhProblem b = a;
  b.fields = FieldParams(a.fields.omega_c, -0.5, a.fields.omega);
  const StateLabel sb(1, 1, 1.0, 2.0);
  REQUIRE(effective_shift(sa, a.fields, a.spacetime).zeta ==
          effective_shift(sb, b.fields, b.spacetime).zeta);

  for (double e : {-4.0, -1.0, 0.0, 3.0, 8.5, 20.0}) {
    const auto fa = ph_residual(e, a, sa);
    const auto fb = ph_residual(e, b, sb);
    REQUIRE(fa.has_value() == fb.has_value());
    if (fa) CHECK(*fa == *fb);
  }
}

TEST_CASE("zeta sufficiency for the Cornell residual") {
  CornellProblem a = fixtures::cornell_limit_base();
  a.fields = FieldParams(a.fields.omega_c, 0.5, a.fields.omega);
  a.spacetime = SpacetimeParams(a.spacetime.alpha, 0.25);
  const StateLabel sa(0, 2, 1.0, 2.0);
  CornellProblem b = a;
  b.fields = FieldParams(a.fields.omega_c, -0.5, a.fields.omega);
  const StateLabel sb(0, 1, 1.0, 2.0);
  REQUIRE(effective_shift(sa, a.fields, a.spacetime).zeta ==
          effective_shift(sb, b.fields, b.spacetime).zeta);

  for (double e : {-4.0, -1.0, 0.0, 3.0, 8.5}) {
    const auto fa = cornell_residual(e, a, sa);
    const auto fb = cornell_residual(e, b, sb);
    REQUIRE(fa.has_value() == fb.has_value());
    if (fa) CHECK(*fa == *fb);
  }
}

TEST_CASE("zeta sufficiency holds within tolerance for non-dyadic splits") {
  PhProblem a = fixtures::ph_limit_base();
  const StateLabel sa(0, 1, 1.0, 2.0);
  PhProblem b = a;
  // 0.1 + 0.3 and 0.4 are not exactly representable; allow roundoff.
  b.fields = FieldParams(a.fields.omega_c, a.fields.phi - 0.3, a.fields.omega);
  b.spacetime = SpacetimeParams(a.spacetime.alpha, a.spacetime.chi + 0.3, false);
  for (double e : {-1.0, 3.0, 8.5}) {
    const auto fa = ph_residual(e, a, sa);
    const auto fb = ph_residual(e, b, sa);
    REQUIRE(fa.has_value());
    REQUIRE(fb.has_value());
    CHECK(*fa == doctest::Approx(*fb).epsilon(1e-12));
  }
}

TEST_CASE("validation report renders one violation per line") {
  ValidationReport report;
  report.violations = {"first problem", "second problem"};
  CHECK_FALSE(report.ok());
  CHECK(report.to_string() == "first problem\nsecond problem\n");
  CHECK(ValidationReport{}.ok());
}

}  // TEST_SUITE
