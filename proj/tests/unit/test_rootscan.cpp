#include <doctest.h>

#include <cmath>
#include <optional>

#include "kgosc/rootscan.hpp"

using namespace kgosc;

namespace {

PartialFn total(double (*f)(double)) {
  return [f](double e) -> std::optional<double> { return f(e); };
}

}  // namespace

TEST_SUITE("rootscan") {

TEST_CASE("refines a quadratic root") {
  ScanConfig cfg;
  const RootResult r = find_root(total(+[](double e) { return e * e - 4.0; }), 0.0, 10.0, cfg);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 2.0) <= 1e-12);
  CHECK(r.residual <= cfg.abs_tol);
  CHECK(r.bracket_hi - r.bracket_lo <= cfg.width_tol);
}

TEST_CASE("identity function root at zero") {
  ScanConfig cfg;
  const RootResult r = find_root(total(+[](double e) { return e; }), -1.0, 1.0, cfg);
  CHECK(r.converged);
  CHECK(std::abs(r.value) <= 1e-12);
}

TEST_CASE("missing sign change and undefined endpoints are errors") {
  ScanConfig cfg;
  CHECK_THROWS_AS(find_root(total(+[](double e) { return e * e + 1.0; }), -1.0, 1.0, cfg),
                  NoSignChangeError);
  const PartialFn partial = [](double e) -> std::optional<double> {
    if (e < 0.0) return std::nullopt;
    return e - 0.5;
  };
  CHECK_THROWS_AS(find_root(partial, -1.0, 1.0, cfg), UndefinedEndpointError);
}

TEST_CASE("scan finds both roots of a factored polynomial") {
  ScanConfig cfg;
  cfg.e_min = -5.0;
  cfg.e_max = 5.0;
  cfg.grid_points = 101;
  const ScanOutcome out = scan_roots(total(+[](double e) { return (e - 1.0) * (e + 1.0); }), cfg);
  REQUIRE(out.roots.size() == 2);
  CHECK(std::abs(out.roots[0].value + 1.0) <= 1e-10);
  CHECK(std::abs(out.roots[1].value - 1.0) <= 1e-10);
  CHECK(out.gaps.empty());
}

TEST_CASE("scan of a rootless function is empty") {
  ScanConfig cfg;
  cfg.e_min = -5.0;
  cfg.e_max = 5.0;
  const ScanOutcome out = scan_roots(total(+[](double e) { return e * e + 1.0; }), cfg);
  CHECK(out.roots.empty());
  CHECK(out.warnings.empty());
}

TEST_CASE("root location is invariant under rescaling") {
  const auto root_at_scale = [](double c) {
    const PartialFn f = [c](double e) -> std::optional<double> {
      return c * (std::cos(e) - e * 0.3);
    };
    ScanConfig cfg;
    return find_root(f, 0.0, 3.0, cfg).value;
  };
  const double base = root_at_scale(1.0);
  CHECK(std::abs(std::cos(base) - 0.3 * base) <= 1e-10);
  for (double c : {1e-6, 1e-3, 1e3, 1e6})
    CHECK(std::abs(root_at_scale(c) - base) <= 1e-10);
}

TEST_CASE("undefined stretches become gaps, not sign changes") {
  // Defined only on |e| >= 1, negative at -1.5, positive at +1.5; the sign
  // flip happens across the undefined middle and must not be reported as a
  // root.
  const PartialFn f = [](double e) -> std::optional<double> {
    if (std::abs(e) < 1.0) return std::nullopt;
    return e > 0.0 ? 2.0 : -2.0;
  };
  ScanConfig cfg;
  cfg.e_min = -2.0;
  cfg.e_max = 2.0;
  cfg.grid_points = 81;
  const ScanOutcome out = scan_roots(f, cfg);
  CHECK(out.roots.empty());
  REQUIRE(out.gaps.size() == 1);
  CHECK(out.gaps[0].first <= -0.95);
  CHECK(out.gaps[0].second >= 0.95);
}

TEST_CASE("exact zero samples are picked up directly") {
  ScanConfig cfg;
  cfg.e_min = -5.0;
  cfg.e_max = 5.0;
  cfg.grid_points = 11;  // integer step lands a sample exactly on 0
  const ScanOutcome out = scan_roots(total(+[](double e) { return e; }), cfg);
  REQUIRE(out.roots.size() == 1);
  CHECK(out.roots[0].value == 0.0);
  CHECK(out.roots[0].converged);
}

TEST_CASE("tangency handling") {
  SUBCASE("touch point on a sample is an exact root") {
    ScanConfig cfg;
    cfg.e_min = 0.0;
    cfg.e_max = 2.0;
    cfg.grid_points = 3;  // samples 0, 1, 2; the touch lands on 1 exactly
    const ScanOutcome out =
        scan_roots(total(+[](double e) { return (e - 1.0) * (e - 1.0); }), cfg);
    REQUIRE(out.roots.size() == 1);
    CHECK(out.roots[0].value == 1.0);
    CHECK(out.warnings.empty());
  }
  SUBCASE("touch point between samples is a warning, not a root") {
    ScanConfig cfg;
    cfg.e_min = 0.0;
    cfg.e_max = 2.1;  // asymmetric window so no sample pair straddles 1 evenly
    cfg.grid_points = 1001;
    const ScanOutcome out =
        scan_roots(total(+[](double e) { return (e - 1.0) * (e - 1.0); }), cfg);
    CHECK(out.roots.empty());
    CHECK(!out.warnings.empty());
  }
}

TEST_CASE("polynomial with separated simple roots is fully recovered") {
  const PartialFn f = [](double e) -> std::optional<double> {
    return (e + 3.0) * (e - 0.5) * (e - 2.0) * (e - 4.25);
  };
  ScanConfig cfg;
  cfg.e_min = -5.0;
  cfg.e_max = 5.0;
  cfg.grid_points = 501;
  const ScanOutcome out = scan_roots(f, cfg);
  REQUIRE(out.roots.size() == 4);
  const double expect[] = {-3.0, 0.5, 2.0, 4.25};
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(out.roots[i].value - expect[i]) <= 1e-10);
    CHECK(out.roots[i].residual <= cfg.abs_tol);
  }
}

}  // TEST_SUITE
