#include "kgosc/ph_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace kgosc {

namespace {

std::optional<double> guarded_sqrt(double radicand) {
  if (radicand < 0.0) return std::nullopt;
  return std::sqrt(radicand);
}

// True when the r^2 radicand is identically zero in E, i.e. the well has no
// oscillator term at any energy.
bool degenerate_r2_radicand(const PhProblem& p) {
  return p.potential.a1 == 0.0 && p.fields.omega * p.coupling.b == 0.0 &&
         p.fields.omega_c == 0.0;
}

Branch sign_branch(double energy) { return energy >= 0.0 ? Branch::positive : Branch::negative; }

bool branch_accepts(Branch wanted, Branch got) {
  return wanted == Branch::both || wanted == got;
}

}  // namespace

PhOperatorCoeffs ph_operator_coeffs(double energy, const PhProblem& problem,
                                    const StateLabel& state) {
  const double m = state.mass;
  const double zeta = effective_shift(state, problem.fields, problem.spacetime).zeta;
  const double alpha = problem.spacetime.alpha;
  const double mo = m * problem.fields.omega;   // mass times oscillator frequency
  const double mw = m * problem.fields.omega_c; // mass times cyclotron frequency
  const double b = problem.coupling.b;
  const double d = problem.coupling.d;
  const auto& a = problem.potential;

  PhOperatorCoeffs c;
  c.osc = -(2.0 * a.a1 * (energy + m) + mo * mo * b * b + mw * mw);
  c.cent = -(2.0 * a.a2 * (energy + m) + mo * mo * d * d + (zeta / alpha) * (zeta / alpha));
  c.shift = energy * energy - state.k * state.k - m * m - 2.0 * a.a3 * (energy + m) -
            2.0 * mo * b - 2.0 * mo * mo * b * d - (2.0 * mw / alpha) * zeta;
  return c;
}

std::optional<double> ph_residual(double energy, const PhProblem& problem,
                                  const StateLabel& state) {
  const PhOperatorCoeffs c = ph_operator_coeffs(energy, problem, state);
  const auto osc_root = guarded_sqrt(-c.osc);
  const auto cent_root = guarded_sqrt(-c.cent);
  if (!osc_root || !cent_root) return std::nullopt;
  return c.shift - 2.0 * (*osc_root) * (2.0 * state.n + 1.0 + *cent_root);
}

ScanConfig ph_default_scan(const PhProblem& problem, const StateLabel& state) {
  const auto& a = problem.potential;
  double scale = std::max({std::abs(problem.fields.omega_c), std::abs(problem.fields.omega),
                           std::abs(a.a1), std::abs(a.a2), std::abs(a.a3),
                           std::abs(problem.coupling.b), std::abs(problem.coupling.d)});
  ScanConfig scan;
  scan.e_max = state.mass + 50.0 * scale;
  scan.e_min = -scan.e_max;
  return scan;
}

SolveOutcome ph_solve(const PhProblem& problem, const StateLabel& state,
                      const ScanConfig& scan, Branch branch) {
  SolveOutcome out;

  if (problem.potential.a1 < 0.0) {
    out.status = SolveStatus::invalid_request;
    out.message = "a1 must be nonnegative for a bound-state search";
    return out;
  }

  if (degenerate_r2_radicand(problem)) {
    const auto& a = problem.potential;
    const bool free_or_magnetic =
        a.a1 == 0.0 && a.a2 == 0.0 && a.a3 == 0.0 && problem.fields.omega == 0.0;
    if (!free_or_magnetic) {
      out.status = SolveStatus::degenerate_confinement;
      out.message = "degenerate-confinement: no r^2 term at any energy, spectrum not discrete";
      return out;
    }
    // Closed-form magnetic/free spectrum; the oscillator term contributes
    // nothing, so the scan machinery has nothing to bracket.
    const double m = state.mass;
    const double alpha = problem.spacetime.alpha;
    const double wc = problem.fields.omega_c;
    const double zeta = effective_shift(state, problem.fields, problem.spacetime).zeta;
    const double radicand = state.k * state.k + m * m + (2.0 * m * wc / alpha) * zeta +
                            2.0 * std::abs(m * wc) * (2.0 * state.n + 1.0 + std::abs(zeta) / alpha);
    if (radicand < 0.0) {
      out.message = "closed-form radicand negative, no real level";
      return out;
    }
    const double e0 = std::sqrt(radicand);
    for (double e : {-e0, e0}) {
      const Branch sign = sign_branch(e);
      if (!branch_accepts(branch, sign)) continue;
      SpectrumSolution s;
      s.energy = e;
      const auto f = ph_residual(e, problem, state);
      s.residual = f ? std::abs(*f) : 0.0;
      s.sign = sign;
      s.bracket_lo = s.bracket_hi = e;
      s.converged = true;
      const PhOperatorCoeffs c = ph_operator_coeffs(e, problem, state);
      s.constraint_residual = std::abs(c.shift - 2.0 * std::sqrt(-c.osc) *
                                                     (2.0 * state.n + 1.0 + std::sqrt(-c.cent)));
      out.solutions.push_back(s);
    }
    return out;
  }

  const PartialFn f = [&problem, &state](double e) { return ph_residual(e, problem, state); };
  const ScanOutcome scanned = scan_roots(f, scan);
  out.gaps = scanned.gaps;
  for (const auto& r : scanned.roots) {
    const Branch sign = sign_branch(r.value);
    if (!branch_accepts(branch, sign)) continue;
    SpectrumSolution s;
    s.energy = r.value;
    s.residual = r.residual;
    s.sign = sign;
    s.bracket_lo = r.bracket_lo;
    s.bracket_hi = r.bracket_hi;
    s.iterations = r.iterations;
    s.converged = r.converged;
    const PhOperatorCoeffs c = ph_operator_coeffs(r.value, problem, state);
    if (c.osc < 0.0 && c.cent <= 0.0)
      s.constraint_residual = std::abs(
          c.shift - 2.0 * std::sqrt(-c.osc) * (2.0 * state.n + 1.0 + std::sqrt(-c.cent)));
    out.solutions.push_back(s);
  }
  return out;
}

SolveOutcome ph_solve(const PhProblem& problem, const StateLabel& state, Branch branch) {
  return ph_solve(problem, state, ph_default_scan(problem, state), branch);
}

PhProfile::PhProfile(double normalization, double exponent_index, double gaussian_rate, int degree)
    : norm_(normalization), power_(exponent_index), gauss_(gaussian_rate), degree_(degree) {
  if (!(power_ >= 0.0) || !(gauss_ > 0.0) || degree_ < 0)
    throw std::domain_error("profile parameters do not describe a bound state");
}

double PhProfile::operator()(double r) const {
  if (!(r >= 0.0)) throw std::domain_error("profile argument must be >= 0");
  return norm_ * std::pow(r, power_) * std::exp(-gauss_ * r * r) *
         laguerre(LaguerreOrder(degree_, power_), 2.0 * gauss_ * r * r);
}

double PhProfile::suggested_cutoff() const {
  const double drop = std::log(1e18);
  double r = std::sqrt(drop / gauss_);
  for (int i = 0; i < 3; ++i)
    r = std::sqrt((drop + power_ * std::log(std::max(r, 1.0))) / gauss_);
  return r;
}

PhProfile ph_wavefunction(const SpectrumSolution& solution, const PhProblem& problem,
                          const StateLabel& state, bool normalized) {
  const PhOperatorCoeffs c = ph_operator_coeffs(solution.energy, problem, state);
  if (!(c.osc < 0.0) || !(c.cent <= 0.0))
    throw std::domain_error("operator coefficients at this energy are not bound-state shaped");

  const double gauss = 0.5 * std::sqrt(-c.osc);
  const double power = std::sqrt(-c.cent);
  PhProfile raw(1.0, power, gauss, state.n);
  if (!normalized) return raw;

  using boost::math::quadrature::gauss_kronrod;
  const double cut = raw.suggested_cutoff();
  const auto density = [&raw](double r) {
    const double v = raw(r);
    return v * v * r;  // cylindrical radial measure
  };
  const double mass2 = gauss_kronrod<double, 15>::integrate(density, 0.0, cut, 15, 1e-10);
  if (!(mass2 > 0.0) || !std::isfinite(mass2))
    throw std::domain_error("profile normalization integral is not positive");
  return PhProfile(1.0 / std::sqrt(mass2), power, gauss, state.n);
}

PhLimitCase ph_limit(PhLimit which, const PhProblem& base, const StateLabel& state) {
  PhProblem forced = base;
  const double m = state.mass;
  const double k = state.k;
  const double n = state.n;
  const double ell = state.ell;

  switch (which) {
    case PhLimit::linear_coupling: {
      forced.potential = PseudoharmonicSpec(0.0, 0.0, 0.0);
      forced.coupling = CouplingSpec(1.0, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double w = forced.fields.omega;
      const double wc = forced.fields.omega_c;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      return {forced, [=](double e) -> std::optional<double> {
                return e * e - (k * k + m * m + 2.0 * m * w + (2.0 * m * wc / alpha) * zeta +
                                2.0 * m * std::sqrt(w * w + wc * wc) *
                                    (2.0 * n + 1.0 + std::abs(zeta) / alpha));
              }};
    }
    case PhLimit::minimal: {
      forced.fields = FieldParams(base.fields.omega_c, base.fields.phi, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double wc = forced.fields.omega_c;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const auto a = forced.potential;
      return {forced, [=](double e) -> std::optional<double> {
                const auto r1 = guarded_sqrt(2.0 * a.a1 * (e + m) + m * m * wc * wc);
                const auto r2 = guarded_sqrt(2.0 * a.a2 * (e + m) + zeta * zeta / (alpha * alpha));
                if (!r1 || !r2) return std::nullopt;
                return e * e - (k * k + m * m + 2.0 * a.a3 * (e + m) +
                                (2.0 * m * wc / alpha) * zeta +
                                2.0 * (*r1) * (2.0 * n + 1.0 + *r2));
              }};
    }
    case PhLimit::minimal_zero_field: {
      forced.fields = FieldParams(0.0, base.fields.phi, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const auto a = forced.potential;
      return {forced, [=](double e) -> std::optional<double> {
                const auto r1 = guarded_sqrt(2.0 * a.a1 * (e + m));
                const auto r2 = guarded_sqrt(2.0 * a.a2 * (e + m) + zeta * zeta / (alpha * alpha));
                if (!r1 || !r2) return std::nullopt;
                return e * e - (k * k + m * m + 2.0 * a.a3 * (e + m) +
                                2.0 * (*r1) * (2.0 * n + 1.0 + *r2));
              }};
    }
    case PhLimit::zero_field: {
      forced.fields = FieldParams(0.0, base.fields.phi, base.fields.omega);
      const double alpha = forced.spacetime.alpha;
      const double w = forced.fields.omega;
      const double b = forced.coupling.b;
      const double d = forced.coupling.d;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const auto a = forced.potential;
      return {forced, [=](double e) -> std::optional<double> {
                const auto r1 = guarded_sqrt(2.0 * a.a1 * (e + m) + m * m * w * w * b * b);
                const auto r2 = guarded_sqrt(2.0 * a.a2 * (e + m) + m * m * w * w * d * d +
                                             zeta * zeta / (alpha * alpha));
                if (!r1 || !r2) return std::nullopt;
                return e * e -
                       (k * k + m * m + 2.0 * a.a3 * (e + m) + 2.0 * m * w * b +
                        2.0 * m * m * w * w * b * d + 2.0 * (*r1) * (2.0 * n + 1.0 + *r2));
              }};
    }
    case PhLimit::zero_field_no_flux: {
      forced.fields = FieldParams(0.0, 0.0, base.fields.omega);
      const double alpha = forced.spacetime.alpha;
      const double chi = forced.spacetime.chi;
      const double w = forced.fields.omega;
      const double b = forced.coupling.b;
      const double d = forced.coupling.d;
      const auto a = forced.potential;
      const double shift = ell - k * chi;  // flux removed, dislocation kept
      return {forced, [=](double e) -> std::optional<double> {
                const auto r1 = guarded_sqrt(2.0 * a.a1 * (e + m) + m * m * w * w * b * b);
                const auto r2 = guarded_sqrt(2.0 * a.a2 * (e + m) + m * m * w * w * d * d +
                                             shift * shift / (alpha * alpha));
                if (!r1 || !r2) return std::nullopt;
                return e * e -
                       (k * k + m * m + 2.0 * a.a3 * (e + m) + 2.0 * m * w * b +
                        2.0 * m * m * w * w * b * d + 2.0 * (*r1) * (2.0 * n + 1.0 + *r2));
              }};
    }
    case PhLimit::harmonic: {
      forced.potential = PseudoharmonicSpec(base.potential.a1, 0.0, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double w = forced.fields.omega;
      const double wc = forced.fields.omega_c;
      const double b = forced.coupling.b;
      const double d = forced.coupling.d;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const double a1 = forced.potential.a1;
      return {forced, [=](double e) -> std::optional<double> {
                const auto r1 =
                    guarded_sqrt(2.0 * a1 * (e + m) + m * m * w * w * b * b + m * m * wc * wc);
                const double r2 =
                    std::sqrt(m * m * w * w * d * d + zeta * zeta / (alpha * alpha));
                if (!r1) return std::nullopt;
                return e * e - (k * k + m * m + 2.0 * m * w * b + 2.0 * m * m * w * w * b * d +
                                (2.0 * m * wc / alpha) * zeta +
                                2.0 * (*r1) * (2.0 * n + 1.0 + r2));
              }};
    }
    case PhLimit::harmonic_minimal: {
      forced.potential = PseudoharmonicSpec(base.potential.a1, 0.0, 0.0);
      forced.fields = FieldParams(base.fields.omega_c, base.fields.phi, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double wc = forced.fields.omega_c;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const double a1 = forced.potential.a1;
      return {forced, [=](double e) -> std::optional<double> {
                const auto r1 = guarded_sqrt(2.0 * a1 * (e + m) + m * m * wc * wc);
                if (!r1) return std::nullopt;
                return e * e - (k * k + m * m + (2.0 * m * wc / alpha) * zeta +
                                2.0 * (*r1) * (2.0 * n + 1.0 + std::abs(zeta) / alpha));
              }};
    }
    case PhLimit::harmonic_minimal_no_defects: {
      forced.potential = PseudoharmonicSpec(base.potential.a1, 0.0, 0.0);
      forced.fields = FieldParams(base.fields.omega_c, 0.0, 0.0);
      forced.spacetime = SpacetimeParams(base.spacetime.alpha, 0.0, true);
      const double alpha = forced.spacetime.alpha;
      const double wc = forced.fields.omega_c;
      const double a1 = forced.potential.a1;
      return {forced, [=](double e) -> std::optional<double> {
                const auto r1 = guarded_sqrt(2.0 * a1 * (e + m) + m * m * wc * wc);
                if (!r1) return std::nullopt;
                return e * e - (k * k + m * m + 2.0 * m * wc * ell / alpha +
                                2.0 * (*r1) * (2.0 * n + 1.0 + std::abs(ell) / alpha));
              }};
    }
    case PhLimit::inverse_square: {
      forced.potential = PseudoharmonicSpec(0.0, base.potential.a2, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double w = forced.fields.omega;
      const double wc = forced.fields.omega_c;
      const double b = forced.coupling.b;
      const double d = forced.coupling.d;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const double a2 = forced.potential.a2;
      return {forced, [=](double e) -> std::optional<double> {
                const double r1 = std::sqrt(m * m * w * w * b * b + m * m * wc * wc);
                const auto r2 = guarded_sqrt(2.0 * a2 * (e + m) + m * m * w * w * d * d +
                                             zeta * zeta / (alpha * alpha));
                if (!r2) return std::nullopt;
                return e * e - (k * k + m * m + 2.0 * m * w * b + 2.0 * m * m * w * w * b * d +
                                (2.0 * m * wc / alpha) * zeta +
                                2.0 * r1 * (2.0 * n + 1.0 + *r2));
              }};
    }
    case PhLimit::inverse_square_minimal: {
      forced.potential = PseudoharmonicSpec(0.0, base.potential.a2, 0.0);
      forced.fields = FieldParams(base.fields.omega_c, base.fields.phi, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double wc = forced.fields.omega_c;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const double a2 = forced.potential.a2;
      return {forced, [=](double e) -> std::optional<double> {
                const auto r2 = guarded_sqrt(2.0 * a2 * (e + m) + zeta * zeta / (alpha * alpha));
                if (!r2) return std::nullopt;
                return e * e - (k * k + m * m + (2.0 * m * wc / alpha) * zeta +
                                2.0 * m * wc * (2.0 * n + 1.0 + *r2));
              }};
    }
    case PhLimit::inverse_square_minimal_no_defects: {
      forced.potential = PseudoharmonicSpec(0.0, base.potential.a2, 0.0);
      forced.fields = FieldParams(base.fields.omega_c, 0.0, 0.0);
      forced.spacetime = SpacetimeParams(base.spacetime.alpha, 0.0, true);
      const double alpha = forced.spacetime.alpha;
      const double wc = forced.fields.omega_c;
      const double a2 = forced.potential.a2;
      return {forced, [=](double e) -> std::optional<double> {
                const auto r2 =
                    guarded_sqrt(2.0 * a2 * (e + m) + ell * ell / (alpha * alpha));
                if (!r2) return std::nullopt;
                return e * e - (k * k + m * m + 2.0 * m * wc * ell / alpha +
                                2.0 * m * wc * (2.0 * n + 1.0 + *r2));
              }};
    }
    case PhLimit::magnetic_only: {
      forced.potential = PseudoharmonicSpec(0.0, 0.0, 0.0);
      forced.fields = FieldParams(base.fields.omega_c, base.fields.phi, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double wc = forced.fields.omega_c;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      return {forced, [=](double e) -> std::optional<double> {
                return e * e - (k * k + m * m + (2.0 * m * wc / alpha) * zeta +
                                2.0 * std::abs(m * wc) *
                                    (2.0 * n + 1.0 + std::abs(zeta / alpha)));
              }};
    }
  }
  throw std::logic_error("unknown pseudoharmonic limit case");
}

const char* ph_limit_name(PhLimit which) {
  switch (which) {
    case PhLimit::linear_coupling: return "linear_coupling";
    case PhLimit::minimal: return "minimal";
    case PhLimit::minimal_zero_field: return "minimal_zero_field";
    case PhLimit::zero_field: return "zero_field";
    case PhLimit::zero_field_no_flux: return "zero_field_no_flux";
    case PhLimit::harmonic: return "harmonic";
    case PhLimit::harmonic_minimal: return "harmonic_minimal";
    case PhLimit::harmonic_minimal_no_defects: return "harmonic_minimal_no_defects";
    case PhLimit::inverse_square: return "inverse_square";
    case PhLimit::inverse_square_minimal: return "inverse_square_minimal";
    case PhLimit::inverse_square_minimal_no_defects: return "inverse_square_minimal_no_defects";
    case PhLimit::magnetic_only: return "magnetic_only";
  }
  return "?";
}

}  // namespace kgosc
