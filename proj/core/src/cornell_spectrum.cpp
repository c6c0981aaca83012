#include "kgosc/cornell_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace kgosc {

namespace {

Branch sign_branch(double energy) { return energy >= 0.0 ? Branch::positive : Branch::negative; }

bool branch_accepts(Branch wanted, Branch got) {
  return wanted == Branch::both || wanted == got;
}

}  // namespace

CornellOperatorCoeffs cornell_operator_coeffs(double energy, const CornellProblem& problem,
                                              const StateLabel& state) {
  const double m = state.mass;
  const double zeta = effective_shift(state, problem.fields, problem.spacetime).zeta;
  const double alpha = problem.spacetime.alpha;
  const double mo = m * problem.fields.omega;
  const double mw = m * problem.fields.omega_c;
  const double b = problem.coupling.b;
  const double d = problem.coupling.d;
  const auto& p = problem.potential;

  CornellOperatorCoeffs c;
  c.cent = -(mo * mo * d * d + p.s1 * p.s1 - p.v1 * p.v1 + (zeta / alpha) * (zeta / alpha));
  c.coulomb = -2.0 * (energy * p.v1 + m * p.s1);
  c.shift = energy * energy - state.k * state.k - m * m - 2.0 * mo * b - 2.0 * mo * mo * b * d -
            2.0 * (p.s0 * p.s1 - p.v0 * p.v1) - (2.0 * mw / alpha) * zeta;
  c.linear = -2.0 * (energy * p.v0 + m * p.s0);
  c.osc = -(mo * mo * b * b + mw * mw + p.s0 * p.s0 - p.v0 * p.v0);
  return c;
}

double cornell_confinement_sq(const CornellProblem& problem, const StateLabel& state) {
  const double m = state.mass;
  const double mo = m * problem.fields.omega;
  const double mw = m * problem.fields.omega_c;
  const auto& p = problem.potential;
  return p.s0 * p.s0 - p.v0 * p.v0 + mo * mo * problem.coupling.b * problem.coupling.b + mw * mw;
}

double cornell_index_sq(const CornellProblem& problem, const StateLabel& state) {
  const double m = state.mass;
  const double zeta = effective_shift(state, problem.fields, problem.spacetime).zeta;
  const double alpha = problem.spacetime.alpha;
  const double mo = m * problem.fields.omega;
  const auto& p = problem.potential;
  return p.s1 * p.s1 - p.v1 * p.v1 + mo * mo * problem.coupling.d * problem.coupling.d +
         (zeta / alpha) * (zeta / alpha);
}

CornellEnvelope cornell_envelope(double energy, const CornellProblem& problem,
                                 const StateLabel& state) {
  const double conf = cornell_confinement_sq(problem, state);
  if (!(conf > 0.0))
    throw NonconfiningError("Cornell envelope rate is not positive, nothing confines");
  const double idx = cornell_index_sq(problem, state);
  if (idx < 0.0)
    throw ComplexIndexError("Cornell origin index would be complex");

  CornellEnvelope env;
  env.power = std::sqrt(idx);
  env.gauss = 0.5 * std::sqrt(conf);
  env.slope = (state.mass * problem.potential.s0 + energy * problem.potential.v0) /
              std::sqrt(conf);
  return env;
}

std::optional<double> cornell_residual(double energy, const CornellProblem& problem,
                                       const StateLabel& state) {
  if (!(cornell_confinement_sq(problem, state) > 0.0)) return std::nullopt;
  if (cornell_index_sq(problem, state) < 0.0) return std::nullopt;
  const CornellOperatorCoeffs c = cornell_operator_coeffs(energy, problem, state);
  const CornellEnvelope env = cornell_envelope(energy, problem, state);
  return c.shift + env.slope * env.slope -
         4.0 * env.gauss * (state.n + 1.0 + env.power);
}

ScanConfig cornell_default_scan(const CornellProblem& problem, const StateLabel& state) {
  const auto& p = problem.potential;
  double scale = std::max({std::abs(problem.fields.omega_c), std::abs(problem.fields.omega),
                           std::abs(p.v0), std::abs(p.v1), std::abs(p.s0), std::abs(p.s1),
                           std::abs(problem.coupling.b), std::abs(problem.coupling.d)});
  ScanConfig scan;
  scan.e_max = state.mass + 50.0 * scale;
  scan.e_min = -scan.e_max;
  return scan;
}

SolveOutcome cornell_solve(const CornellProblem& problem, const StateLabel& state,
                           const ScanConfig& scan, Branch branch) {
  SolveOutcome out;
  if (!(cornell_confinement_sq(problem, state) > 0.0)) {
    out.status = SolveStatus::nonconfining;
    out.message = "envelope rate not positive: s0^2 - v0^2 + (m omega b)^2 + (m omega_c)^2 <= 0";
    return out;
  }
  if (cornell_index_sq(problem, state) < 0.0) {
    out.status = SolveStatus::complex_index;
    out.message = "origin index radicand negative, level outside the solvable construction";
    return out;
  }

  const PartialFn f = [&problem, &state](double e) { return cornell_residual(e, problem, state); };
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
    const CornellOperatorCoeffs c = cornell_operator_coeffs(r.value, problem, state);
    const CornellEnvelope env = cornell_envelope(r.value, problem, state);
    s.constraint_residual = std::abs(c.shift + env.slope * env.slope -
                                     4.0 * env.gauss * (state.n + 1.0 + env.power));
    s.truncation = qes_coefficients(r.value, problem, state).truncation_residual;
    out.solutions.push_back(s);
  }
  return out;
}

SolveOutcome cornell_solve(const CornellProblem& problem, const StateLabel& state, Branch branch) {
  return cornell_solve(problem, state, cornell_default_scan(problem, state), branch);
}

QesPolynomial qes_coefficients(double energy, const CornellProblem& problem,
                               const StateLabel& state) {
  const CornellOperatorCoeffs c = cornell_operator_coeffs(energy, problem, state);
  const CornellEnvelope env = cornell_envelope(energy, problem, state);
  const double A = env.power;
  const double B = env.gauss;
  const double D = env.slope;

  QesPolynomial out;
  out.coeffs.assign(static_cast<size_t>(state.n) + 1, 0.0);
  out.coeffs[0] = 1.0;

  double prev = 0.0;  // a_{j}, starting at a_{-1}
  double curr = 1.0;  // a_{j+1}, starting at a_0
  double next = 0.0;
  for (int j = -1; j < state.n; ++j) {
    const double denom = (j + 2.0) * (2.0 * A + 2.0 + j);
    const double with_curr = 2.0 * D * (j + 1.0) - c.coulomb + 2.0 * A * D + D;
    const double with_prev = 8.0 * B * j - c.shift + 4.0 * A * B - D * D;
    next = (with_curr * curr + with_prev * prev) / denom;
    if (j + 2 <= state.n) out.coeffs[static_cast<size_t>(j) + 2] = next;
    prev = curr;
    curr = next;
  }
  // One extra step past the kept degree gives the truncation diagnostic.
  out.truncation_residual = std::abs(next);
  return out;
}

CornellProfile::CornellProfile(double normalization, CornellEnvelope envelope,
                               std::vector<double> coeffs)
    : norm_(normalization), env_(envelope), coeffs_(std::move(coeffs)) {
  if (!(env_.power >= 0.0) || !(env_.gauss > 0.0) || coeffs_.empty())
    throw std::domain_error("profile parameters do not describe a bound state");
}

double CornellProfile::operator()(double r) const {
  if (!(r >= 0.0)) throw std::domain_error("profile argument must be >= 0");
  double poly = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) poly = poly * r + *it;
  return norm_ * std::pow(r, env_.power) * std::exp(-env_.gauss * r * r - env_.slope * r) * poly;
}

double CornellProfile::suggested_cutoff() const {
  const double drop = std::log(1e18);
  double r = std::sqrt(drop / env_.gauss);
  for (int i = 0; i < 4; ++i) {
    const double t = drop + env_.power * std::log(std::max(r, 1.0)) - env_.slope * r;
    r = std::sqrt(std::max(t, 1.0) / env_.gauss);
  }
  return r;
}

CornellProfile cornell_wavefunction(const SpectrumSolution& solution,
                                    const CornellProblem& problem, const StateLabel& state,
                                    bool normalized) {
  const CornellEnvelope env = cornell_envelope(solution.energy, problem, state);
  QesPolynomial poly = qes_coefficients(solution.energy, problem, state);
  CornellProfile raw(1.0, env, std::move(poly.coeffs));
  if (!normalized) return raw;

  using boost::math::quadrature::gauss_kronrod;
  const double cut = raw.suggested_cutoff();
  const auto density = [&raw](double r) {
    const double v = raw(r);
    return v * v * r;
  };
  const double mass2 = gauss_kronrod<double, 15>::integrate(density, 0.0, cut, 15, 1e-10);
  if (!(mass2 > 0.0) || !std::isfinite(mass2))
    throw std::domain_error("profile normalization integral is not positive");
  return CornellProfile(1.0 / std::sqrt(mass2), env, raw.coeffs());
}

namespace {

std::optional<double> guarded_sqrt(double radicand) {
  if (radicand < 0.0) return std::nullopt;
  return std::sqrt(radicand);
}

}  // namespace

CornellLimitCase cornell_limit(CornellLimit which, const CornellProblem& base,
                               const StateLabel& state) {
  CornellProblem forced = base;
  const double m = state.mass;
  const double k = state.k;
  const double n = state.n;
  const double ell = state.ell;

  switch (which) {
    case CornellLimit::minimal: {
      forced.fields = FieldParams(base.fields.omega_c, base.fields.phi, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double wc = forced.fields.omega_c;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const auto p = forced.potential;
      return {forced, [=](double e) -> std::optional<double> {
                const double conf = p.s0 * p.s0 - p.v0 * p.v0 + m * m * wc * wc;
                if (!(conf > 0.0)) return std::nullopt;
                const auto idx = guarded_sqrt(p.s1 * p.s1 - p.v1 * p.v1 +
                                              zeta * zeta / (alpha * alpha));
                if (!idx) return std::nullopt;
                const double mix = m * p.s0 + e * p.v0;
                return e * e - (m * m + k * k + 2.0 * (p.s0 * p.s1 - p.v0 * p.v1) +
                                (2.0 * m * wc / alpha) * zeta - mix * mix / conf +
                                2.0 * std::sqrt(conf) * (n + 1.0 + *idx));
              }};
    }
    case CornellLimit::minimal_zero_field: {
      forced.fields = FieldParams(0.0, base.fields.phi, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const auto p = forced.potential;
      return {forced, [=](double e) -> std::optional<double> {
                const double conf = p.s0 * p.s0 - p.v0 * p.v0;
                if (!(conf > 0.0)) return std::nullopt;
                const auto idx = guarded_sqrt(p.s1 * p.s1 - p.v1 * p.v1 +
                                              zeta * zeta / (alpha * alpha));
                if (!idx) return std::nullopt;
                const double mix = m * p.s0 + e * p.v0;
                return e * e - (m * m + k * k + 2.0 * (p.s0 * p.s1 - p.v0 * p.v1) -
                                mix * mix / conf + 2.0 * std::sqrt(conf) * (n + 1.0 + *idx));
              }};
    }
    case CornellLimit::zero_field: {
      forced.fields = FieldParams(0.0, base.fields.phi, base.fields.omega);
      const double alpha = forced.spacetime.alpha;
      const double w = forced.fields.omega;
      const double b = forced.coupling.b;
      const double d = forced.coupling.d;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const auto p = forced.potential;
      return {forced, [=](double e) -> std::optional<double> {
                const double conf = p.s0 * p.s0 - p.v0 * p.v0 + m * m * w * w * b * b;
                if (!(conf > 0.0)) return std::nullopt;
                const auto idx = guarded_sqrt(p.s1 * p.s1 - p.v1 * p.v1 + m * m * w * w * d * d +
                                              zeta * zeta / (alpha * alpha));
                if (!idx) return std::nullopt;
                const double mix = m * p.s0 + e * p.v0;
                return e * e - (m * m + k * k + 2.0 * m * w * b + 2.0 * m * m * w * w * b * d +
                                2.0 * (p.s0 * p.s1 - p.v0 * p.v1) - mix * mix / conf +
                                2.0 * std::sqrt(conf) * (n + 1.0 + *idx));
              }};
    }
    case CornellLimit::zero_field_no_flux: {
      forced.fields = FieldParams(0.0, 0.0, base.fields.omega);
      const double alpha = forced.spacetime.alpha;
      const double chi = forced.spacetime.chi;
      const double w = forced.fields.omega;
      const double b = forced.coupling.b;
      const double d = forced.coupling.d;
      const auto p = forced.potential;
      const double shift = ell - k * chi;
      return {forced, [=](double e) -> std::optional<double> {
                const double conf = p.s0 * p.s0 - p.v0 * p.v0 + m * m * w * w * b * b;
                if (!(conf > 0.0)) return std::nullopt;
                const auto idx = guarded_sqrt(p.s1 * p.s1 - p.v1 * p.v1 + m * m * w * w * d * d +
                                              shift * shift / (alpha * alpha));
                if (!idx) return std::nullopt;
                const double mix = m * p.s0 + e * p.v0;
                return e * e - (m * m + k * k + 2.0 * m * w * b + 2.0 * m * m * w * w * b * d +
                                2.0 * (p.s0 * p.s1 - p.v0 * p.v1) - mix * mix / conf +
                                2.0 * std::sqrt(conf) * (n + 1.0 + *idx));
              }};
    }
    case CornellLimit::linear: {
      forced.potential = CornellSpec(base.potential.v0, 0.0, base.potential.s0, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double w = forced.fields.omega;
      const double wc = forced.fields.omega_c;
      const double b = forced.coupling.b;
      const double d = forced.coupling.d;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const auto p = forced.potential;
      return {forced, [=](double e) -> std::optional<double> {
                const double conf =
                    p.s0 * p.s0 - p.v0 * p.v0 + m * m * w * w * b * b + m * m * wc * wc;
                if (!(conf > 0.0)) return std::nullopt;
                const double idx =
                    std::sqrt(m * m * w * w * d * d + zeta * zeta / (alpha * alpha));
                const double mix = m * p.s0 + e * p.v0;
                return e * e - (m * m + k * k + 2.0 * m * w * b + 2.0 * m * m * w * w * b * d +
                                (2.0 * m * wc / alpha) * zeta - mix * mix / conf +
                                2.0 * std::sqrt(conf) * (n + 1.0 + idx));
              }};
    }
    case CornellLimit::linear_minimal: {
      forced.potential = CornellSpec(base.potential.v0, 0.0, base.potential.s0, 0.0);
      forced.fields = FieldParams(base.fields.omega_c, base.fields.phi, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double wc = forced.fields.omega_c;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const auto p = forced.potential;
      return {forced, [=](double e) -> std::optional<double> {
                const double conf = p.s0 * p.s0 - p.v0 * p.v0 + m * m * wc * wc;
                if (!(conf > 0.0)) return std::nullopt;
                const double mix = m * p.s0 + e * p.v0;
                return e * e - (m * m + k * k + (2.0 * m * wc / alpha) * zeta -
                                mix * mix / conf +
                                2.0 * std::sqrt(conf) * (n + 1.0 + std::abs(zeta) / alpha));
              }};
    }
    case CornellLimit::linear_equal_magnitude: {
      forced.potential =
          CornellSpec(base.potential.s0, 0.0, base.potential.s0, 0.0);  // v0 matched to s0
      forced.fields = FieldParams(base.fields.omega_c, base.fields.phi, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double wc = forced.fields.omega_c;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const double s0 = forced.potential.s0;
      return {forced, [=](double e) -> std::optional<double> {
                if (!(m * m * wc * wc > 0.0)) return std::nullopt;
                return e * e - (m * m + k * k + (2.0 * m * wc / alpha) * zeta -
                                s0 * s0 * (e + m) * (e + m) / (m * m * wc * wc) +
                                2.0 * m * wc * (n + 1.0 + std::abs(zeta) / alpha));
              }};
    }
    case CornellLimit::coulomb: {
      forced.potential = CornellSpec(0.0, base.potential.v1, 0.0, base.potential.s1);
      const double alpha = forced.spacetime.alpha;
      const double w = forced.fields.omega;
      const double wc = forced.fields.omega_c;
      const double b = forced.coupling.b;
      const double d = forced.coupling.d;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const auto p = forced.potential;
      return {forced, [=](double e) -> std::optional<double> {
                const double conf = m * m * w * w * b * b + m * m * wc * wc;
                if (!(conf > 0.0)) return std::nullopt;
                const auto idx = guarded_sqrt(p.s1 * p.s1 - p.v1 * p.v1 + m * m * w * w * d * d +
                                              zeta * zeta / (alpha * alpha));
                if (!idx) return std::nullopt;
                return e * e - (m * m + k * k + 2.0 * m * w * b + 2.0 * m * m * w * w * b * d +
                                (2.0 * m * wc / alpha) * zeta +
                                2.0 * std::sqrt(conf) * (n + 1.0 + *idx));
              }};
    }
    case CornellLimit::coulomb_minimal: {
      forced.potential = CornellSpec(0.0, base.potential.v1, 0.0, base.potential.s1);
      forced.fields = FieldParams(base.fields.omega_c, base.fields.phi, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double wc = forced.fields.omega_c;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const auto p = forced.potential;
      return {forced, [=](double e) -> std::optional<double> {
                if (!(m * m * wc * wc > 0.0)) return std::nullopt;
                const auto idx = guarded_sqrt(p.s1 * p.s1 - p.v1 * p.v1 +
                                              zeta * zeta / (alpha * alpha));
                if (!idx) return std::nullopt;
                return e * e - (m * m + k * k + (2.0 * m * wc / alpha) * zeta +
                                2.0 * m * wc * (n + 1.0 + *idx));
              }};
    }
    case CornellLimit::coulomb_equal_magnitude: {
      forced.potential =
          CornellSpec(0.0, base.potential.s1, 0.0, base.potential.s1);  // v1 matched to s1
      forced.fields = FieldParams(base.fields.omega_c, base.fields.phi, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double wc = forced.fields.omega_c;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      return {forced, [=](double e) -> std::optional<double> {
                if (!(m * m * wc * wc > 0.0)) return std::nullopt;
                return e * e - (m * m + k * k + (2.0 * m * wc / alpha) * zeta +
                                2.0 * m * wc * (n + 1.0 + std::abs(zeta) / alpha));
              }};
    }
    case CornellLimit::mixed_linear_vector: {
      forced.potential = CornellSpec(base.potential.v0, 0.0, 0.0, base.potential.s1);
      const double alpha = forced.spacetime.alpha;
      const double w = forced.fields.omega;
      const double wc = forced.fields.omega_c;
      const double b = forced.coupling.b;
      const double d = forced.coupling.d;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const auto p = forced.potential;
      return {forced, [=](double e) -> std::optional<double> {
                const double conf = m * m * w * w * b * b + m * m * wc * wc - p.v0 * p.v0;
                if (!(conf > 0.0)) return std::nullopt;
                const double idx = std::sqrt(p.s1 * p.s1 + m * m * w * w * d * d +
                                             zeta * zeta / (alpha * alpha));
                return e * e - (m * m + k * k + 2.0 * m * w * b + 2.0 * m * m * w * w * b * d +
                                (2.0 * m * wc / alpha) * zeta - p.v0 * p.v0 * e * e / conf +
                                2.0 * std::sqrt(conf) * (n + 1.0 + idx));
              }};
    }
    case CornellLimit::mixed_linear_scalar: {
      forced.potential = CornellSpec(0.0, base.potential.v1, base.potential.s0, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double w = forced.fields.omega;
      const double wc = forced.fields.omega_c;
      const double b = forced.coupling.b;
      const double d = forced.coupling.d;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const auto p = forced.potential;
      return {forced, [=](double e) -> std::optional<double> {
                const double conf = p.s0 * p.s0 + m * m * w * w * b * b + m * m * wc * wc;
                if (!(conf > 0.0)) return std::nullopt;
                const auto idx = guarded_sqrt(m * m * w * w * d * d +
                                              zeta * zeta / (alpha * alpha) - p.v1 * p.v1);
                if (!idx) return std::nullopt;
                return e * e - (m * m + k * k + 2.0 * m * w * b + 2.0 * m * m * w * w * b * d +
                                (2.0 * m * wc / alpha) * zeta -
                                p.s0 * p.s0 * m * m / conf +
                                2.0 * std::sqrt(conf) * (n + 1.0 + *idx));
              }};
    }
    case CornellLimit::mixed_linear_vector_minimal: {
      forced.potential = CornellSpec(base.potential.v0, 0.0, 0.0, base.potential.s1);
      forced.fields = FieldParams(base.fields.omega_c, base.fields.phi, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double wc = forced.fields.omega_c;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const auto p = forced.potential;
      return {forced, [=](double e) -> std::optional<double> {
                const double conf = m * m * wc * wc - p.v0 * p.v0;
                if (!(conf > 0.0)) return std::nullopt;
                const double idx =
                    std::sqrt(p.s1 * p.s1 + zeta * zeta / (alpha * alpha));
                return e * e - (m * m + k * k + (2.0 * m * wc / alpha) * zeta -
                                p.v0 * p.v0 * e * e / conf +
                                2.0 * std::sqrt(conf) * (n + 1.0 + idx));
              }};
    }
    case CornellLimit::mixed_linear_scalar_minimal: {
      forced.potential = CornellSpec(0.0, base.potential.v1, base.potential.s0, 0.0);
      forced.fields = FieldParams(base.fields.omega_c, base.fields.phi, 0.0);
      const double alpha = forced.spacetime.alpha;
      const double wc = forced.fields.omega_c;
      const double zeta = effective_shift(state, forced.fields, forced.spacetime).zeta;
      const auto p = forced.potential;
      return {forced, [=](double e) -> std::optional<double> {
                const double conf = p.s0 * p.s0 + m * m * wc * wc;
                if (!(conf > 0.0)) return std::nullopt;
                const auto idx =
                    guarded_sqrt(zeta * zeta / (alpha * alpha) - p.v1 * p.v1);
                if (!idx) return std::nullopt;
                return e * e - (m * m + k * k + (2.0 * m * wc / alpha) * zeta -
                                p.s0 * p.s0 * m * m / conf +
                                2.0 * std::sqrt(conf) * (n + 1.0 + *idx));
              }};
    }
  }
  throw std::logic_error("unknown Cornell limit case");
}

const char* cornell_limit_name(CornellLimit which) {
  switch (which) {
    case CornellLimit::minimal: return "minimal";
    case CornellLimit::minimal_zero_field: return "minimal_zero_field";
    case CornellLimit::zero_field: return "zero_field";
    case CornellLimit::zero_field_no_flux: return "zero_field_no_flux";
    case CornellLimit::linear: return "linear";
    case CornellLimit::linear_minimal: return "linear_minimal";
    case CornellLimit::linear_equal_magnitude: return "linear_equal_magnitude";
    case CornellLimit::coulomb: return "coulomb";
    case CornellLimit::coulomb_minimal: return "coulomb_minimal";
    case CornellLimit::coulomb_equal_magnitude: return "coulomb_equal_magnitude";
    case CornellLimit::mixed_linear_vector: return "mixed_linear_vector";
    case CornellLimit::mixed_linear_scalar: return "mixed_linear_scalar";
    case CornellLimit::mixed_linear_vector_minimal: return "mixed_linear_vector_minimal";
    case CornellLimit::mixed_linear_scalar_minimal: return "mixed_linear_scalar_minimal";
  }
  return "?";
}

}  // namespace kgosc
