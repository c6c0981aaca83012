#include "kgosc/ode_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kgosc/cornell_spectrum.hpp"
#include "kgosc/ph_spectrum.hpp"

namespace kgosc {

namespace {

int sgn(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Small-r and large-r structure of the solution at a probed energy, derived
// from the expansion of r^2 W(r) = -nu^2 + w1 r + w0 r^2 + ... and from the
// sign of the r^2 coefficient of W. Throws when no decaying envelope exists.
struct LocalSeries {
  double nu;     // power-law index at the origin
  double w1;     // linear term of the expansion (Coulomb-like source)
  double w0;     // constant term
  double gauss;  // Gaussian decay rate of the envelope
  double slope;  // linear decay slope of the envelope (zero for pseudoharmonic)
};

LocalSeries local_series(double energy, const Problem& problem, const StateLabel& state) {
  const auto& st = spacetime_of(problem);
  const auto& fl = fields_of(problem);
  const auto& cp = coupling_of(problem);
  const double m = state.mass;
  const double zeta = effective_shift(state, fl, st).zeta;
  const double mo = m * fl.omega;
  const double mw = m * fl.omega_c;
  const double za = zeta / st.alpha;

  LocalSeries ls{};
  if (const auto* ph = std::get_if<PhProblem>(&problem)) {
    const auto& a = ph->potential;
    const double nu2 = 2.0 * a.a2 * (energy + m) + mo * mo * cp.d * cp.d + za * za;
    if (nu2 < 0.0) throw std::domain_error("origin index radicand negative at this energy");
    const double env2 = 2.0 * a.a1 * (energy + m) + mo * mo * cp.b * cp.b + mw * mw;
    if (!(env2 > 0.0)) throw std::domain_error("no decaying envelope at this energy");
    ls.nu = std::sqrt(nu2);
    ls.w1 = 0.0;
    ls.w0 = energy * energy - state.k * state.k - m * m - 2.0 * a.a3 * (energy + m) -
            2.0 * mo * cp.b - 2.0 * mo * mo * cp.b * cp.d - (2.0 * mw / st.alpha) * zeta;
    ls.gauss = 0.5 * std::sqrt(env2);
    ls.slope = 0.0;
  } else {
    const auto& p = std::get<CornellProblem>(problem).potential;
    const double nu2 =
        p.s1 * p.s1 - p.v1 * p.v1 + mo * mo * cp.d * cp.d + za * za;
    if (nu2 < 0.0) throw std::domain_error("origin index radicand negative at this energy");
    const double env2 =
        p.s0 * p.s0 - p.v0 * p.v0 + mo * mo * cp.b * cp.b + mw * mw;
    if (!(env2 > 0.0)) throw std::domain_error("no decaying envelope at this energy");
    ls.nu = std::sqrt(nu2);
    ls.w1 = -2.0 * (energy * p.v1 + m * p.s1);
    ls.w0 = energy * energy - state.k * state.k - m * m - 2.0 * mo * cp.b -
            2.0 * mo * mo * cp.b * cp.d - 2.0 * (p.s0 * p.s1 - p.v0 * p.v1) -
            (2.0 * mw / st.alpha) * zeta;
    ls.gauss = 0.5 * std::sqrt(env2);
    ls.slope = (m * p.s0 + energy * p.v0) / std::sqrt(env2);
  }
  return ls;
}

}  // namespace

double radial_coefficient(double r, double energy, const Problem& problem,
                          const StateLabel& state) {
  if (!(r > 0.0)) throw std::domain_error("radial coefficient needs r > 0");
  const auto& st = spacetime_of(problem);
  const auto& fl = fields_of(problem);
  const auto& cp = coupling_of(problem);
  const double m = state.mass;
  const double zeta = effective_shift(state, fl, st).zeta;

  double v_pot, s_pot;
  if (const auto* ph = std::get_if<PhProblem>(&problem)) {
    const auto& a = ph->potential;
    v_pot = s_pot = a.a1 * r * r + a.a2 / (r * r) + a.a3;
  } else {
    const auto& p = std::get<CornellProblem>(problem).potential;
    v_pot = p.v0 * r + p.v1 / r;
    s_pot = p.s0 * r + p.s1 / r;
  }

  const double f = cp.b * r + cp.d / r;
  const double fp = cp.b - cp.d / (r * r);
  const double mo = m * fl.omega;
  const double mw = m * fl.omega_c;
  const double ev = energy - v_pot;
  const double ms = m + s_pot;
  const double za = zeta / st.alpha;

  return ev * ev - mo * (f / r) - mo * fp - mo * mo * f * f - state.k * state.k - ms * ms -
         za * za / (r * r) - (2.0 * mw / st.alpha) * zeta - mw * mw * r * r;
}

RadialGrid resolve_grid(const RadialGrid& grid, const Problem& problem, const StateLabel& state,
                        double energy) {
  RadialGrid out = grid;
  if (!(out.r_min > 0.0)) throw std::invalid_argument("grid needs r_min > 0");
  if (out.points < 16) throw std::invalid_argument("grid needs at least 16 points");
  if (out.r_max <= 0.0) {
    const LocalSeries ls = local_series(energy, problem, state);
    const double drop = std::log(1e18);
    double r = std::sqrt(drop / ls.gauss);
    for (int i = 0; i < 4; ++i) {
      const double t = drop + ls.nu * std::log(std::max(r, 1.0)) - ls.slope * r;
      r = std::sqrt(std::max(t, 1.0) / ls.gauss);
    }
    out.r_max = r;
  }
  if (!(out.r_min < out.r_max)) throw std::invalid_argument("grid needs r_min < r_max");
  return out;
}

double shoot(double energy, const Problem& problem, const StateLabel& state,
             const RadialGrid& grid_in) {
  const RadialGrid grid = resolve_grid(grid_in, problem, state, energy);
  const LocalSeries ls = local_series(energy, problem, state);

  // Two-term series seed, scaled by r_min^-nu so large indices cannot
  // underflow the starting amplitude.
  const double c1 = -ls.w1 / (2.0 * ls.nu + 1.0);
  const double c2 = -(ls.w0 + ls.w1 * c1) / (4.0 * ls.nu + 4.0);
  const double r0 = grid.r_min;
  const double series = 1.0 + c1 * r0 + c2 * r0 * r0;
  const double series_d = c1 + 2.0 * c2 * r0;

  const int n = grid.points;
  double u, v;
  const auto renorm = [&u, &v]() {
    const double s = std::max(std::abs(u), std::abs(v));
    if (s > 0.0) {
      u /= s;
      v /= s;
    }
  };

  if (grid.spacing == RadialGrid::Spacing::uniform) {
    const double h = (grid.r_max - grid.r_min) / (n - 1);
    u = series;
    v = (ls.nu / r0) * series + series_d;
    const auto f_v = [&](double r, double uu, double vv) {
      return -vv / r - radial_coefficient(r, energy, problem, state) * uu;
    };
    double r = r0;
    for (int i = 0; i + 1 < n; ++i) {
      const double k1u = v, k1v = f_v(r, u, v);
      const double k2u = v + 0.5 * h * k1v, k2v = f_v(r + 0.5 * h, u + 0.5 * h * k1u, v + 0.5 * h * k1v);
      const double k3u = v + 0.5 * h * k2v, k3v = f_v(r + 0.5 * h, u + 0.5 * h * k2u, v + 0.5 * h * k2v);
      const double k4u = v + h * k3v, k4v = f_v(r + h, u + h * k3u, v + h * k3v);
      u += (h / 6.0) * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
      v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
      r = grid.r_min + (i + 1) * h;
      if ((i + 1) % 100 == 0) renorm();
    }
  } else {
    // In x = ln r the first-derivative term drops out: U'' + r^2 W U = 0.
    const double x0 = std::log(grid.r_min);
    const double x1 = std::log(grid.r_max);
    const double h = (x1 - x0) / (n - 1);
    u = series;
    v = r0 * ((ls.nu / r0) * series + series_d);  // dU/dx = r u'
    const auto f_v = [&](double x, double uu) {
      const double r = std::exp(x);
      return -r * r * radial_coefficient(r, energy, problem, state) * uu;
    };
    double x = x0;
    for (int i = 0; i + 1 < n; ++i) {
      const double k1u = v, k1v = f_v(x, u);
      const double k2u = v + 0.5 * h * k1v, k2v = f_v(x + 0.5 * h, u + 0.5 * h * k1u);
      const double k3u = v + 0.5 * h * k2v, k3v = f_v(x + 0.5 * h, u + 0.5 * h * k2u);
      const double k4u = v + h * k3v, k4v = f_v(x + h, u + h * k3u);
      u += (h / 6.0) * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
      v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
      x = x0 + (i + 1) * h;
      if ((i + 1) % 100 == 0) renorm();
    }
  }

  const double s = std::max(std::abs(u), std::abs(v));
  return s > 0.0 ? u / s : 0.0;
}

double ode_residual(const std::function<double(double)>& profile, double energy,
                    const Problem& problem, const StateLabel& state, const RadialGrid& grid_in) {
  const RadialGrid grid = resolve_grid(grid_in, problem, state, energy);
  const int n = grid.points;
  std::vector<double> vals(n);
  std::vector<double> rs(n);

  const bool log_spacing = grid.spacing == RadialGrid::Spacing::log_uniform;
  double h;
  if (log_spacing) {
    const double x0 = std::log(grid.r_min);
    h = (std::log(grid.r_max) - x0) / (n - 1);
    for (int i = 0; i < n; ++i) rs[i] = std::exp(x0 + i * h);
  } else {
    h = (grid.r_max - grid.r_min) / (n - 1);
    for (int i = 0; i < n; ++i) rs[i] = grid.r_min + i * h;
  }
  for (int i = 0; i < n; ++i) vals[i] = profile(rs[i]);

  double worst = 0.0;
  for (int i = 2; i + 2 < n; ++i) {
    const double w = radial_coefficient(rs[i], energy, problem, state);
    double op, scale;
    if (log_spacing) {
      const double d2 = (-vals[i + 2] + 16.0 * vals[i + 1] - 30.0 * vals[i] +
                         16.0 * vals[i - 1] - vals[i - 2]) /
                        (12.0 * h * h);
      const double lap = d2 / (rs[i] * rs[i]);  // psi'' + psi'/r in log form
      op = lap + w * vals[i];
      scale = 1.0 + std::max(std::abs(lap), std::abs(w * vals[i]));
    } else {
      const double d1 =
          (-vals[i + 2] + 8.0 * vals[i + 1] - 8.0 * vals[i - 1] + vals[i - 2]) / (12.0 * h);
      const double d2 = (-vals[i + 2] + 16.0 * vals[i + 1] - 30.0 * vals[i] +
                         16.0 * vals[i - 1] - vals[i - 2]) /
                        (12.0 * h * h);
      op = d2 + d1 / rs[i] + w * vals[i];
      scale = 1.0 + std::max({std::abs(d2), std::abs(d1 / rs[i]), std::abs(w * vals[i])});
    }
    worst = std::max(worst, std::abs(op) / scale);
  }
  return worst;
}

int count_nodes(const std::function<double(double)>& profile, const RadialGrid& grid) {
  if (!(grid.r_max > grid.r_min) || !(grid.r_min > 0.0))
    throw std::invalid_argument("count_nodes needs a resolved grid (r_max > r_min > 0)");
  const int n = grid.points;
  const bool log_spacing = grid.spacing == RadialGrid::Spacing::log_uniform;
  int count = 0;
  int prev = 0;
  for (int i = 0; i < n; ++i) {
    double r;
    if (log_spacing) {
      const double x0 = std::log(grid.r_min);
      const double h = (std::log(grid.r_max) - x0) / (n - 1);
      r = std::exp(x0 + i * h);
    } else {
      r = grid.r_min + i * (grid.r_max - grid.r_min) / (n - 1);
    }
    const int s = sgn(profile(r));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

std::optional<double> oracle_root_near(double guess, const Problem& problem,
                                       const StateLabel& state, const RadialGrid& grid,
                                       const OracleOptions& options) {
  const auto try_shoot = [&](double e) -> std::optional<double> {
    try {
      return shoot(e, problem, state, grid);
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
  };

  for (double widen : {1.0, 5.0, 20.0}) {
    const double w = options.window_rel * std::max(1.0, std::abs(guess)) * widen;
    double lo = 0.0, hi = 0.0;
    std::optional<double> mlo, mhi;
    for (double f : {1.0, 0.5, 0.25, 0.125}) {
      if (!mlo) {
        lo = guess - w * f;
        mlo = try_shoot(lo);
      }
      if (!mhi) {
        hi = guess + w * f;
        mhi = try_shoot(hi);
      }
    }
    if (!mlo || !mhi || !(lo < hi)) continue;
    if (sgn(*mlo) == sgn(*mhi)) continue;

    double flo = *mlo;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (!(mid > lo && mid < hi)) break;
      if (hi - lo <= options.energy_tol_rel * std::max(1.0, std::abs(mid))) break;
      const auto fm = try_shoot(mid);
      if (!fm) break;
      if (*fm == 0.0) return mid;
      if (sgn(*fm) == sgn(flo)) {
        lo = mid;
        flo = *fm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }
  return std::nullopt;
}

OracleVerdict confirm_solution(const SpectrumSolution& solution, const Problem& problem,
                               const StateLabel& state, const RadialGrid& grid,
                               const OracleOptions& options) {
  OracleVerdict verdict;

  std::function<double(double)> profile;
  if (const auto* ph = std::get_if<PhProblem>(&problem)) {
    profile = ph_wavefunction(solution, *ph, state, false);
  } else {
    profile = cornell_wavefunction(solution, std::get<CornellProblem>(problem), state, false);
  }

  verdict.mismatch = shoot(solution.energy, problem, state, grid);
  verdict.residual_norm = ode_residual(profile, solution.energy, problem, state, grid);
  verdict.node_count =
      count_nodes(profile, resolve_grid(grid, problem, state, solution.energy));
  verdict.oracle_energy = oracle_root_near(solution.energy, problem, state, grid, options);

  const double scale = std::max(1.0, std::abs(solution.energy));
  const bool energy_matches = verdict.oracle_energy &&
                              std::abs(*verdict.oracle_energy - solution.energy) <=
                                  options.confirm_tol_rel * scale;
  verdict.confirmed = energy_matches || verdict.residual_norm <= options.residual_tol;
  return verdict;
}

}  // namespace kgosc
