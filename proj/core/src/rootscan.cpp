#include "kgosc/rootscan.hpp"

#include <algorithm>
#include <cmath>

namespace kgosc {

namespace {

int sgn(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

RootResult exact_root(double x, int iterations) {
  RootResult out;
  out.value = x;
  out.residual = 0.0;
  out.bracket_lo = x;
  out.bracket_hi = x;
  out.iterations = iterations;
  out.converged = true;
  return out;
}

}  // namespace

RootResult find_root(const PartialFn& f, double lo, double hi, const ScanConfig& config) {
  if (!(lo < hi)) throw std::invalid_argument("find_root: need lo < hi");

  auto flo_opt = f(lo);
  auto fhi_opt = f(hi);
  if (!flo_opt || !fhi_opt)
    throw UndefinedEndpointError("find_root: function undefined at a bracket endpoint");
  double flo = *flo_opt;
  double fhi = *fhi_opt;

  if (flo == 0.0) return exact_root(lo, 0);
  if (fhi == 0.0) return exact_root(hi, 0);
  if (sgn(flo) == sgn(fhi))
    throw NoSignChangeError("find_root: no sign change over the bracket");

  double best_x;
  double best_f;
  if (std::abs(flo) <= std::abs(fhi)) {
    best_x = lo;
    best_f = std::abs(flo);
  } else {
    best_x = hi;
    best_f = std::abs(fhi);
  }

  RootResult out;
  int iter = 0;
  for (; iter < config.max_iter; ++iter) {
    const double width = hi - lo;
    if (width <= config.width_tol && best_f <= config.abs_tol) break;

    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;  // bracket down to adjacent representables

    // Secant candidate on odd iterations only; the forced midpoint on even
    // iterations guarantees the bracket halves at least every other step.
    double x = mid;
    if (iter % 2 == 1) {
      const double denom = fhi - flo;
      if (denom != 0.0) {
        const double xs = hi - fhi * width / denom;
        const double margin = 0.01 * width;
        if (xs > lo + margin && xs < hi - margin) x = xs;
      }
    }

    auto fx_opt = f(x);
    if (!fx_opt && x != mid) fx_opt = f(x = mid);  // secant point fell in a hole
    if (!fx_opt) {
      // Defined set is expected to be an interval, so a defined bracket with an
      // undefined interior point means the function is pathological. Give up.
      out.converged = false;
      break;
    }
    const double fx = *fx_opt;

    if (std::abs(fx) < best_f) {
      best_f = std::abs(fx);
      best_x = x;
    }
    if (fx == 0.0) {
      lo = hi = x;
      flo = fhi = 0.0;
      continue;  // width check terminates on the next pass
    }
    if (sgn(fx) == sgn(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
  }

  out.value = best_x;
  out.residual = best_f;
  out.bracket_lo = lo;
  out.bracket_hi = hi;
  out.iterations = iter;
  out.converged = (best_f <= config.abs_tol) && (hi - lo <= config.width_tol);
  return out;
}

ScanOutcome scan_roots(const PartialFn& f, const ScanConfig& config) {
  if (!(config.e_min < config.e_max))
    throw std::invalid_argument("scan_roots: need e_min < e_max");
  if (config.grid_points < 2) throw std::invalid_argument("scan_roots: need at least 2 samples");

  const int n = config.grid_points;
  const double step = (config.e_max - config.e_min) / (n - 1);
  std::vector<double> xs(n);
  std::vector<std::optional<double>> vals(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = (i == n - 1) ? config.e_max : config.e_min + i * step;
    vals[i] = f(xs[i]);
  }

  ScanOutcome out;

  // Undefined stretches become gaps, reported as closed sample intervals.
  int gap_start = -1;
  for (int i = 0; i < n; ++i) {
    if (!vals[i]) {
      if (gap_start < 0) gap_start = i;
    } else if (gap_start >= 0) {
      out.gaps.emplace_back(xs[gap_start], xs[i - 1]);
      gap_start = -1;
    }
  }
  if (gap_start >= 0) out.gaps.emplace_back(xs[gap_start], xs[n - 1]);

  // Exact zeros at samples are roots regardless of parity.
  for (int i = 0; i < n; ++i)
    if (vals[i] && *vals[i] == 0.0) out.roots.push_back(exact_root(xs[i], 0));

  // Strict sign changes between consecutive defined samples get refined.
  for (int i = 0; i + 1 < n; ++i) {
    if (!vals[i] || !vals[i + 1]) continue;
    if (sgn(*vals[i]) * sgn(*vals[i + 1]) >= 0) continue;
    out.roots.push_back(find_root(f, xs[i], xs[i + 1], config));
  }

  // A defined local minimum of |f| at machine zero without a sign change is
  // the signature of an even-order root the bracketing pass cannot see.
  const double flat_tol = std::sqrt(config.abs_tol);
  for (int i = 1; i + 1 < n; ++i) {
    if (!vals[i - 1] || !vals[i] || !vals[i + 1]) continue;
    const double a = *vals[i - 1], b = *vals[i], c = *vals[i + 1];
    if (b == 0.0) continue;  // already a root
    if (sgn(a) != sgn(b) || sgn(b) != sgn(c)) continue;
    if (std::abs(b) < std::abs(a) && std::abs(b) <= std::abs(c) && std::abs(b) <= flat_tol)
      out.warnings.push_back("possible even-order root near " + std::to_string(xs[i]) +
                             " (|f| dips to " + std::to_string(std::abs(b)) +
                             " without a sign change)");
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](const RootResult& a, const RootResult& b) { return a.value < b.value; });
  std::vector<RootResult> merged;
  for (const auto& r : out.roots) {
    if (!merged.empty() && std::abs(r.value - merged.back().value) <= config.width_tol) {
      if (r.residual < merged.back().residual) merged.back() = r;
    } else {
      merged.push_back(r);
    }
  }
  out.roots = std::move(merged);
  return out;
}

}  // namespace kgosc
