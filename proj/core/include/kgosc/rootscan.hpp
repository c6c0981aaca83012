#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kgosc {

// Scalar function that may be undefined on part of the axis (radicand turned
// negative, envelope not confining, ...). An empty optional is "no value
// here", never "zero here".
using PartialFn = std::function<std::optional<double>(double)>;

struct ScanConfig {
  double e_min = -1.0;
  double e_max = 1.0;
  int grid_points = 2001;   // samples across [e_min, e_max], endpoints included
  double abs_tol = 1e-10;   // |f(root)| acceptance
  double width_tol = 1e-12; // final bracket width acceptance
  int max_iter = 200;
};

struct RootResult {
  double value = 0.0;
  double residual = 0.0;  // |f(value)|
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
  bool converged = false;  // both tolerance conditions met
};

class NoSignChangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UndefinedEndpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Refine a single root inside [lo, hi]. Requires f defined at both endpoints
// with opposite signs (or an exact zero at an endpoint). Hybrid secant /
// bisection: the secant step is taken when it lands safely inside the current
// bracket and the bracket is actually shrinking, otherwise the step falls back
// to the midpoint. Fully deterministic; converged means |f| <= abs_tol AND
// bracket width <= width_tol.
RootResult find_root(const PartialFn& f, double lo, double hi, const ScanConfig& config);

struct ScanOutcome {
  std::vector<RootResult> roots;                // ascending in value
  std::vector<std::pair<double, double>> gaps;  // maximal runs of undefined samples
  std::vector<std::string> warnings;            // near-tangency notices etc.
};

// Sample f on the uniform grid, refine every sign-change cell with find_root,
// and report undefined stretches as gaps. Undefined samples never count as
// sign changes. Roots closer than width_tol are merged. A defined local
// minimum of |f| that dips to machine-zero without a sign change is reported
// in warnings (an even-order root the grid cannot bracket).
ScanOutcome scan_roots(const PartialFn& f, const ScanConfig& config);

}  // namespace kgosc
