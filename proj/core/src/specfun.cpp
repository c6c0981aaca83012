#include "kgosc/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace kgosc {

LaguerreOrder::LaguerreOrder(int n_, double alpha_idx_) : n(n_), alpha_idx(alpha_idx_) {
  if (n < 0) throw std::invalid_argument("laguerre degree must be nonnegative");
  if (!(std::isfinite(alpha_idx) && alpha_idx > -1.0))
    throw std::invalid_argument("laguerre index must be a finite real > -1");
}

double laguerre(const LaguerreOrder& order, double x) {
  if (!(x >= 0.0)) throw std::domain_error("laguerre argument must be >= 0");
  if (order.n > 200) throw std::domain_error("laguerre degree above 200 refused");

  double prev = 1.0;  // L_0
  if (order.n == 0) return prev;
  double curr = 1.0 + order.alpha_idx - x;  // L_1
  for (int k = 1; k < order.n; ++k) {
    const double next =
        ((2.0 * k + 1.0 + order.alpha_idx - x) * curr - (k + order.alpha_idx) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace kgosc
