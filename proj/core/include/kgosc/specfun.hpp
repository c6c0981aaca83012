#pragma once

namespace kgosc {

// Order pair for a generalized Laguerre polynomial L_n^a. The index a is a
// real number here (it comes out of a square root of parameter combinations),
// which is why std::assoc_laguerre (integer index only) is not usable.
struct LaguerreOrder {
  int n;
  double alpha_idx;  // > -1 so the weight is integrable at the origin

  LaguerreOrder(int n_, double alpha_idx_);
};

// Evaluate L_n^a(x) for x >= 0 by the three-term forward recurrence
//   (k+1) L_{k+1}^a = (2k+1+a-x) L_k^a - (k+a) L_{k-1}^a.
// The recurrence runs in the direction of increasing degree, which is
// numerically stable on x >= 0. Degrees above 200 are refused: the values
// grow factorially and nothing downstream needs them.
double laguerre(const LaguerreOrder& order, double x);

}  // namespace kgosc
