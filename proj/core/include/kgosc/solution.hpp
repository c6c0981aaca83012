#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "kgosc/rootscan.hpp"

namespace kgosc {

enum class Branch { positive, negative, both };

std::string branch_name(Branch b);

enum class SolveStatus {
  ok,
  degenerate_confinement,  // pseudoharmonic: the r^2 radicand vanishes identically
  nonconfining,            // Cornell: Gaussian envelope rate not positive
  complex_index,           // Cornell: origin index radicand negative
  invalid_request,         // e.g. a1 < 0 for a bound-state search
};

std::string solve_status_name(SolveStatus s);

struct SpectrumSolution {
  double energy = 0.0;
  double residual = 0.0;  // |F(energy)| of the spectral residual
  Branch sign = Branch::positive;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
  bool converged = false;
  // Closure identity re-evaluated at the root (quantization condition for the
  // pseudoharmonic branch, series-termination constraint for the Cornell one).
  double constraint_residual = 0.0;
  // |a_{n+1}| of the truncated series; diagnostic only, Cornell branch only.
  double truncation = std::numeric_limits<double>::quiet_NaN();
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::ok;
  std::string message;
  std::vector<SpectrumSolution> solutions;      // ascending in energy
  std::vector<std::pair<double, double>> gaps;  // undefined stretches of the scan
};

}  // namespace kgosc
