#include "kgosc/spectrum.hpp"

namespace kgosc {

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::positive: return "positive";
    case Branch::negative: return "negative";
    case Branch::both: return "both";
  }
  return "?";
}

std::string solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::ok: return "ok";
    case SolveStatus::degenerate_confinement: return "degenerate-confinement";
    case SolveStatus::nonconfining: return "nonconfining";
    case SolveStatus::complex_index: return "complex-index";
    case SolveStatus::invalid_request: return "invalid-request";
  }
  return "?";
}

ScanConfig default_scan(const Problem& problem, const StateLabel& state) {
  return std::visit(
      [&state](const auto& p) {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, PhProblem>)
          return ph_default_scan(p, state);
        else
          return cornell_default_scan(p, state);
      },
      problem);
}

SolveOutcome solve_spectrum(const Problem& problem, const StateLabel& state,
                            const ScanConfig& scan, Branch branch) {
  return std::visit(
      [&](const auto& p) {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, PhProblem>)
          return ph_solve(p, state, scan, branch);
        else
          return cornell_solve(p, state, scan, branch);
      },
      problem);
}

SolveOutcome solve_spectrum(const Problem& problem, const StateLabel& state, Branch branch) {
  return solve_spectrum(problem, state, default_scan(problem, state), branch);
}

std::optional<double> spectral_residual(double energy, const Problem& problem,
                                        const StateLabel& state) {
  return std::visit(
      [&](const auto& p) {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, PhProblem>)
          return ph_residual(energy, p, state);
        else
          return cornell_residual(energy, p, state);
      },
      problem);
}

}  // namespace kgosc
