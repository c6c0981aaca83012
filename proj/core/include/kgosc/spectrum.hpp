#pragma once

#include "kgosc/cornell_spectrum.hpp"
#include "kgosc/model.hpp"
#include "kgosc/ph_spectrum.hpp"
#include "kgosc/solution.hpp"

namespace kgosc {

// Branch-independent front door used by the sweep/degeneracy/CLI layers.
ScanConfig default_scan(const Problem& problem, const StateLabel& state);

SolveOutcome solve_spectrum(const Problem& problem, const StateLabel& state,
                            const ScanConfig& scan, Branch branch = Branch::both);
SolveOutcome solve_spectrum(const Problem& problem, const StateLabel& state,
                            Branch branch = Branch::both);

std::optional<double> spectral_residual(double energy, const Problem& problem,
                                        const StateLabel& state);

}  // namespace kgosc
