#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgosc/model.hpp"
#include "kgosc/solution.hpp"
#include "kgosc/spectrum.hpp"

namespace kgosc {

enum class SweepParam { alpha, phi, chi, omega_c, omega };

const char* sweep_param_name(SweepParam p);
std::optional<SweepParam> sweep_param_from_name(const std::string& name);

// Problem copy with one background parameter replaced. Throws
// std::invalid_argument when the replacement violates a constructor invariant
// (alpha <= 0, negative frequency, ...).
Problem with_param(const Problem& problem, SweepParam param, double value);

struct SweepSpec {
  SweepParam param = SweepParam::alpha;
  double lo = 0.0;
  double hi = 1.0;
  int samples = 2;                         // uniform, endpoints included
  std::vector<std::pair<int, int>> states; // (n, ell) pairs, row order preserved
  Branch branch = Branch::positive;
};

struct SweepRow {
  SweepParam param;
  double value;
  int n;
  int ell;
  Branch branch;
  double energy;    // NaN unless status == "ok"
  double residual;  // NaN unless status == "ok"
  std::string status;
};

struct SweepTable {
  std::vector<SweepRow> rows;  // sample-major, then state order as given
};

// Solve every state at every sample. Root selection is continuation by
// proximity only: each sample re-solves from scratch and keeps the root
// closest to the previous kept energy (ties toward the larger root); the
// first kept root of a state is the one smallest in magnitude on the
// requested branch. Invalid samples produce status rows and do not disturb
// the continuation memory.
SweepTable sweep(const SweepSpec& spec, const Problem& problem, const StateLabel& base,
                 const ScanConfig* scan = nullptr, int threads = 1);

// Fixed column order; %.17g numbers; '\n' endings. Byte-identical across
// repeated runs on identical input.
std::string sweep_to_csv(const SweepTable& table);

struct AbShiftResult {
  bool match = false;
  double max_deviation = 0.0;  // largest element-wise relative deviation
  std::vector<double> roots_flux_shifted;  // spectrum at (phi + eta, ell)
  std::vector<double> roots_ell_shifted;   // spectrum at (phi, ell - eta)
};

// Exactness of the flux periodicity: shifting the flux by an integer eta and
// the angular quantum number by the same integer must produce identical
// spectra. Deviations are measured relative with an absolute floor of 1e-12
// near zero.
AbShiftResult ab_shift_check(const Problem& problem, const StateLabel& state, int eta,
                             Branch branch = Branch::both, const ScanConfig* scan = nullptr);

struct DegeneracyMember {
  int n;
  int ell;
  double energy;
};

struct DegeneracyReport {
  // Each class holds >= 2 states equal within the tolerance, sorted by (n, ell).
  std::vector<std::vector<DegeneracyMember>> classes;
  double tolerance = 0.0;
  std::vector<std::pair<int, int>> skipped;  // states with no converged root
};

// Cluster equal energies over the grid n <= n_max, |ell| <= ell_max for one
// branch. Equality is |a - b| <= tol * max(|a|, |b|) with a 1e-12 absolute
// floor. Classes are reported sorted by their smallest (n, ell) member.
DegeneracyReport degeneracy_scan(const Problem& problem, const StateLabel& base, int n_max,
                                 int ell_max, double tolerance = 1e-9,
                                 Branch branch = Branch::positive, int threads = 1);

}  // namespace kgosc
