#include "kgosc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kgosc/emit.hpp"
#include "kgosc/parallel.hpp"

namespace kgosc {

namespace {

constexpr double kZeroFloor = 1e-12;

double relative_deviation(double a, double b) {
  const double diff = std::abs(a - b);
  if (diff <= kZeroFloor) return 0.0;
  return diff / std::max(std::abs(a), std::abs(b));
}

StateLabel relabel(const StateLabel& base, int n, int ell) {
  return StateLabel(n, ell, base.k, base.mass);
}

// Smallest-magnitude converged root on the requested branch; ties toward the
// larger (more positive) energy.
std::optional<SpectrumSolution> principal_root(const SolveOutcome& outcome) {
  std::optional<SpectrumSolution> best;
  for (const auto& s : outcome.solutions) {
    if (!s.converged) continue;
    if (!best || std::abs(s.energy) < std::abs(best->energy) ||
        (std::abs(s.energy) == std::abs(best->energy) && s.energy > best->energy))
      best = s;
  }
  return best;
}

std::optional<SpectrumSolution> nearest_root(const SolveOutcome& outcome, double target) {
  std::optional<SpectrumSolution> best;
  for (const auto& s : outcome.solutions) {
    if (!s.converged) continue;
    if (!best || std::abs(s.energy - target) < std::abs(best->energy - target) ||
        (std::abs(s.energy - target) == std::abs(best->energy - target) &&
         s.energy > best->energy))
      best = s;
  }
  return best;
}

}  // namespace

const char* sweep_param_name(SweepParam p) {
  switch (p) {
    case SweepParam::alpha: return "alpha";
    case SweepParam::phi: return "phi";
    case SweepParam::chi: return "chi";
    case SweepParam::omega_c: return "omega_c";
    case SweepParam::omega: return "omega";
  }
  return "?";
}

std::optional<SweepParam> sweep_param_from_name(const std::string& name) {
  if (name == "alpha") return SweepParam::alpha;
  if (name == "phi") return SweepParam::phi;
  if (name == "chi") return SweepParam::chi;
  if (name == "omega_c") return SweepParam::omega_c;
  if (name == "omega") return SweepParam::omega;
  return std::nullopt;
}

Problem with_param(const Problem& problem, SweepParam param, double value) {
  return std::visit(
      [&](auto p) -> Problem {
        switch (param) {
          case SweepParam::alpha:
            p.spacetime = SpacetimeParams(value, p.spacetime.chi);
            break;
          case SweepParam::chi:
            // alpha was validated when the base problem was built
            p.spacetime = SpacetimeParams(p.spacetime.alpha, value, true);
            break;
          case SweepParam::phi:
            p.fields = FieldParams(p.fields.omega_c, value, p.fields.omega);
            break;
          case SweepParam::omega_c:
            p.fields = FieldParams(value, p.fields.phi, p.fields.omega);
            break;
          case SweepParam::omega:
            p.fields = FieldParams(p.fields.omega_c, p.fields.phi, value);
            break;
        }
        return p;
      },
      problem);
}

SweepTable sweep(const SweepSpec& spec, const Problem& problem, const StateLabel& base,
                 const ScanConfig* scan, int threads) {
  if (spec.samples < 1) throw std::invalid_argument("sweep needs at least one sample");
  if (spec.samples > 1 && !(spec.lo < spec.hi))
    throw std::invalid_argument("sweep needs lo < hi for more than one sample");
  if (spec.states.empty()) throw std::invalid_argument("sweep needs a nonempty state set");

  std::vector<Branch> branches;
  if (spec.branch == Branch::both)
    branches = {Branch::positive, Branch::negative};
  else
    branches = {spec.branch};

  struct Track {
    int state_idx;
    Branch branch;
    std::vector<SweepRow> rows;
  };
  std::vector<Track> tracks;
  for (size_t si = 0; si < spec.states.size(); ++si)
    for (Branch br : branches) tracks.push_back({static_cast<int>(si), br, {}});

  const auto run_track = [&](int ti) {
    Track& track = tracks[static_cast<size_t>(ti)];
    const auto [n, ell] = spec.states[static_cast<size_t>(track.state_idx)];
    std::optional<double> prev;
    track.rows.reserve(static_cast<size_t>(spec.samples));
    for (int i = 0; i < spec.samples; ++i) {
      const double value =
          spec.samples == 1 ? spec.lo : spec.lo + i * (spec.hi - spec.lo) / (spec.samples - 1);
      SweepRow row;
      row.param = spec.param;
      row.value = value;
      row.n = n;
      row.ell = ell;
      row.branch = track.branch;
      row.energy = std::numeric_limits<double>::quiet_NaN();
      row.residual = std::numeric_limits<double>::quiet_NaN();

      StateLabel st = relabel(base, n, ell);
      try {
        const Problem p = with_param(problem, spec.param, value);
        const SolveOutcome outcome =
            scan ? solve_spectrum(p, st, *scan, track.branch)
                 : solve_spectrum(p, st, track.branch);
        if (outcome.status != SolveStatus::ok) {
          row.status = solve_status_name(outcome.status);
        } else {
          const auto kept =
              prev ? nearest_root(outcome, *prev) : principal_root(outcome);
          if (!kept) {
            row.status = "no-root";
          } else {
            row.status = "ok";
            row.energy = kept->energy;
            row.residual = kept->residual;
            prev = kept->energy;
          }
        }
      } catch (const std::invalid_argument&) {
        row.status = "invalid";
      }
      track.rows.push_back(std::move(row));
    }
  };
  run_parallel(static_cast<int>(tracks.size()), threads, run_track);

  SweepTable table;
  table.rows.reserve(tracks.size() * static_cast<size_t>(spec.samples));
  for (int i = 0; i < spec.samples; ++i)
    for (const auto& track : tracks) table.rows.push_back(track.rows[static_cast<size_t>(i)]);
  return table;
}

std::string sweep_to_csv(const SweepTable& table) {
  std::string out = "swept_param,value,n,ell,branch,E,residual,status\n";
  for (const auto& row : table.rows) {
    out += sweep_param_name(row.param);
    out += ',';
    out += format_double(row.value);
    out += ',';
    out += std::to_string(row.n);
    out += ',';
    out += std::to_string(row.ell);
    out += ',';
    out += branch_name(row.branch);
    out += ',';
    out += format_double(row.energy);
    out += ',';
    out += format_double(row.residual);
    out += ',';
    out += row.status;
    out += '\n';
  }
  return out;
}

AbShiftResult ab_shift_check(const Problem& problem, const StateLabel& state, int eta,
                             Branch branch, const ScanConfig* scan) {
  const auto& fl = fields_of(problem);
  const Problem flux_shifted = with_param(problem, SweepParam::phi, fl.phi + eta);
  const StateLabel ell_shifted = StateLabel(state.n, state.ell - eta, state.k, state.mass);

  // Same window for both solves; the default never depends on phi or ell.
  const ScanConfig window = scan ? *scan : default_scan(problem, state);

  const SolveOutcome a = solve_spectrum(flux_shifted, state, window, branch);
  const SolveOutcome b = solve_spectrum(problem, ell_shifted, window, branch);

  AbShiftResult result;
  for (const auto& s : a.solutions)
    if (s.converged) result.roots_flux_shifted.push_back(s.energy);
  for (const auto& s : b.solutions)
    if (s.converged) result.roots_ell_shifted.push_back(s.energy);

  if (result.roots_flux_shifted.size() != result.roots_ell_shifted.size()) {
    result.match = false;
    result.max_deviation = std::numeric_limits<double>::infinity();
    return result;
  }
  double worst = 0.0;
  for (size_t i = 0; i < result.roots_flux_shifted.size(); ++i)
    worst = std::max(worst, relative_deviation(result.roots_flux_shifted[i],
                                               result.roots_ell_shifted[i]));
  result.max_deviation = worst;
  result.match = worst <= 1e-10;
  return result;
}

DegeneracyReport degeneracy_scan(const Problem& problem, const StateLabel& base, int n_max,
                                 int ell_max, double tolerance, Branch branch, int threads) {
  if (branch == Branch::both)
    throw std::invalid_argument("degeneracy scan clusters one branch at a time");
  if (n_max < 0 || ell_max < 0) throw std::invalid_argument("degeneracy bounds must be >= 0");

  struct Entry {
    int n;
    int ell;
    std::optional<double> energy;
  };
  std::vector<Entry> entries;
  for (int n = 0; n <= n_max; ++n)
    for (int ell = -ell_max; ell <= ell_max; ++ell) entries.push_back({n, ell, std::nullopt});

  run_parallel(static_cast<int>(entries.size()), threads, [&](int i) {
    auto& e = entries[static_cast<size_t>(i)];
    const SolveOutcome outcome =
        solve_spectrum(problem, relabel(base, e.n, e.ell), branch);
    if (const auto root = principal_root(outcome)) e.energy = root->energy;
  });

  DegeneracyReport report;
  report.tolerance = tolerance;

  std::vector<DegeneracyMember> found;
  for (const auto& e : entries) {
    if (e.energy)
      found.push_back({e.n, e.ell, *e.energy});
    else
      report.skipped.emplace_back(e.n, e.ell);
  }

  std::sort(found.begin(), found.end(), [](const DegeneracyMember& a, const DegeneracyMember& b) {
    return a.energy < b.energy;
  });

  std::vector<DegeneracyMember> group;
  const auto flush = [&]() {
    if (group.size() >= 2) {
      std::sort(group.begin(), group.end(),
                [](const DegeneracyMember& a, const DegeneracyMember& b) {
                  return a.n != b.n ? a.n < b.n : a.ell < b.ell;
                });
      report.classes.push_back(group);
    }
    group.clear();
  };
  for (const auto& member : found) {
    if (!group.empty()) {
      const double dev = relative_deviation(group.back().energy, member.energy);
      if (dev > tolerance) flush();
    }
    group.push_back(member);
  }
  flush();

  std::sort(report.classes.begin(), report.classes.end(),
            [](const std::vector<DegeneracyMember>& a, const std::vector<DegeneracyMember>& b) {
              if (a.front().n != b.front().n) return a.front().n < b.front().n;
              return a.front().ell < b.front().ell;
            });
  return report;
}

}  // namespace kgosc
