// Command line front end: solve, wavefunction, sweep, degeneracy, ab-check
// and verify over a JSON config. All data output is byte-deterministic
// (17-significant-digit numbers, '\n' line endings) so repeated runs diff
// clean. Exit codes: 0 success, 1 configuration/usage problem, 2 the solver
// found no root where one was requested.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kgosc/analysis.hpp"
#include "kgosc/config.hpp"
#include "kgosc/emit.hpp"
#include "kgosc/ode_oracle.hpp"
#include "kgosc/parallel.hpp"
#include "kgosc/spectrum.hpp"

namespace {

using namespace kgosc;

struct CommonArgs {
  std::string config_path;
  std::string out_path;
  bool bare_flux = false;
  std::string branch = "positive";
  int n = -1;    // -1: take from config
  int ell_set = 0;
  bool ell_given = false;
  int grid_points = 0;  // 0: default
  double tol = 0.0;     // 0: default
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_state = true) {
  cmd->add_option("--config", args.config_path, "JSON configuration file")->required();
  cmd->add_option("--out", args.out_path, "write output here instead of stdout");
  cmd->add_flag("--bare-flux", args.bare_flux,
                "treat config phi as the bare flux and divide by 2*pi");
  if (with_state) {
    cmd->add_option("--n", args.n, "radial quantum number (overrides config)");
    cmd->add_option("--ell", args.ell_set, "angular quantum number (overrides config)")
        ->each([&args](const std::string&) { args.ell_given = true; });
  }
  cmd->add_option("--branch", args.branch, "positive, negative or both")
      ->check(CLI::IsMember({"positive", "negative", "both"}));
  cmd->add_option("--grid-points", args.grid_points,
                  "energy-scan samples (radial points for wavefunction/verify)");
  cmd->add_option("--tol", args.tol,
                  "root residual tolerance (clustering tolerance for degeneracy)");
}

Branch parse_branch(const std::string& name) {
  if (name == "positive") return Branch::positive;
  if (name == "negative") return Branch::negative;
  return Branch::both;
}

int emit_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return 1;
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  return out ? 0 : 1;
}

struct Loaded {
  Config config;
  Problem problem;
  StateLabel state;
};

// Load, apply flag overrides, validate. Empty optional means the caller
// should exit with the given code.
std::optional<Loaded> load_validated(const CommonArgs& args, int& exit_code) {
  Config config;
  try {
    config = load_config(args.config_path);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    exit_code = 1;
    return std::nullopt;
  }
  if (args.bare_flux) config.phi /= 2.0 * std::numbers::pi;
  if (args.n >= 0) config.n = args.n;
  if (args.ell_given) config.ell = args.ell_set;

  const ValidationReport report = validate_configuration(config);
  if (!report.ok()) {
    std::cerr << report.to_string();
    exit_code = 1;
    return std::nullopt;
  }
  return Loaded{config, build_problem(config), build_state(config)};
}

ScanConfig scan_for(const Loaded& loaded, const CommonArgs& args) {
  ScanConfig scan = default_scan(loaded.problem, loaded.state);
  if (args.grid_points > 1) scan.grid_points = args.grid_points;
  if (args.tol > 0.0) scan.abs_tol = args.tol;
  return scan;
}

void write_solution_fields(JsonWriter& w, const SpectrumSolution& s) {
  w.key("E").value(s.energy);
  w.key("residual").value(s.residual);
  w.key("branch").value(branch_name(s.sign));
  w.key("converged").value(s.converged);
  w.key("constraint_residual").value(s.constraint_residual);
  if (!std::isnan(s.truncation)) w.key("truncation").value(s.truncation);
}

void write_oracle_fields(JsonWriter& w, const OracleVerdict& verdict, double energy) {
  w.key("oracle_mismatch").value(verdict.mismatch);
  w.key("oracle_residual_norm").value(verdict.residual_norm);
  w.key("node_count").value(verdict.node_count);
  if (verdict.oracle_energy) {
    w.key("oracle_energy").value(*verdict.oracle_energy);
    w.key("oracle_energy_deviation").value(std::abs(*verdict.oracle_energy - energy));
  } else {
    w.key("oracle_energy").null();
  }
  w.key("confirmed").value(verdict.confirmed);
}

const SpectrumSolution* pick_principal(const SolveOutcome& outcome) {
  const SpectrumSolution* best = nullptr;
  for (const auto& s : outcome.solutions) {
    if (!s.converged) continue;
    if (!best || std::abs(s.energy) < std::abs(best->energy) ||
        (std::abs(s.energy) == std::abs(best->energy) && s.energy > best->energy))
      best = &s;
  }
  return best;
}

int run_solve(const CommonArgs& args, bool with_oracle) {
  int exit_code = 0;
  const auto loaded = load_validated(args, exit_code);
  if (!loaded) return exit_code;

  const Branch branch = parse_branch(args.branch);
  const SolveOutcome outcome =
      solve_spectrum(loaded->problem, loaded->state, scan_for(*loaded, args), branch);
  const SpectrumSolution* principal = pick_principal(outcome);

  JsonWriter w;
  w.begin_object();
  w.key("command").value(with_oracle ? "verify" : "solve");
  w.key("config");
  write_config(w, loaded->config);
  w.key("n").value(loaded->state.n);
  w.key("ell").value(loaded->state.ell);
  w.key("requested_branch").value(args.branch);
  if (outcome.status != SolveStatus::ok) {
    w.key("status").value(solve_status_name(outcome.status));
    w.key("message").value(outcome.message);
  } else if (!principal) {
    w.key("status").value("no-root");
  } else {
    w.key("status").value("ok");
    write_solution_fields(w, *principal);
    // solve and verify both attach the oracle verdict; verify keeps the
    // radial resolution user-settable.
    RadialGrid grid;
    if (with_oracle && args.grid_points > 15) grid.points = args.grid_points;
    try {
      const OracleVerdict verdict =
          confirm_solution(*principal, loaded->problem, loaded->state, grid);
      write_oracle_fields(w, verdict, principal->energy);
    } catch (const std::exception& e) {
      w.key("oracle_error").value(e.what());
    }
    w.key("all_roots").begin_array();
    for (const auto& s : outcome.solutions)
      if (s.converged) w.value(s.energy);
    w.end_array();
  }
  w.end_object();

  const int write_rc = emit_output(w.str(), args.out_path);
  if (write_rc != 0) return write_rc;
  return (outcome.status == SolveStatus::ok && principal) ? 0 : 2;
}

int run_wavefunction(const CommonArgs& args, bool normalized) {
  int exit_code = 0;
  const auto loaded = load_validated(args, exit_code);
  if (!loaded) return exit_code;

  const Branch branch = parse_branch(args.branch);
  ScanConfig scan = default_scan(loaded->problem, loaded->state);
  if (args.tol > 0.0) scan.abs_tol = args.tol;
  const SolveOutcome outcome = solve_spectrum(loaded->problem, loaded->state, scan, branch);
  const SpectrumSolution* principal = pick_principal(outcome);
  if (outcome.status != SolveStatus::ok || !principal) {
    std::cerr << "no converged level to attach a wavefunction to\n";
    return 2;
  }

  RadialGrid grid;
  grid.points = args.grid_points > 15 ? args.grid_points : 2000;
  const RadialGrid resolved =
      resolve_grid(grid, loaded->problem, loaded->state, principal->energy);

  std::string csv = "r,psi\n";
  try {
    std::function<double(double)> profile;
    if (const auto* ph = std::get_if<PhProblem>(&loaded->problem))
      profile = ph_wavefunction(*principal, *ph, loaded->state, normalized);
    else
      profile = cornell_wavefunction(*principal, std::get<CornellProblem>(loaded->problem),
                                     loaded->state, normalized);
    const double h = (resolved.r_max - resolved.r_min) / (resolved.points - 1);
    for (int i = 0; i < resolved.points; ++i) {
      const double r = resolved.r_min + i * h;
      csv += format_double(r);
      csv += ',';
      csv += format_double(profile(r));
      csv += '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "wavefunction construction failed: " << e.what() << "\n";
    return 2;
  }
  return emit_output(csv, args.out_path);
}

int run_sweep(const CommonArgs& args, const std::string& param_name, const std::string& range,
              int samples) {
  int exit_code = 0;
  const auto loaded = load_validated(args, exit_code);
  if (!loaded) return exit_code;

  const auto param = sweep_param_from_name(param_name);
  if (!param) {
    std::cerr << "unknown sweep parameter: " << param_name
              << " (expected alpha, phi, chi, omega_c or omega)\n";
    return 1;
  }
  const auto colon = range.find(':');
  if (colon == std::string::npos) {
    std::cerr << "range must be LO:HI\n";
    return 1;
  }
  SweepSpec spec;
  try {
    spec.lo = std::stod(range.substr(0, colon));
    spec.hi = std::stod(range.substr(colon + 1));
  } catch (const std::exception&) {
    std::cerr << "range must be LO:HI with numeric bounds\n";
    return 1;
  }
  spec.param = *param;
  spec.samples = samples;
  spec.states = loaded->config.state_set();
  spec.branch = parse_branch(args.branch);

  std::optional<ScanConfig> scan;
  if (args.grid_points > 1 || args.tol > 0.0) scan = scan_for(*loaded, args);

  SweepTable table;
  try {
    table = sweep(spec, loaded->problem, loaded->state, scan ? &*scan : nullptr,
                  thread_limit_from_env());
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  const int write_rc = emit_output(sweep_to_csv(table), args.out_path);
  if (write_rc != 0) return write_rc;
  for (const auto& row : table.rows)
    if (row.status == "ok") return 0;
  return 2;  // nothing converged anywhere
}

int run_degeneracy(const CommonArgs& args) {
  int exit_code = 0;
  const auto loaded = load_validated(args, exit_code);
  if (!loaded) return exit_code;

  // --n / --ell act as grid bounds here.
  const int n_max = args.n >= 0 ? args.n : std::max(loaded->config.n, 3);
  const int ell_max = args.ell_given ? std::abs(args.ell_set) : std::max(loaded->config.ell, 3);
  const double tol = args.tol > 0.0 ? args.tol : 1e-9;
  const Branch branch = args.branch == "both" ? Branch::positive : parse_branch(args.branch);

  DegeneracyReport report;
  try {
    report = degeneracy_scan(loaded->problem, loaded->state, n_max, ell_max, tol, branch,
                             thread_limit_from_env());
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  JsonWriter w;
  w.begin_object();
  w.key("command").value("degeneracy");
  w.key("n_max").value(n_max);
  w.key("ell_max").value(ell_max);
  w.key("branch").value(branch_name(branch));
  w.key("tolerance").value(report.tolerance);
  w.key("classes").begin_array();
  for (const auto& cls : report.classes) {
    w.begin_array();
    for (const auto& member : cls) {
      w.begin_object();
      w.key("n").value(member.n);
      w.key("ell").value(member.ell);
      w.key("E").value(member.energy);
      w.end_object();
    }
    w.end_array();
  }
  w.end_array();
  w.key("skipped").begin_array();
  for (const auto& [n, ell] : report.skipped) w.begin_array().value(n).value(ell).end_array();
  w.end_array();
  w.end_object();
  return emit_output(w.str(), args.out_path);
}

int run_ab_check(const CommonArgs& args, int eta) {
  int exit_code = 0;
  const auto loaded = load_validated(args, exit_code);
  if (!loaded) return exit_code;

  const Branch branch = parse_branch(args.branch);
  std::optional<ScanConfig> scan;
  if (args.grid_points > 1 || args.tol > 0.0) scan = scan_for(*loaded, args);

  const AbShiftResult result =
      ab_shift_check(loaded->problem, loaded->state, eta, branch, scan ? &*scan : nullptr);

  JsonWriter w;
  w.begin_object();
  w.key("command").value("ab-check");
  w.key("eta").value(eta);
  w.key("branch").value(args.branch);
  w.key("match").value(result.match);
  w.key("max_deviation").value(result.max_deviation);
  w.key("roots_flux_shifted").begin_array();
  for (double e : result.roots_flux_shifted) w.value(e);
  w.end_array();
  w.key("roots_ell_shifted").begin_array();
  for (double e : result.roots_ell_shifted) w.value(e);
  w.end_array();
  w.end_object();
  const int write_rc = emit_output(w.str(), args.out_path);
  if (write_rc != 0) return write_rc;
  if (result.roots_flux_shifted.empty() || result.roots_ell_shifted.empty()) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bound-state spectra of a relativistic oscillator on a cosmic-string "
               "background with dislocation and internal flux"};
  app.require_subcommand(1);

  CommonArgs solve_args, wf_args, sweep_args, degen_args, ab_args, verify_args;
  bool wf_normalized = false;
  std::string sweep_param, sweep_range;
  int sweep_samples = 81;
  int ab_eta = 1;

  CLI::App* solve = app.add_subcommand("solve", "energy of one state, with oracle verdict");
  add_common(solve, solve_args);

  CLI::App* wavefunction =
      app.add_subcommand("wavefunction", "radial profile of one state as CSV");
  add_common(wavefunction, wf_args);
  wavefunction->add_flag("--normalized", wf_normalized,
                         "scale so the squared profile integrates to 1 against r dr");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "energy curves over one parameter as CSV");
  add_common(sweep_cmd, sweep_args, false);
  sweep_cmd->add_option("--param", sweep_param, "alpha, phi, chi, omega_c or omega")->required();
  sweep_cmd->add_option("--range", sweep_range, "LO:HI")->required();
  sweep_cmd->add_option("--samples", sweep_samples, "uniform samples, endpoints included");

  CLI::App* degeneracy = app.add_subcommand("degeneracy", "cluster equal energies over (n, ell)");
  add_common(degeneracy, degen_args);

  CLI::App* ab_check = app.add_subcommand("ab-check", "flux-shift identity check");
  add_common(ab_check, ab_args);
  ab_check->add_option("--eta", ab_eta, "integer flux shift");

  CLI::App* verify = app.add_subcommand("verify", "solve plus full oracle report");
  add_common(verify, verify_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // keep the contract simple: any usage problem is exit 1
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(solve)) return run_solve(solve_args, false);
    if (app.got_subcommand(wavefunction)) return run_wavefunction(wf_args, wf_normalized);
    if (app.got_subcommand(sweep_cmd))
      return run_sweep(sweep_args, sweep_param, sweep_range, sweep_samples);
    if (app.got_subcommand(degeneracy)) return run_degeneracy(degen_args);
    if (app.got_subcommand(ab_check)) return run_ab_check(ab_args, ab_eta);
    if (app.got_subcommand(verify)) return run_solve(verify_args, true);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 1;
}
