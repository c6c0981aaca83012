#pragma once

#include <functional>
#include <optional>

#include "kgosc/model.hpp"
#include "kgosc/solution.hpp"

namespace kgosc {

// Radial mesh for the shooting integrator and the finite-difference residual.
// r_max <= 0 asks for an automatic choice: the radius where the analytic
// decay envelope at the probed energy has dropped to 1e-18.
struct RadialGrid {
  enum class Spacing { uniform, log_uniform };

  double r_min = 1e-6;
  double r_max = 0.0;
  int points = 20000;
  Spacing spacing = Spacing::uniform;
};

RadialGrid resolve_grid(const RadialGrid& grid, const Problem& problem, const StateLabel& state,
                        double energy);

// Effective potential coefficient of the reduced radial equation
//   u'' + u'/r + W(r) u = 0,
// assembled directly from the configured V(r), S(r) and f(r) profiles. This
// is the independent route: it never touches the closed-form coefficient
// assemblies, so agreement between shooting eigenvalues and scanned roots is
// a genuine cross-check.
double radial_coefficient(double r, double energy, const Problem& problem,
                          const StateLabel& state);

// Integrate outward from a two-term small-r series seed with fixed-step RK4
// and periodic renormalization, and return the scaled amplitude at r_max.
// The returned value changes sign across an eigenvalue of the radial problem.
double shoot(double energy, const Problem& problem, const StateLabel& state,
             const RadialGrid& grid = {});

// Worst pointwise operator residual of a candidate profile, evaluated with
// fourth-order central stencils on the interior of the grid and scaled by the
// largest participating term. Halving the spacing should shrink it by about
// sixteen for a smooth exact solution.
double ode_residual(const std::function<double(double)>& profile, double energy,
                    const Problem& problem, const StateLabel& state,
                    const RadialGrid& grid = {});

// Strict sign changes of the profile across the resolved mesh. Samples that
// are exactly zero separate, but do not create, crossings.
int count_nodes(const std::function<double(double)>& profile, const RadialGrid& grid);

struct OracleOptions {
  double window_rel = 1e-2;       // first bracketing half-width, relative
  double energy_tol_rel = 1e-11;  // bisection termination on the energy
  double confirm_tol_rel = 1e-6;  // eigenvalue agreement demanded for "confirmed"
  double residual_tol = 1e-6;     // profile residual demanded for "confirmed"
};

// Locate the shooting eigenvalue nearest the guess by bracketing the mismatch
// sign change in progressively wider windows, then bisecting. Empty when no
// window brackets a sign change (or the envelope does not exist nearby).
std::optional<double> oracle_root_near(double guess, const Problem& problem,
                                       const StateLabel& state, const RadialGrid& grid = {},
                                       const OracleOptions& options = {});

struct OracleVerdict {
  double mismatch = 0.0;       // scaled shooting amplitude at the tested energy
  double residual_norm = 0.0;  // worst scaled operator residual of the profile
  int node_count = 0;
  bool confirmed = false;
  std::optional<double> oracle_energy;  // shooting eigenvalue, when bracketed
};

// Full verdict for one converged root: shooting eigenvalue agreement plus the
// operator residual and node count of the attached closed-form profile.
// confirmed means the eigenvalue matched or the residual met its bound; for
// the Cornell branch the numbers are reported as found (the truncated series
// is not an exact solution away from special parameter sets).
OracleVerdict confirm_solution(const SpectrumSolution& solution, const Problem& problem,
                               const StateLabel& state, const RadialGrid& grid = {},
                               const OracleOptions& options = {});

}  // namespace kgosc
