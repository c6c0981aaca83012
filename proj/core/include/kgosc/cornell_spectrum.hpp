#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "kgosc/model.hpp"
#include "kgosc/solution.hpp"

namespace kgosc {

// Coefficients of the reduced radial operator for the Cornell branch,
//   u'' + u'/r + (cent / r^2 + coulomb / r + shift + linear * r + osc * r^2) u = 0.
struct CornellOperatorCoeffs {
  double cent;
  double coulomb;
  double shift;
  double linear;
  double osc;
};

CornellOperatorCoeffs cornell_operator_coeffs(double energy, const CornellProblem& problem,
                                              const StateLabel& state);

class NonconfiningError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ComplexIndexError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Energy-independent envelope rate squared (must be positive for a bound
// state) and origin index squared (must be nonnegative for a real power law).
double cornell_confinement_sq(const CornellProblem& problem, const StateLabel& state);
double cornell_index_sq(const CornellProblem& problem, const StateLabel& state);

// psi ~ r^power exp(-gauss r^2 - slope r) near the solution. power and gauss
// are energy independent; slope is linear in E. Throws NonconfiningError /
// ComplexIndexError when the radicands fail.
struct CornellEnvelope {
  double power;  // >= 0
  double gauss;  // > 0
  double slope;
};

CornellEnvelope cornell_envelope(double energy, const CornellProblem& problem,
                                 const StateLabel& state);

// Residual of the series-termination energy condition, assembled from the
// envelope parameters and the operator coefficients:
//   G(E) = shift + slope^2 - 4 gauss (n + 1 + power).
// Roots are the quasi-exactly-solvable levels. Empty when the envelope does
// not exist (nonconfining or complex index); both conditions are energy
// independent, so the residual is either total or nowhere defined.
std::optional<double> cornell_residual(double energy, const CornellProblem& problem,
                                       const StateLabel& state);

ScanConfig cornell_default_scan(const CornellProblem& problem, const StateLabel& state);

SolveOutcome cornell_solve(const CornellProblem& problem, const StateLabel& state,
                           const ScanConfig& scan, Branch branch = Branch::both);
SolveOutcome cornell_solve(const CornellProblem& problem, const StateLabel& state,
                           Branch branch = Branch::both);

// Series factor of the profile: coeffs[j] multiplies r^j, coeffs[0] = 1.
// truncation_residual = |a_{n+1}| continues the recurrence one step past the
// kept degree; it is reported as a diagnostic and never used for rejection.
struct QesPolynomial {
  std::vector<double> coeffs;
  double truncation_residual;
};

QesPolynomial qes_coefficients(double energy, const CornellProblem& problem,
                               const StateLabel& state);

class CornellProfile {
 public:
  CornellProfile(double normalization, CornellEnvelope envelope, std::vector<double> coeffs);

  double operator()(double r) const;

  double normalization() const { return norm_; }
  const CornellEnvelope& envelope() const { return env_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double suggested_cutoff() const;

 private:
  double norm_;
  CornellEnvelope env_;
  std::vector<double> coeffs_;
};

CornellProfile cornell_wavefunction(const SpectrumSolution& solution,
                                    const CornellProblem& problem, const StateLabel& state,
                                    bool normalized = false);

// Limit-case residuals quoted for special parameter choices, written out
// independently (see ph_limit for the convention).
enum class CornellLimit {
  minimal,                        // omega = 0
  minimal_zero_field,             // omega = 0, omega_c = 0
  zero_field,                     // omega_c = 0
  zero_field_no_flux,             // omega_c = 0, phi = 0
  linear,                         // v1 = s1 = 0
  linear_minimal,                 // v1 = s1 = 0, omega = 0
  linear_equal_magnitude,         // v1 = s1 = 0, omega = 0, v0 = s0
  coulomb,                        // v0 = s0 = 0
  coulomb_minimal,                // v0 = s0 = 0, omega = 0
  coulomb_equal_magnitude,        // v0 = s0 = 0, omega = 0, v1 = s1
  mixed_linear_vector,            // s0 = 0, v1 = 0
  mixed_linear_scalar,            // v0 = 0, s1 = 0
  mixed_linear_vector_minimal,    // s0 = 0, v1 = 0, omega = 0
  mixed_linear_scalar_minimal,    // v0 = 0, s1 = 0, omega = 0
};

constexpr int kCornellLimitCount = 14;

struct CornellLimitCase {
  CornellProblem problem;
  std::function<std::optional<double>(double)> residual;
};

CornellLimitCase cornell_limit(CornellLimit which, const CornellProblem& base,
                               const StateLabel& state);

const char* cornell_limit_name(CornellLimit which);

}  // namespace kgosc
