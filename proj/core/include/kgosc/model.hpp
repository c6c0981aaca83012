#pragma once

#include <string>
#include <variant>
#include <vector>

namespace kgosc {

// Background geometry: a conical deficit (angular factor alpha) threaded by a
// screw dislocation (chi) that mixes the angular and axial directions.
// Natural units throughout: c = hbar = 1, elementary charge e = 1.
struct SpacetimeParams {
  double alpha;  // angular factor, 0 < alpha; alpha > 1 only behind the override
  double chi;    // dislocation strength, couples k into the angular channel

  SpacetimeParams(double alpha_, double chi_, bool allow_alpha_above_one = false);
};

// External field content seen by the particle.
struct FieldParams {
  double omega_c;  // cyclotron frequency of the uniform axial field, >= 0
  double phi;      // reduced internal flux (flux divided by 2*pi), dimensionless
  double omega;    // oscillator frequency of the nonminimal momentum shift, >= 0

  FieldParams(double omega_c_, double phi_, double omega_);
};

// Radial profile of the nonminimal momentum shift: f(r) = b r + d / r.
struct CouplingSpec {
  double b;
  double d;

  explicit CouplingSpec(double b_ = 0.0, double d_ = 0.0);
};

// Equal vector/scalar potential V(r) = S(r) = a1 r^2 + a2 / r^2 + a3.
struct PseudoharmonicSpec {
  double a1;
  double a2;
  double a3;

  PseudoharmonicSpec(double a1_, double a2_, double a3_);
};

// Cornell-type pair V(r) = v0 r + v1 / r, S(r) = s0 r + s1 / r.
struct CornellSpec {
  double v0;
  double v1;
  double s0;
  double s1;

  CornellSpec(double v0_, double v1_, double s0_, double s1_);
};

// Quantum numbers of a single bound state plus the particle constants.
struct StateLabel {
  int n;        // radial node count, >= 0
  int ell;      // angular momentum projection
  double k;     // axial wave number
  double mass;  // rest mass, > 0

  StateLabel(int n_, int ell_, double k_, double mass_);
};

// zeta = ell - phi - k*chi. The flux and the dislocation enter both spectral
// problems only through this shifted angular quantum number, which is what
// makes the flux periodicity and the dislocation coupling exact.
struct EffectiveShift {
  double zeta;
};

EffectiveShift effective_shift(const StateLabel& state, const FieldParams& fields,
                               const SpacetimeParams& spacetime);

struct PhProblem {
  SpacetimeParams spacetime;
  FieldParams fields;
  CouplingSpec coupling;
  PseudoharmonicSpec potential;
};

struct CornellProblem {
  SpacetimeParams spacetime;
  FieldParams fields;
  CouplingSpec coupling;
  CornellSpec potential;
};

using Problem = std::variant<PhProblem, CornellProblem>;

const SpacetimeParams& spacetime_of(const Problem& problem);
const FieldParams& fields_of(const Problem& problem);
const CouplingSpec& coupling_of(const Problem& problem);

// Collected constructor-level violations for a raw (not yet typed) parameter
// set. Empty means every strong type above would accept the values.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;  // one violation per line
};

}  // namespace kgosc
