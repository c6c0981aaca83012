// Shared parameter sets for the unit suites. Numbers chosen so every branch
// stays inside its validity domain (confining envelope, real origin index).
#pragma once

#include "kgosc/model.hpp"

namespace fixtures {

// Pseudoharmonic set used for the spectrum figures: every coupling at 1,
// alpha = 0.8, omega = 0.2, m = 2. Ground state near E = 9.159.
inline kgosc::PhProblem ph_figure() {
  return kgosc::PhProblem{kgosc::SpacetimeParams(0.8, 1.0),
                          kgosc::FieldParams(1.0, 1.0, 0.2),
                          kgosc::CouplingSpec(1.0, 1.0),
                          kgosc::PseudoharmonicSpec(1.0, 1.0, 1.0)};
}

inline kgosc::StateLabel ph_figure_state(int n = 0, int ell = 0) {
  return kgosc::StateLabel(n, ell, 1.0, 2.0);
}

// Cornell set used for the spectrum figures: s0 = 0.5, v0 = 1, s1 = 0.1,
// v1 = 1, all geometry couplings 1, omega = 0.2, m = 2.
inline kgosc::CornellProblem cornell_figure() {
  return kgosc::CornellProblem{kgosc::SpacetimeParams(0.8, 1.0),
                               kgosc::FieldParams(1.0, 1.0, 0.2),
                               kgosc::CouplingSpec(1.0, 1.0),
                               kgosc::CornellSpec(1.0, 1.0, 0.5, 0.1)};
}

inline kgosc::StateLabel cornell_figure_state(int n = 0, int ell = 0) {
  return kgosc::StateLabel(n, ell, 1.0, 2.0);
}

// Generic interior point of parameter space for the limit-consistency grids:
// nothing zero, nothing on a domain boundary.
inline kgosc::PhProblem ph_limit_base() {
  return kgosc::PhProblem{kgosc::SpacetimeParams(0.8, 0.7),
                          kgosc::FieldParams(0.8, 0.6, 0.2),
                          kgosc::CouplingSpec(1.0, 0.5),
                          kgosc::PseudoharmonicSpec(1.0, 0.5, 0.3)};
}

inline kgosc::CornellProblem cornell_limit_base() {
  return kgosc::CornellProblem{kgosc::SpacetimeParams(0.8, 0.7),
                               kgosc::FieldParams(0.8, 0.6, 0.2),
                               kgosc::CouplingSpec(1.0, 1.0),
                               kgosc::CornellSpec(0.3, 0.2, 1.0, 0.5)};
}

inline kgosc::StateLabel limit_state(int n = 0, int ell = 1) {
  return kgosc::StateLabel(n, ell, 1.0, 2.0);
}

}  // namespace fixtures
