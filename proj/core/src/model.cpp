#include "kgosc/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kgosc {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

SpacetimeParams::SpacetimeParams(double alpha_, double chi_, bool allow_alpha_above_one)
    : alpha(alpha_), chi(chi_) {
  require(finite(alpha) && finite(chi), "spacetime parameters must be finite");
  require(alpha > 0.0, "alpha must be positive");
  if (!allow_alpha_above_one)
    require(alpha <= 1.0, "alpha must not exceed 1 (pass the override to allow it)");
}

FieldParams::FieldParams(double omega_c_, double phi_, double omega_)
    : omega_c(omega_c_), phi(phi_), omega(omega_) {
  require(finite(omega_c) && finite(phi) && finite(omega), "field parameters must be finite");
  require(omega_c >= 0.0, "omega_c must be nonnegative");
  require(omega >= 0.0, "omega must be nonnegative");
}

CouplingSpec::CouplingSpec(double b_, double d_) : b(b_), d(d_) {
  require(finite(b) && finite(d), "coupling coefficients must be finite");
}

PseudoharmonicSpec::PseudoharmonicSpec(double a1_, double a2_, double a3_)
    : a1(a1_), a2(a2_), a3(a3_) {
  require(finite(a1) && finite(a2) && finite(a3), "potential coefficients must be finite");
}

CornellSpec::CornellSpec(double v0_, double v1_, double s0_, double s1_)
    : v0(v0_), v1(v1_), s0(s0_), s1(s1_) {
  require(finite(v0) && finite(v1) && finite(s0) && finite(s1),
          "potential coefficients must be finite");
}

StateLabel::StateLabel(int n_, int ell_, double k_, double mass_)
    : n(n_), ell(ell_), k(k_), mass(mass_) {
  require(n >= 0, "n must be nonnegative");
  require(finite(k) && finite(mass), "k and mass must be finite");
  require(mass > 0.0, "mass must be positive");
}

EffectiveShift effective_shift(const StateLabel& state, const FieldParams& fields,
                               const SpacetimeParams& spacetime) {
  return EffectiveShift{static_cast<double>(state.ell) - fields.phi - state.k * spacetime.chi};
}

const SpacetimeParams& spacetime_of(const Problem& problem) {
  return std::visit([](const auto& p) -> const SpacetimeParams& { return p.spacetime; }, problem);
}

const FieldParams& fields_of(const Problem& problem) {
  return std::visit([](const auto& p) -> const FieldParams& { return p.fields; }, problem);
}

const CouplingSpec& coupling_of(const Problem& problem) {
  return std::visit([](const auto& p) -> const CouplingSpec& { return p.coupling; }, problem);
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& v : violations) out << v << '\n';
  return out.str();
}

}  // namespace kgosc
