#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kgosc/model.hpp"

namespace kgosc {

enum class PotentialKind { pseudoharmonic, cornell };

// Raw parameter set as it appears in a config document, before any strong
// typing. Kept plain so validation can name every violation instead of dying
// on the first constructor throw.
struct Config {
  double alpha = 1.0;
  double chi = 0.0;
  double omega_c = 0.0;
  double phi = 0.0;
  double omega = 0.0;
  double b = 0.0;
  double d = 0.0;

  PotentialKind kind = PotentialKind::pseudoharmonic;
  double a1 = 0.0, a2 = 0.0, a3 = 0.0;          // pseudoharmonic coefficients
  double v0 = 0.0, v1 = 0.0, s0 = 0.0, s1 = 0.0;  // cornell coefficients

  int n = 0;
  int ell = 0;
  double k = 0.0;
  double mass = 1.0;

  bool allow_alpha_above_one = false;
  // Optional explicit state set for sweeps; defaults to the single (n, ell).
  std::vector<std::pair<int, int>> states;

  std::vector<std::pair<int, int>> state_set() const;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse a JSON config document. Unknown keys are rejected (typos should not
// silently fall back to defaults). Throws ConfigError on malformed input.
Config parse_config(const std::string& json_text);
Config load_config(const std::string& path);

// Deterministic JSON emission of a config; parse_config(config_to_json(c))
// reproduces c exactly (every double is printed with 17 significant digits).
std::string config_to_json(const Config& config);

class JsonWriter;  // emit.hpp

// Emit the config as an object into an already-open writer (the embedded
// "config" block of tool output documents).
void write_config(JsonWriter& w, const Config& config);

// Every constructor-level violation plus the search-level restrictions
// (nonnegative a1 for the pseudoharmonic search, a confining envelope and a
// real origin index for the Cornell search). Empty report means
// build_problem/build_state will not throw and a solve can be attempted.
ValidationReport validate_configuration(const Config& config);

Problem build_problem(const Config& config);
StateLabel build_state(const Config& config);

}  // namespace kgosc
