#include "kgosc/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kgosc/emit.hpp"

namespace kgosc {

namespace {

using nlohmann::json;

double as_double(const json& j, const std::string& name) {
  if (!j.is_number()) throw ConfigError("config: \"" + name + "\" must be a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& name) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    throw ConfigError("config: \"" + name + "\" must be an integer");
  return j.get<int>();
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& item : obj.items())
    if (!allowed.count(item.key()))
      throw ConfigError("config: unknown key \"" + item.key() + "\" in " + where);
}

}  // namespace

std::vector<std::pair<int, int>> Config::state_set() const {
  if (!states.empty()) return states;
  return {{n, ell}};
}

Config parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");

  reject_unknown(doc,
                 {"alpha", "chi", "omega_c", "phi", "omega", "b", "d", "potential", "n", "ell",
                  "k", "mass", "allow_alpha_above_one", "states"},
                 "the top level");

  Config c;
  if (doc.contains("alpha")) c.alpha = as_double(doc["alpha"], "alpha");
  if (doc.contains("chi")) c.chi = as_double(doc["chi"], "chi");
  if (doc.contains("omega_c")) c.omega_c = as_double(doc["omega_c"], "omega_c");
  if (doc.contains("phi")) c.phi = as_double(doc["phi"], "phi");
  if (doc.contains("omega")) c.omega = as_double(doc["omega"], "omega");
  if (doc.contains("b")) c.b = as_double(doc["b"], "b");
  if (doc.contains("d")) c.d = as_double(doc["d"], "d");
  if (doc.contains("n")) c.n = as_int(doc["n"], "n");
  if (doc.contains("ell")) c.ell = as_int(doc["ell"], "ell");
  if (doc.contains("k")) c.k = as_double(doc["k"], "k");
  if (doc.contains("mass")) c.mass = as_double(doc["mass"], "mass");
  if (doc.contains("allow_alpha_above_one")) {
    if (!doc["allow_alpha_above_one"].is_boolean())
      throw ConfigError("config: \"allow_alpha_above_one\" must be a boolean");
    c.allow_alpha_above_one = doc["allow_alpha_above_one"].get<bool>();
  }

  if (!doc.contains("potential")) throw ConfigError("config: missing \"potential\" object");
  const json& pot = doc["potential"];
  if (!pot.is_object()) throw ConfigError("config: \"potential\" must be an object");
  if (!pot.contains("kind") || !pot["kind"].is_string())
    throw ConfigError("config: \"potential.kind\" must be a string");
  const std::string kind = pot["kind"].get<std::string>();
  if (kind == "pseudoharmonic") {
    c.kind = PotentialKind::pseudoharmonic;
    reject_unknown(pot, {"kind", "a1", "a2", "a3"}, "a pseudoharmonic potential");
    if (pot.contains("a1")) c.a1 = as_double(pot["a1"], "potential.a1");
    if (pot.contains("a2")) c.a2 = as_double(pot["a2"], "potential.a2");
    if (pot.contains("a3")) c.a3 = as_double(pot["a3"], "potential.a3");
  } else if (kind == "cornell") {
    c.kind = PotentialKind::cornell;
    reject_unknown(pot, {"kind", "v0", "v1", "s0", "s1"}, "a cornell potential");
    if (pot.contains("v0")) c.v0 = as_double(pot["v0"], "potential.v0");
    if (pot.contains("v1")) c.v1 = as_double(pot["v1"], "potential.v1");
    if (pot.contains("s0")) c.s0 = as_double(pot["s0"], "potential.s0");
    if (pot.contains("s1")) c.s1 = as_double(pot["s1"], "potential.s1");
  } else {
    throw ConfigError("config: potential.kind must be \"pseudoharmonic\" or \"cornell\"");
  }

  if (doc.contains("states")) {
    const json& st = doc["states"];
    if (!st.is_array()) throw ConfigError("config: \"states\" must be an array of [n, ell] pairs");
    for (const auto& item : st) {
      if (!item.is_array() || item.size() != 2)
        throw ConfigError("config: each states entry must be an [n, ell] pair");
      c.states.emplace_back(as_int(item[0], "states.n"), as_int(item[1], "states.ell"));
    }
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void write_config(JsonWriter& w, const Config& c) {
  w.begin_object();
  w.key("alpha").value(c.alpha);
  w.key("chi").value(c.chi);
  w.key("omega_c").value(c.omega_c);
  w.key("phi").value(c.phi);
  w.key("omega").value(c.omega);
  w.key("b").value(c.b);
  w.key("d").value(c.d);
  w.key("potential").begin_object();
  if (c.kind == PotentialKind::pseudoharmonic) {
    w.key("kind").value("pseudoharmonic");
    w.key("a1").value(c.a1);
    w.key("a2").value(c.a2);
    w.key("a3").value(c.a3);
  } else {
    w.key("kind").value("cornell");
    w.key("v0").value(c.v0);
    w.key("v1").value(c.v1);
    w.key("s0").value(c.s0);
    w.key("s1").value(c.s1);
  }
  w.end_object();
  w.key("n").value(c.n);
  w.key("ell").value(c.ell);
  w.key("k").value(c.k);
  w.key("mass").value(c.mass);
  if (c.allow_alpha_above_one) w.key("allow_alpha_above_one").value(true);
  if (!c.states.empty()) {
    w.key("states").begin_array();
    for (const auto& [n, ell] : c.states) {
      w.begin_array().value(n).value(ell).end_array();
    }
    w.end_array();
  }
  w.end_object();
}

std::string config_to_json(const Config& c) {
  JsonWriter w;
  write_config(w, c);
  return w.str();
}

ValidationReport validate_configuration(const Config& c) {
  ValidationReport report;
  const auto flag = [&report](const std::string& msg) { report.violations.push_back(msg); };
  const auto check_finite = [&](double v, const char* name) {
    if (!std::isfinite(v)) flag(std::string(name) + " must be finite");
  };

  check_finite(c.alpha, "alpha");
  check_finite(c.chi, "chi");
  check_finite(c.omega_c, "omega_c");
  check_finite(c.phi, "phi");
  check_finite(c.omega, "omega");
  check_finite(c.b, "b");
  check_finite(c.d, "d");
  check_finite(c.k, "k");
  check_finite(c.mass, "mass");
  if (c.kind == PotentialKind::pseudoharmonic) {
    check_finite(c.a1, "a1");
    check_finite(c.a2, "a2");
    check_finite(c.a3, "a3");
  } else {
    check_finite(c.v0, "v0");
    check_finite(c.v1, "v1");
    check_finite(c.s0, "s0");
    check_finite(c.s1, "s1");
  }
  if (!report.ok()) return report;  // magnitude checks need finite values

  if (!(c.alpha > 0.0)) flag("alpha must be positive");
  if (c.alpha > 1.0 && !c.allow_alpha_above_one)
    flag("alpha must not exceed 1 (set allow_alpha_above_one to override)");
  if (c.omega_c < 0.0) flag("omega_c must be nonnegative");
  if (c.omega < 0.0) flag("omega must be nonnegative");
  if (c.n < 0) flag("n must be nonnegative");
  if (!(c.mass > 0.0)) flag("mass must be positive");
  for (const auto& [n, ell] : c.states) {
    (void)ell;
    if (n < 0) flag("states entries need n nonnegative");
  }
  if (!report.ok()) return report;

  if (c.kind == PotentialKind::pseudoharmonic) {
    if (c.a1 < 0.0) flag("a1 must be nonnegative for a bound-state search");
  } else {
    const double mo = c.mass * c.omega;
    const double mw = c.mass * c.omega_c;
    const double conf = c.s0 * c.s0 - c.v0 * c.v0 + mo * mo * c.b * c.b + mw * mw;
    if (!(conf > 0.0))
      flag("Δ ≤ 0: nothing confines "
           "(s0^2 - v0^2 + (m omega b)^2 + (m omega_c)^2 must be positive)");
    for (const auto& [n, ell] : c.states.empty() ? std::vector<std::pair<int, int>>{{c.n, c.ell}}
                                                 : c.states) {
      (void)n;
      const double zeta = ell - c.phi - c.k * c.chi;
      const double idx =
          c.s1 * c.s1 - c.v1 * c.v1 + mo * mo * c.d * c.d + (zeta / c.alpha) * (zeta / c.alpha);
      if (idx < 0.0) {
        flag("Γ < 0: complex origin index at ell = " + std::to_string(ell) +
             " (s1^2 - v1^2 + (m omega d)^2 + (zeta/alpha)^2 must be nonnegative)");
      }
    }
  }
  return report;
}

Problem build_problem(const Config& c) {
  SpacetimeParams spacetime(c.alpha, c.chi, c.allow_alpha_above_one);
  FieldParams fields(c.omega_c, c.phi, c.omega);
  CouplingSpec coupling(c.b, c.d);
  if (c.kind == PotentialKind::pseudoharmonic)
    return PhProblem{spacetime, fields, coupling, PseudoharmonicSpec(c.a1, c.a2, c.a3)};
  return CornellProblem{spacetime, fields, coupling, CornellSpec(c.v0, c.v1, c.s0, c.s1)};
}

StateLabel build_state(const Config& c) { return StateLabel(c.n, c.ell, c.k, c.mass); }

}  // namespace kgosc
