// Copyright 2026 The bibennett Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bibennett/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "bibennett/error.hpp"

namespace bibennett {

using nlohmann::json;

namespace {

struct KindName {
  ConfigKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {ConfigKind::kSingle, "single"},
    {ConfigKind::kPlanar, "planar"},
    {ConfigKind::kFamilyA, "A"},
    {ConfigKind::kFamilyB, "B"},
    {ConfigKind::kFamilyC, "C"},
    {ConfigKind::kPrismaticAnti, "prismatic-anti"},
    {ConfigKind::kPrismaticPara, "prismatic-para"},
    {ConfigKind::kPyramidal, "pyramidal"},
};

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "schema", "family", "source", "a1", "a2", "k", "d1", "d2", "case",
      "mu14", "mu12", "mu23", "mu34", "s", "branch", "tau", "taus",
      "tau_range", "tau_samples", "mode", "tol", "patch_n", "ribbon_width"};
  return keys;
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::kSchema, path + ": " + what);
}

[[noreturn]] void rule_error(const std::string& rule) {
  throw Error(ErrorKind::kValidation, "rule: " + rule);
}

Rational read_rational(const json& v, const std::string& path) {
  std::optional<Rational> q;
  if (v.is_string()) {
    q = Rational::TryParse(v.get<std::string>());
  } else if (v.is_number_integer()) {
    q = Rational::TryParse(v.dump());
  } else if (v.is_number_float()) {
    // The shortest round-trip text is the decimal the author wrote.
    q = Rational::TryParse(v.dump());
  }
  if (!q) schema_error(path, "expected a rational (\"p/q\" or a decimal)");
  return *q;
}

int read_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) schema_error(path, "expected an integer");
  return v.get<int>();
}

int read_sign(const json& v, const std::string& path) {
  int s = read_int(v, path);
  if (s != 1 && s != -1) schema_error(path, "expected 1 or -1");
  return s;
}

std::string rational_text(const Rational& q) { return q.str(); }

ConfigKind kind_from(const std::string& s, const std::string& path) {
  for (const auto& kn : kKindNames)
    if (s == kn.name) return kn.kind;
  schema_error(path, "unknown family '" + s + "'");
}

bool is_limit(ConfigKind k) {
  return k == ConfigKind::kPrismaticAnti || k == ConfigKind::kPrismaticPara ||
         k == ConfigKind::kPyramidal;
}

void require(const Config& c, bool present, const char* key) {
  if (!present) {
    schema_error(std::string("$.") + key,
                 std::string("required for family ") + config_kind_name(c.kind) +
                     (c.source ? std::string(" / source ") + family_name(*c.source)
                               : std::string()));
  }
}

void check_required(const Config& c) {
  auto need_design = [&] {
    require(c, c.a1.has_value(), "a1");
    require(c, c.a2.has_value(), "a2");
  };
  auto need_planar = [&] {
    require(c, c.d1.has_value(), "d1");
    require(c, c.d2.has_value(), "d2");
  };
  switch (c.kind) {
    case ConfigKind::kSingle:
      need_design();
      return;
    case ConfigKind::kPlanar:
      need_planar();
      require(c, c.planar_case.has_value(), "case");
      return;
    case ConfigKind::kFamilyA:
      require(c, c.mu14.has_value(), "mu14");
      require(c, c.mu12.has_value(), "mu12");
      require(c, c.mu23.has_value(), "mu23");
      require(c, c.mu34.has_value(), "mu34");
      return;
    case ConfigKind::kFamilyB:
      need_design();
      require(c, c.mu23.has_value(), "mu23");
      require(c, c.mu34.has_value(), "mu34");
      return;
    case ConfigKind::kFamilyC:
      need_design();
      require(c, c.mu14.has_value(), "mu14");
      require(c, c.mu12.has_value(), "mu12");
      require(c, c.s.has_value(), "s");
      return;
    default:
      break;
  }
  require(c, c.source.has_value(), "source");
  if (c.kind != ConfigKind::kPyramidal) {
    need_planar();
  } else if (*c.source != Family::kA) {
    need_design();
  }
  switch (*c.source) {
    case Family::kA:
      if (c.kind == ConfigKind::kPyramidal) require(c, c.mu14.has_value(), "mu14");
      require(c, c.mu12.has_value(), "mu12");
      require(c, c.mu23.has_value(), "mu23");
      require(c, c.mu34.has_value(), "mu34");
      break;
    case Family::kB:
      require(c, c.mu23.has_value(), "mu23");
      require(c, c.mu34.has_value(), "mu34");
      break;
    case Family::kC:
      require(c, c.mu14.has_value(), "mu14");
      require(c, c.mu12.has_value(), "mu12");
      require(c, c.s.has_value(), "s");
      break;
    default:
      schema_error("$.source", "expected A, B or C");
  }
}

LimitKind limit_kind(ConfigKind k) {
  switch (k) {
    case ConfigKind::kPrismaticAnti: return LimitKind::kPrismaticAnti;
    case ConfigKind::kPrismaticPara: return LimitKind::kPrismaticPara;
    default: return LimitKind::kPyramidal;
  }
}

// Rewraps builder errors as rule violations.
template <class F>
auto as_rule(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::kSchema:
      case ErrorKind::kValidation:
      case ErrorKind::kParse:
        throw;
      default:
        rule_error(std::string(ErrorKindName(e.kind())) + ": " + e.what());
    }
  }
}

}  // namespace

const char* config_kind_name(ConfigKind k) {
  for (const auto& kn : kKindNames)
    if (k == kn.kind) return kn.name;
  return "?";
}

Config parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kSchema,
                "$: invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) schema_error("$", "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!known_keys().count(key)) schema_error("$." + key, "unknown key");
  }
  Config c;
  if (j.contains("schema")) {
    c.schema = read_int(j["schema"], "$.schema");
    if (c.schema != 1) schema_error("$.schema", "unsupported version");
  }
  if (!j.contains("family")) schema_error("$.family", "required");
  if (!j["family"].is_string()) schema_error("$.family", "expected a string");
  c.kind = kind_from(j["family"].get<std::string>(), "$.family");
  if (j.contains("source")) {
    if (!is_limit(c.kind)) schema_error("$.source", "only allowed for limit families");
    const json& v = j["source"];
    if (!v.is_string()) schema_error("$.source", "expected a string");
    std::string s = v.get<std::string>();
    if (s != "A" && s != "B" && s != "C") schema_error("$.source", "expected A, B or C");
    c.source = parse_family(s);
  }
  auto opt_rational = [&](const char* key, std::optional<Rational>& out) {
    if (j.contains(key)) out = read_rational(j[key], std::string("$.") + key);
  };
  opt_rational("a1", c.a1);
  opt_rational("a2", c.a2);
  opt_rational("k", c.k);
  opt_rational("d1", c.d1);
  opt_rational("d2", c.d2);
  opt_rational("mu14", c.mu14);
  opt_rational("mu12", c.mu12);
  opt_rational("mu23", c.mu23);
  opt_rational("mu34", c.mu34);
  opt_rational("tau", c.tau);
  opt_rational("ribbon_width", c.ribbon_width);
  if (j.contains("case")) {
    const json& v = j["case"];
    std::string s = v.is_string() ? v.get<std::string>() : "";
    if (s != "1a" && s != "1b" && s != "2a" && s != "2b") {
      schema_error("$.case", "expected one of 1a, 1b, 2a, 2b");
    }
    c.planar_case = parse_planar_case(s);
  }
  if (j.contains("s")) c.s = read_sign(j["s"], "$.s");
  if (j.contains("branch")) c.branch = read_sign(j["branch"], "$.branch");
  if (j.contains("taus")) {
    const json& v = j["taus"];
    if (!v.is_array()) schema_error("$.taus", "expected an array");
    for (size_t i = 0; i < v.size(); ++i) {
      c.taus.push_back(read_rational(v[i], "$.taus[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("tau_range")) {
    const json& v = j["tau_range"];
    if (!v.is_array() || v.size() != 2) {
      schema_error("$.tau_range", "expected [min, max]");
    }
    c.tau_min = read_rational(v[0], "$.tau_range[0]");
    c.tau_max = read_rational(v[1], "$.tau_range[1]");
    if (!j.contains("tau_samples")) schema_error("$.tau_samples", "required with tau_range");
  }
  if (j.contains("tau_samples")) {
    if (!j.contains("tau_range")) schema_error("$.tau_samples", "needs tau_range");
    c.tau_samples = read_int(j["tau_samples"], "$.tau_samples");
    if (*c.tau_samples < 1) schema_error("$.tau_samples", "must be at least 1");
  }
  if (j.contains("mode")) {
    const json& v = j["mode"];
    std::string m = v.is_string() ? v.get<std::string>() : "";
    if (m != "exact" && m != "float") schema_error("$.mode", "expected exact or float");
    c.exact = m == "exact";
  }
  if (j.contains("tol")) {
    if (!j["tol"].is_number()) schema_error("$.tol", "expected a number");
    c.tol = j["tol"].get<double>();
    if (!(*c.tol > 0)) schema_error("$.tol", "must be positive");
  }
  if (j.contains("patch_n")) {
    c.patch_n = read_int(j["patch_n"], "$.patch_n");
    if (*c.patch_n < 1) schema_error("$.patch_n", "must be at least 1");
  }
  check_required(c);
  validate_config(c);
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const Config& c) {
  json j;
  j["schema"] = c.schema;
  j["family"] = config_kind_name(c.kind);
  if (c.source) j["source"] = family_name(*c.source);
  auto put = [&](const char* key, const std::optional<Rational>& v) {
    if (v) j[key] = rational_text(*v);
  };
  put("a1", c.a1);
  put("a2", c.a2);
  put("k", c.k);
  put("d1", c.d1);
  put("d2", c.d2);
  if (c.planar_case) j["case"] = planar_case_name(*c.planar_case);
  put("mu14", c.mu14);
  put("mu12", c.mu12);
  put("mu23", c.mu23);
  put("mu34", c.mu34);
  if (c.s) j["s"] = *c.s;
  if (c.branch) j["branch"] = *c.branch;
  put("tau", c.tau);
  if (!c.taus.empty()) {
    json a = json::array();
    for (const Rational& t : c.taus) a.push_back(rational_text(t));
    j["taus"] = a;
  }
  if (c.tau_min && c.tau_max) {
    j["tau_range"] = json::array({rational_text(*c.tau_min), rational_text(*c.tau_max)});
  }
  if (c.tau_samples) j["tau_samples"] = *c.tau_samples;
  j["mode"] = c.exact ? "exact" : "float";
  if (c.tol) j["tol"] = *c.tol;
  if (c.patch_n) j["patch_n"] = *c.patch_n;
  put("ribbon_width", c.ribbon_width);
  return j.dump(2) + "\n";
}

std::vector<Rational> config_taus(const Config& c) {
  std::vector<Rational> out;
  if (c.tau) out.push_back(*c.tau);
  for (const Rational& t : c.taus) out.push_back(t);
  if (c.tau_min && c.tau_max && c.tau_samples) {
    int n = *c.tau_samples;
    if (n == 1) {
      out.push_back(*c.tau_min);
    } else {
      Rational step = (*c.tau_max - *c.tau_min) / Rational(n - 1);
      for (int i = 0; i < n; ++i) out.push_back(*c.tau_min + step * Rational(i));
    }
  }
  return out;
}

bool config_is_limit(const Config& c) { return is_limit(c.kind); }

bool config_is_pair(const Config& c) {
  return c.kind == ConfigKind::kFamilyA || c.kind == ConfigKind::kFamilyB ||
         c.kind == ConfigKind::kFamilyC || is_limit(c.kind);
}

MuSet<Rational> config_mu(const Config& c) {
  auto v = [](const std::optional<Rational>& x) { return x.value_or(Rational(0)); };
  return MuSet<Rational>(v(c.mu14), v(c.mu12), v(c.mu23), v(c.mu34));
}

BennettDesign<Rational> config_design(const Config& c) {
  Rational k = c.k.value_or(Rational(1));
  if (c.kind == ConfigKind::kFamilyA) {
    if (!(k == Rational(1))) rule_error("family A is built with k = 1");
    auto [a1, a2] = as_rule([&] { return family_a(config_mu(c)); });
    if ((c.a1 && !(*c.a1 == a1)) || (c.a2 && !(*c.a2 == a2))) {
      rule_error("family A: given a1, a2 differ from the values the offsets "
                 "determine (" + a1.str() + ", " + a2.str() + ")");
    }
    return as_rule([&] { return validate(a1, a2, k); });
  }
  if (!c.a1 || !c.a2) rule_error("a spatial design needs a1 and a2");
  if (c.kind == ConfigKind::kPyramidal) k = Rational(0);
  const Rational a1 = *c.a1, a2 = *c.a2;
  if (a1.sign() <= 0 || a2.sign() <= 0) {
    rule_error("a1 and a2 must be positive (twist angles in (0, pi))");
  }
  if (a1 == a2) rule_error("a1 != a2 (equal values make the transmission factor infinite)");
  if (k.sign() < 0) rule_error("k >= 0");
  return validate(a1, a2, k);
}

Loop<Rational> config_loop(const Config& c) {
  if (c.kind == ConfigKind::kPlanar ||
      (is_limit(c.kind) && c.kind != ConfigKind::kPyramidal)) {
    if (c.d1->sign() <= 0 || c.d2->sign() <= 0) rule_error("d1 and d2 must be positive");
    PlanarCase pc = c.planar_case.value_or(
        c.kind == ConfigKind::kPrismaticPara ? PlanarCase::k2b : PlanarCase::k2a);
    if ((pc == PlanarCase::k1a || pc == PlanarCase::k2a) && *c.d1 == *c.d2) {
      rule_error("d1 != d2 for the anti-parallelogram cases");
    }
    return as_rule([&] {
      return Loop<Rational>::Planar(validate_planar(*c.d1, *c.d2, pc));
    });
  }
  return Loop<Rational>::Spatial(config_design(c));
}

BiBennett<Rational> config_bibennett(const Config& c) {
  if (is_limit(c.kind)) return config_limit(c).coupling;
  int branch = c.branch.value_or(-1);
  switch (c.kind) {
    case ConfigKind::kFamilyA:
      return as_rule([&] {
        MuSet<Rational> mu = config_mu(c);
        if (detect_trivial(mu)) {
          throw Error(ErrorKind::kTrivial, "offsets give the self-coupling branch");
        }
        return make_line_symmetric(Family::kA, config_loop(c), mu);
      });
    case ConfigKind::kFamilyB:
      return as_rule([&] {
        MuSet<Rational> mu = family_b(*c.mu23, *c.mu34);
        if (detect_trivial(mu)) {
          throw Error(ErrorKind::kTrivial, "offsets give the self-coupling branch");
        }
        return make_line_symmetric(Family::kB, config_loop(c), mu);
      });
    case ConfigKind::kFamilyC:
      return as_rule([&] {
        return family_c(config_loop(c), *c.mu14, *c.mu12, *c.s, branch);
      });
    default:
      rule_error(std::string("family ") + config_kind_name(c.kind) +
                 " does not describe a coupled pair");
  }
}

LimitStructure config_limit(const Config& c) {
  if (!is_limit(c.kind)) rule_error("not a limit configuration");
  LimitKind lk = limit_kind(c.kind);
  int branch = c.branch.value_or(-1);
  return as_rule([&] {
    if (lk == LimitKind::kPyramidal) {
      BennettDesign<Rational> d;
      if (*c.source != Family::kA) d = config_design(c);
      return pyramidal_limit(*c.source, d, config_mu(c), c.s.value_or(1), branch);
    }
    config_loop(c);  // rule checks on d1, d2
    if (*c.source == Family::kC) {
      return prismatic_limit_c(lk, *c.d1, *c.d2, *c.mu14, *c.mu12, *c.s, branch);
    }
    return prismatic_limit_ab(*c.source, lk, *c.d1, *c.d2, config_mu(c));
  });
}

void validate_config(const Config& c) {
  if (c.tau && c.tau->is_zero()) rule_error("tau != 0 (pole of the coupler angle)");
  for (const Rational& t : c.taus) {
    if (t.is_zero()) rule_error("tau != 0 (pole of the coupler angle)");
  }
  if (c.tau_min && c.tau_max && !(*c.tau_min < *c.tau_max)) {
    rule_error("tau_range needs min < max");
  }
  if (c.ribbon_width && c.ribbon_width->sign() <= 0) rule_error("ribbon_width > 0");
  if (config_is_pair(c)) {
    config_bibennett(c);
  } else {
    config_loop(c);
  }
}

}  // namespace bibennett
