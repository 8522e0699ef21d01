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

// JSON configuration, schema version 1. See README.md for the key list.

#ifndef BIBENNETT_CONFIG_HPP_
#define BIBENNETT_CONFIG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "bibennett/bennett.hpp"
#include "bibennett/families.hpp"
#include "bibennett/limits.hpp"
#include "bibennett/rational.hpp"

namespace bibennett {

enum class ConfigKind {
  kSingle,         // one Bennett loop
  kPlanar,         // one planar loop
  kFamilyA,
  kFamilyB,
  kFamilyC,
  kPrismaticAnti,  // limits; "source" picks the family
  kPrismaticPara,
  kPyramidal,
};

const char* config_kind_name(ConfigKind k);

struct Config {
  int schema = 1;
  ConfigKind kind = ConfigKind::kSingle;
  std::optional<Family> source;
  std::optional<Rational> a1, a2, k;
  std::optional<Rational> d1, d2;
  std::optional<PlanarCase> planar_case;
  std::optional<Rational> mu14, mu12, mu23, mu34;
  std::optional<int> s;
  std::optional<int> branch;
  std::optional<Rational> tau;
  std::vector<Rational> taus;
  std::optional<Rational> tau_min, tau_max;
  std::optional<int> tau_samples;
  bool exact = false;  // "mode": "exact" | "float"
  std::optional<double> tol;
  std::optional<int> patch_n;
  std::optional<Rational> ribbon_width;

  bool operator==(const Config&) const = default;
};

// Schema violations raise kSchema with the offending key path ("$.mu34");
// rule violations raise kValidation naming the rule.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

// Canonical JSON text; rationals are written as "p/q" strings.
std::string serialize_config(const Config& c);

// The tau values a config asks for, in increasing order for ranges.
std::vector<Rational> config_taus(const Config& c);

// Checks everything the builders below would check. Throws kValidation.
void validate_config(const Config& c);

BennettDesign<Rational> config_design(const Config& c);
Loop<Rational> config_loop(const Config& c);
MuSet<Rational> config_mu(const Config& c);  // missing offsets read as zero
bool config_is_limit(const Config& c);
bool config_is_pair(const Config& c);
BiBennett<Rational> config_bibennett(const Config& c);
LimitStructure config_limit(const Config& c);

}  // namespace bibennett

#endif  // BIBENNETT_CONFIG_HPP_
