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

// Per-tau sweep reports in CSV and JSON.

#ifndef BIBENNETT_SWEEP_HPP_
#define BIBENNETT_SWEEP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "bibennett/config.hpp"
#include "bibennett/properties.hpp"

namespace bibennett {

// Status markers.
inline constexpr const char* kRowOk = "ok";
inline constexpr const char* kRowPole = "pole";
inline constexpr const char* kRowEmptyBranch = "empty-branch";
inline constexpr const char* kRowError = "error";

struct CertificateVerdict {
  std::string name;
  bool pass = false;
  double max_residual = 0.0;
};

struct SweepRow {
  Rational tau;
  std::string status = kRowOk;
  std::string detail;                 // message for pole / error rows
  // Real partner parameters per branch (family C); "" when not applicable.
  std::string tau_bar_minus, tau_bar_plus;
  std::optional<double> tau_bar;      // the one used for the coupled pose
  std::string closure_residual;       // exact text in exact mode
  std::string isogram_residual;
  std::optional<double> align_residual;
  std::vector<CertificateVerdict> certificates;

  bool pass() const;
};

struct SweepOptions {
  bool exact = false;
  std::optional<double> tol;  // overrides the per-certificate defaults
  double pole_tol = 1e-9;     // |tau| or |taubar| below this is a pole row
};

std::vector<SweepRow> sweep(const Config& c, const std::vector<Rational>& taus,
                            const SweepOptions& opt = {});

// Fixed header, RFC 4180 quoting and CRLF line ends.
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);

extern const char* const kSweepCsvHeader;

// The certificates that apply to a configuration, evaluated at one tau.
// Exact mode runs the exact isogonal/deltoidal variants for families A and B.
std::vector<CertificateVerdict> certify_at(const Config& c, const Rational& tau,
                                           bool exact, std::optional<double> tol,
                                           std::vector<CertificateReport>* reports =
                                               nullptr);

}  // namespace bibennett

#endif  // BIBENNETT_SWEEP_HPP_
