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

#include "bibennett/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

#include "bibennett/error.hpp"
#include "bibennett/limits.hpp"

namespace bibennett {

const char* const kSweepCsvHeader =
    "tau,status,tau_bar_minus,tau_bar_plus,tau_bar,closure_residual,"
    "isogram_residual,align_residual,certificates,verdict,detail";

namespace {

std::string sci(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", x + 0.0);
  return buf;
}

std::string fixed12(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x + 0.0);
  return buf;
}

CertificateVerdict verdict_of(const CertificateReport& r) {
  return CertificateVerdict{r.name, r.verdict(), r.max_zero_residual()};
}

template <class S>
double closure_of(const Loop<S>& l, const S& tau) {
  return l.planar ? planar_loop_closure_residual(l.pd, tau)
                  : loop_closure_residual(l.design, tau);
}

template <class S>
S max_abs_isogram(const SkewQuad<S>& q) {
  auto r = isogram_residuals(q);
  S a = abs_value(r[0]), b = abs_value(r[1]);
  return a < b ? b : a;
}

std::vector<double> bar_roots(const BiBennett<double>& b, double tau) {
  std::vector<double> roots =
      b.loop.planar ? solve_bar_tau_numeric(b, tau)
                    : solve_bar_tau(coupling_quartic(b.loop.design, b.mu.mu14(),
                                                     b.mu.mu12()),
                                    tau);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string cert_summary(const std::vector<CertificateVerdict>& certs) {
  std::string s;
  for (const auto& c : certs) {
    if (!s.empty()) s += ";";
    s += c.name + ":" + (c.pass ? "pass" : "fail");
  }
  return s;
}

}  // namespace

bool SweepRow::pass() const {
  if (status != kRowOk) return false;
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const CertificateVerdict& c) { return c.pass; });
}

std::vector<CertificateVerdict> certify_at(const Config& c, const Rational& tau,
                                           bool exact, std::optional<double> tol,
                                           std::vector<CertificateReport>* reports) {
  std::vector<CertificateVerdict> out;
  auto keep = [&](const CertificateReport& r) {
    out.push_back(verdict_of(r));
    if (reports) reports->push_back(r);
  };
  double t = tau.to_double();
  if (config_is_limit(c)) {
    LimitStructure ls = config_limit(c);
    CertificateReport r;
    r.name = std::string("labels ") + limit_kind_name(ls.kind);
    for (const LabelCheck& lc : verify_labels(ls, t, tol.value_or(1e-9))) {
      r.expect_zero(class_label_name(lc.label), lc.holds ? 0.0 : 1.0, 0.0);
      r.notes.push_back(std::string(class_label_name(lc.label)) + " residual " +
                        sci(lc.residual));
    }
    keep(r);
    return out;
  }
  if (!config_is_pair(c)) return out;
  BiBennett<Rational> b = config_bibennett(c);
  BiBennett<double> bd = to_double(b);
  switch (b.family) {
    case Family::kA:
    case Family::kB: {
      bool iso = b.family == Family::kA;
      CertificateReport r = iso ? isogonal_certificate(bd, t, tol.value_or(1e-10))
                                : deltoidal_certificate(bd, t, tol.value_or(1e-10));
      if (exact) {
        bool ok = iso ? isogonal_exact(b, tau) : deltoidal_exact(b, tau);
        r.name += " (exact)";
        r.expect_zero("exact numerators", ok ? 0.0 : 1.0, 0.0);
      }
      keep(r);
      break;
    }
    case Family::kC:
      keep(halfturn_certificate(bd, t, tol.value_or(1e-9)));
      keep(indicatrix_relation(bd, t, tol.value_or(1e-9)));
      break;
    default:
      break;
  }
  return out;
}

std::vector<SweepRow> sweep(const Config& c, const std::vector<Rational>& taus,
                            const SweepOptions& opt) {
  std::vector<SweepRow> rows;
  bool pair = config_is_pair(c);
  std::optional<BiBennett<Rational>> b;
  if (pair) b = config_bibennett(c);
  Loop<Rational> loop = pair ? b->loop : config_loop(c);
  MuSet<Rational> mu = pair ? b->mu : config_mu(c);
  for (const Rational& tau : taus) {
    SweepRow row;
    row.tau = tau;
    double t = tau.to_double();
    if (tau.is_zero() || std::fabs(t) < opt.pole_tol) {
      row.status = kRowPole;
      row.detail = "tau at the pole of the coupler parameter";
      rows.push_back(row);
      continue;
    }
    try {
      if (opt.exact) {
        row.closure_residual = sci(closure_of(loop, tau));
        Pose<Rational> pose = loop.pose(tau);
        row.isogram_residual = max_abs_isogram(points_on_axes(pose, mu)).str();
      } else {
        Loop<double> ld = to_double(loop);
        row.closure_residual = sci(closure_of(ld, t));
        row.isogram_residual =
            sci(max_abs_isogram(points_on_axes(ld.pose(t), to_double(mu))));
      }
      if (pair) {
        BiBennett<double> bd = to_double(*b);
        if (b->family == Family::kC) {
          std::vector<double> roots = bar_roots(bd, t);
          if (roots.empty()) {
            row.status = kRowEmptyBranch;
            row.tau_bar_minus = row.tau_bar_plus = "none";
            row.detail = "no real taubar";
            rows.push_back(row);
            continue;
          }
          row.tau_bar_minus = fixed12(roots.front());
          row.tau_bar_plus = fixed12(roots.back());
        }
        CoupledPose cp = coupled_pose(bd, t);
        row.tau_bar = cp.tau_bar;
        row.align_residual = cp.align_residual;
        if (std::fabs(cp.tau_bar) < opt.pole_tol) {
          row.status = kRowPole;
          row.detail = "taubar at the pole of the partner coupler parameter";
          rows.push_back(row);
          continue;
        }
        if (!opt.exact) {
          double bar_closure = closure_of(bd.bar_loop, cp.tau_bar);
          row.closure_residual =
              sci(std::max(closure_of(to_double(loop), t), bar_closure));
        }
        row.certificates = certify_at(c, tau, opt.exact, opt.tol);
      }
    } catch (const Error& e) {
      row.status = e.kind() == ErrorKind::kPole ? kRowPole : kRowError;
      row.detail = e.what();
    }
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(kSweepCsvHeader) + "\r\n";
  for (const SweepRow& r : rows) {
    std::vector<std::string> f{
        r.tau.str(),
        r.status,
        r.tau_bar_minus,
        r.tau_bar_plus,
        r.tau_bar ? fixed12(*r.tau_bar) : "",
        r.closure_residual,
        r.isogram_residual,
        r.align_residual ? sci(*r.align_residual) : "",
        cert_summary(r.certificates),
        r.status == kRowOk ? (r.pass() ? "pass" : "fail") : r.status,
        r.detail};
    for (size_t i = 0; i < f.size(); ++i) {
      if (i) out += ",";
      out += csv_field(f[i]);
    }
    out += "\r\n";
  }
  return out;
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SweepRow& r : rows) {
    nlohmann::ordered_json j;
    j["tau"] = r.tau.str();
    j["status"] = r.status;
    j["tau_bar_minus"] = r.tau_bar_minus;
    j["tau_bar_plus"] = r.tau_bar_plus;
    j["tau_bar"] = r.tau_bar ? nlohmann::ordered_json(*r.tau_bar) : nullptr;
    j["closure_residual"] = r.closure_residual;
    j["isogram_residual"] = r.isogram_residual;
    j["align_residual"] =
        r.align_residual ? nlohmann::ordered_json(*r.align_residual) : nullptr;
    nlohmann::ordered_json certs = nlohmann::ordered_json::array();
    for (const auto& c : r.certificates) {
      certs.push_back({{"name", c.name}, {"pass", c.pass},
                       {"max_residual", c.max_residual}});
    }
    j["certificates"] = certs;
    j["verdict"] = r.status == kRowOk ? (r.pass() ? "pass" : "fail") : r.status;
    j["detail"] = r.detail;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

}  // namespace bibennett
