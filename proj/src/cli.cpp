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

#include "bibennett/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bibennett/appendix.hpp"
#include "bibennett/config.hpp"
#include "bibennett/error.hpp"
#include "bibennett/limits.hpp"
#include "bibennett/mesh.hpp"
#include "bibennett/sweep.hpp"

namespace bibennett {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::string config;
  std::string tau;
  int branch = 0;
  int s = 0;
  std::string mode;
  double tol = 0.0;
  int patch_n = 0;
  std::string out;
  bool verbose = false;
};

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x + 0.0);
  return buf;
}

std::string vec_text(const Vec3<double>& v) {
  return "(" + num(v[0]) + ", " + num(v[1]) + ", " + num(v[2]) + ")";
}

ojson vec_json(const Vec3<double>& v) { return ojson::array({v[0], v[1], v[2]}); }

bool input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::kSchema:
    case ErrorKind::kValidation:
    case ErrorKind::kParse:
    case ErrorKind::kIo:
    case ErrorKind::kNoRealTauBar:
    case ErrorKind::kConvention:
    case ErrorKind::kDegenerate:
    case ErrorKind::kInvalidScale:
    case ErrorKind::kPole:
    case ErrorKind::kTrivial:
    case ErrorKind::kPrecondition:
      return true;
    default:
      return false;
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::kIo, "cannot write " + path);
  f << text;
  if (!f) throw Error(ErrorKind::kIo, "write failed for " + path);
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err)
      : o_(o), out_(out), err_(err) {}

  Config load() {
    if (o_.config.empty()) {
      throw Error(ErrorKind::kSchema, "--config: required for this command");
    }
    Config c = load_config(o_.config);
    if (!o_.tau.empty()) {
      auto t = Rational::TryParse(o_.tau);
      if (!t) throw Error(ErrorKind::kSchema, "--tau: expected a rational");
      c.tau = *t;
      c.taus.clear();
      c.tau_min.reset();
      c.tau_max.reset();
      c.tau_samples.reset();
    }
    if (o_.branch) c.branch = o_.branch;
    if (o_.s) c.s = o_.s;
    if (!o_.mode.empty()) c.exact = o_.mode == "exact";
    if (o_.tol > 0) c.tol = o_.tol;
    if (o_.patch_n > 0) c.patch_n = o_.patch_n;
    if (!c.tol) {
      if (const char* env = std::getenv(kTolEnv)) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0)) {
          throw Error(ErrorKind::kSchema,
                      std::string(kTolEnv) + ": expected a positive number");
        }
        c.tol = v;
      }
    }
    validate_config(c);
    return c;
  }

  Rational first_tau(const Config& c) {
    auto ts = config_taus(c);
    if (ts.empty()) throw Error(ErrorKind::kSchema, "$.tau: required (or pass --tau)");
    return ts.front();
  }

  void emit(const ojson& j) {
    if (!o_.out.empty()) write_file(o_.out, j.dump(2) + "\n");
  }

  int validate() {
    Config c = load();
    out_ << "valid: family " << config_kind_name(c.kind);
    if (c.source) out_ << " from " << family_name(*c.source);
    if (config_is_pair(c) && c.kind != ConfigKind::kFamilyB) {
      BiBennett<Rational> b = config_bibennett(c);
      if (!b.loop.planar) {
        out_ << ", a1 = " << b.loop.design.a1 << ", a2 = " << b.loop.design.a2
             << ", k = " << b.loop.design.k;
      }
    }
    out_ << "\n";
    return kExitOk;
  }

  void dump_matrices(const Loop<Rational>& loop, const Rational& tau) {
    Chain<double> ch;
    Loop<double> ld = to_double(loop);
    ch = ld.planar ? planar_chain(ld.pd, tau.to_double())
                   : dh_chain(ld.design, tau.to_double());
    const char* names[3] = {"M12", "M23", "M34"};
    const Mat4<double>* ms[3] = {&ch.m12, &ch.m23, &ch.m34};
    for (int k = 0; k < 3; ++k) {
      out_ << names[k] << ":\n";
      for (int i = 0; i < 4; ++i) {
        out_ << "  ";
        for (int j = 0; j < 4; ++j) out_ << num((*ms[k])[i][j]) << (j < 3 ? " " : "\n");
      }
    }
  }

  int construct() {
    Config c = load();
    Rational tau = first_tau(c);
    double t = tau.to_double();
    ojson j;
    j["family"] = config_kind_name(c.kind);
    j["tau"] = tau.str();
    Loop<Rational> loop = config_is_pair(c) ? config_bibennett(c).loop : config_loop(c);
    Loop<double> ld = to_double(loop);
    out_ << "K = " << num(ld.K()) << ", tau = " << tau << "\n";
    if (o_.verbose) dump_matrices(loop, tau);
    auto print_pose = [&](const char* tag, const Pose<double>& p,
                          const SkewQuad<double>& q) {
      ojson axes = ojson::array();
      for (int i = 0; i < 4; ++i) {
        out_ << tag << axis_name(i) << ": F = " << vec_text(p.F(i))
             << ", r = " << vec_text(p.r(i)) << ", P = " << vec_text(q[i]) << "\n";
        axes.push_back({{"axis", axis_name(i)}, {"F", vec_json(p.F(i))},
                        {"r", vec_json(p.r(i))}, {"P", vec_json(q[i])}});
      }
      return axes;
    };
    if (!config_is_pair(c)) {
      Pose<double> p = ld.pose(t);
      j["axes"] = print_pose("B", p, points_on_axes(p, to_double(config_mu(c))));
      emit(j);
      return kExitOk;
    }
    BiBennett<double> bd = to_double(config_bibennett(c));
    CoupledPose cp = coupled_pose(bd, t);
    j["tau_bar"] = cp.tau_bar;
    out_ << "tau_bar = " << num(cp.tau_bar) << "\n";
    j["axes"] = print_pose("B", cp.pose, cp.quad);
    Pose<double> hat;
    for (int v = 0; v < 4; ++v) hat.axes[v] = cp.hat_axis(v);
    j["hat_axes"] = print_pose("H", hat, cp.quad);
    auto iso = isogram_residuals(cp.quad);
    out_ << "isogram residuals: " << num(iso[0]) << " " << num(iso[1]) << "\n";
    out_ << "coupling fit residual: " << num(cp.align_residual) << "\n";
    j["isogram_residuals"] = {iso[0], iso[1]};
    j["align_residual"] = cp.align_residual;
    if (bd.family == Family::kC) {
      ojson loops = ojson::array();
      for (const SixRLoop& l : extract_6r_loops(cp)) {
        std::string text;
        for (const std::string& s : l.labels) text += (text.empty() ? "" : " ") + s;
        out_ << "6R loop: " << text << "\n";
        loops.push_back(text);
      }
      j["six_r_loops"] = loops;
    }
    emit(j);
    return kExitOk;
  }

  int sweep_cmd() {
    Config c = load();
    auto taus = config_taus(c);
    if (taus.empty()) throw Error(ErrorKind::kSchema, "$.tau: required (or pass --tau)");
    SweepOptions so;
    so.exact = c.exact;
    so.tol = c.tol;
    auto rows = sweep(c, taus, so);
    bool json_out = o_.out.size() >= 5 && o_.out.substr(o_.out.size() - 5) == ".json";
    std::string text = json_out ? sweep_json(rows) : sweep_csv(rows);
    if (o_.out.empty()) {
      out_ << text;
    } else {
      write_file(o_.out, text);
      out_ << rows.size() << " rows written to " << o_.out << "\n";
    }
    bool ok = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) {
      return r.status != kRowOk || r.pass();
    });
    return ok ? kExitOk : kExitFail;
  }

  void print_report(const CertificateReport& r, ojson& arr) {
    out_ << (r.verdict() ? "PASS " : "FAIL ") << r.name << "  max residual "
         << num(r.max_zero_residual()) << "\n";
    ojson rj;
    rj["name"] = r.name;
    rj["pass"] = r.verdict();
    ojson res = ojson::array();
    for (const Residual& x : r.residuals) {
      if (o_.verbose || !x.pass) {
        out_ << "    " << (x.pass ? "ok   " : "FAIL ") << x.label << " = "
             << num(x.value) << " (tol " << num(x.tol) << ")\n";
      }
      res.push_back({{"label", x.label}, {"value", x.value}, {"tol", x.tol},
                     {"pass", x.pass}});
    }
    for (const std::string& n : r.notes) {
      if (o_.verbose) out_ << "    note: " << n << "\n";
    }
    rj["residuals"] = res;
    rj["notes"] = r.notes;
    arr.push_back(rj);
  }

  int certify() {
    Config c = load();
    auto taus = config_taus(c);
    if (taus.empty()) throw Error(ErrorKind::kSchema, "$.tau: required (or pass --tau)");
    bool ok = true;
    ojson arr = ojson::array();
    if (c.kind == ConfigKind::kFamilyA || c.kind == ConfigKind::kFamilyB ||
        c.kind == ConfigKind::kFamilyC) {
      BiBennett<Rational> b = config_bibennett(c);
      NecessaryConditions nc = necessary_conditions(b.loop, b.mu, b.bar_loop, b.bar_mu);
      CertificateReport r;
      r.name = "necessary conditions (exact)";
      auto vals = nc.values();
      for (size_t i = 0; i < vals.size(); ++i) {
        r.expect_zero("condition " + std::to_string(i + 1),
                      vals[i].is_zero() ? 0.0 : std::fabs(vals[i].to_double()), 0.0);
      }
      print_report(r, arr);
      ok = ok && r.verdict();
    }
    for (const Rational& tau : taus) {
      out_ << "tau = " << tau << "\n";
      std::vector<CertificateReport> reports;
      try {
        certify_at(c, tau, c.exact, c.tol, &reports);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kNoRealTauBar) throw;
        out_ << "SKIP no real taubar\n";
        continue;
      }
      for (const auto& r : reports) {
        print_report(r, arr);
        ok = ok && r.verdict();
      }
    }
    emit(ojson{{"pass", ok}, {"certificates", arr}});
    return ok ? kExitOk : kExitFail;
  }

  int limits() {
    Config c = load();
    if (!config_is_limit(c)) {
      throw Error(ErrorKind::kValidation, "rule: limits needs a prismatic or pyramidal family");
    }
    LimitStructure ls = config_limit(c);
    out_ << limit_kind_name(ls.kind) << " limit of family " << family_name(ls.source)
         << ", labels:";
    ojson labels = ojson::array();
    for (ClassLabel l : ls.labels) {
      out_ << " " << class_label_name(l);
      labels.push_back(class_label_name(l));
    }
    out_ << "\n";
    bool ok = true;
    ojson checks = ojson::array();
    for (const Rational& tau : config_taus(c)) {
      for (const LabelCheck& lc : verify_labels(ls, tau.to_double(), c.tol.value_or(1e-9))) {
        out_ << (lc.holds ? "PASS " : "FAIL ") << class_label_name(lc.label)
             << " at tau = " << tau << "  residual " << num(lc.residual) << "\n";
        ok = ok && lc.holds;
        checks.push_back({{"tau", tau.str()}, {"label", class_label_name(lc.label)},
                          {"holds", lc.holds}, {"residual", lc.residual}});
      }
    }
    emit(ojson{{"kind", limit_kind_name(ls.kind)}, {"source", family_name(ls.source)},
               {"labels", labels}, {"checks", checks}, {"pass", ok}});
    return ok ? kExitOk : kExitFail;
  }

  int appendix() {
    CertificateReport r = verify_nonexistence();
    ojson arr = ojson::array();
    bool saved = o_.verbose;
    o_.verbose = true;
    print_report(r, arr);
    o_.verbose = saved;
    out_ << (r.verdict() ? "no flexible plane-symmetric arrangement exists\n"
                         : "non-existence argument incomplete\n");
    emit(arr[0]);
    return r.verdict() ? kExitOk : kExitFail;
  }

  int export_obj() {
    Config c = load();
    if (o_.out.empty()) throw Error(ErrorKind::kSchema, "--out: required for export");
    Rational tau = first_tau(c);
    double t = tau.to_double();
    RibbonOptions ro;
    ro.n = c.patch_n.value_or(4);
    if (c.ribbon_width) ro.width = c.ribbon_width->to_double();
    TubeMesh mesh;
    if (config_is_pair(c)) {
      mesh = coupled_ribbons(coupled_pose(to_double(config_bibennett(c)), t), ro);
    } else {
      Loop<double> ld = to_double(config_loop(c));
      Pose<double> p = ld.pose(t);
      SkewQuad<double> q = points_on_axes(p, to_double(config_mu(c)));
      double w = ro.width > 0 ? ro.width : 0.1 * mean_edge(q);
      mesh = bennett_ribbons(p, q, "B", w > 0 ? w : 0.1, ro.n);
    }
    if (!obj_lint(mesh)) {
      err_ << "mesh failed the structural lint\n";
      return kExitFail;
    }
    write_file(o_.out, to_obj(mesh));
    out_ << "wrote " << mesh.groups.size() << " groups, " << mesh.vertices.size()
         << " vertices, " << mesh.faces.size() << " faces to " << o_.out << "\n";
    return kExitOk;
  }

 private:
  Options o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Bennett loops and flexible bi-Bennett couplings"};
  app.require_subcommand(1);
  Options o;
  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"validate", "parse and check a configuration"},
      {"construct", "print the configured structure at one tau"},
      {"sweep", "per-tau report as CSV (or JSON when --out ends in .json)"},
      {"certify", "run the certificates that apply to the family"},
      {"limits", "class labels of a prismatic or pyramidal limit"},
      {"appendix", "run the plane-symmetry non-existence suite"},
      {"export", "write an OBJ ribbon mesh"},
  };
  std::vector<CLI::App*> cmds;
  for (const Sub& s : subs) {
    CLI::App* sc = app.add_subcommand(s.name, s.help);
    if (std::string(s.name) != "appendix") {
      sc->add_option("-c,--config", o.config, "JSON configuration file");
      sc->add_option("--tau", o.tau, "motion parameter, rational or decimal");
      sc->add_option("--branch", o.branch, "taubar root for family C: -1 or 1")
          ->check(CLI::IsMember({-1, 1}));
      sc->add_option("--s", o.s, "sign s for family C: -1 or 1")
          ->check(CLI::IsMember({-1, 1}));
      sc->add_option("--mode", o.mode, "exact or float")
          ->check(CLI::IsMember({"exact", "float"}));
      sc->add_option("--tol", o.tol, "certificate tolerance")
          ->check(CLI::PositiveNumber);
      sc->add_option("--patch-n", o.patch_n, "HP patch density")
          ->check(CLI::PositiveNumber);
    }
    sc->add_option("--out", o.out, "output file");
    sc->add_flag("-v,--verbose", o.verbose, "print every residual and matrix");
    cmds.push_back(sc);
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  Runner run(o, out, err);
  try {
    std::string name = app.get_subcommands().front()->get_name();
    if (name == "validate") return run.validate();
    if (name == "construct") return run.construct();
    if (name == "sweep") return run.sweep_cmd();
    if (name == "certify") return run.certify();
    if (name == "limits") return run.limits();
    if (name == "appendix") return run.appendix();
    return run.export_obj();
  } catch (const Error& e) {
    err << "error [" << ErrorKindName(e.kind()) << "]: " << e.what() << "\n";
    return input_error(e.kind()) ? kExitInput : kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace bibennett
