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

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bibennett/config.hpp"
#include "bibennett/error.hpp"
#include "bibennett/mesh.hpp"
#include "bibennett/sampling.hpp"
#include "bibennett/sweep.hpp"

namespace bibennett {
namespace {

using Q = Rational;

const char* kFigSix =
    R"({"family":"C","a1":"1/2","a2":"1/3","k":"1","mu14":"2/3","mu12":"1/4","s":1,"tau":"9/10"})";

std::string fixture(const std::string& name) {
  return std::string(BIBENNETT_FIXTURE_DIR) + "/" + name;
}

Error error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return Error(ErrorKind::kIo, "");
}

TEST(ConfigTest, ParsesFigureSixExactly) {
  Config c = parse_config(kFigSix);
  EXPECT_EQ(c.kind, ConfigKind::kFamilyC);
  EXPECT_EQ(*c.a1, Q(1, 2));
  EXPECT_EQ(*c.mu12, Q(1, 4));
  EXPECT_EQ(*c.tau, Q(9, 10));
  BiBennett<Q> b = config_bibennett(c);
  EXPECT_EQ(b.family, Family::kC);
  EXPECT_EQ(b.bar_mu.mu14(), Q(1, 4));
}

TEST(ConfigTest, NumbersAreReadThroughTheirDecimalText) {
  Config c = parse_config(R"({"family":"single","a1":0.5,"a2":"1/3","k":1,"tau":0.1})");
  EXPECT_EQ(*c.a1, Q(1, 2));
  EXPECT_EQ(*c.tau, Q(1, 10));
}

TEST(ConfigTest, DegenerateDesignIsAValidationError) {
  Error e = error_of(R"({"family":"single","a1":"1/2","a2":"1/2","k":"1"})");
  EXPECT_EQ(e.kind(), ErrorKind::kValidation);
  EXPECT_NE(std::string(e.what()).find("a1 != a2"), std::string::npos);
}

TEST(ConfigTest, SchemaErrorsCarryTheKeyPath) {
  Error missing = error_of(R"({"family":"B","a1":"1/2","a2":"1/3","mu23":"1"})");
  EXPECT_EQ(missing.kind(), ErrorKind::kSchema);
  EXPECT_NE(std::string(missing.what()).find("$.mu34"), std::string::npos);
  Error unknown = error_of(R"({"family":"B","colour":"red"})");
  EXPECT_EQ(unknown.kind(), ErrorKind::kSchema);
  EXPECT_NE(std::string(unknown.what()).find("$.colour"), std::string::npos);
  EXPECT_EQ(error_of(R"({"family":"C","a1":"x"})").kind(), ErrorKind::kSchema);
  EXPECT_EQ(error_of("[1, 2]").kind(), ErrorKind::kSchema);
  EXPECT_EQ(error_of("{").kind(), ErrorKind::kSchema);
  EXPECT_EQ(error_of(R"({"schema":2,"family":"single","a1":"1","a2":"2"})").kind(),
            ErrorKind::kSchema);
}

TEST(ConfigTest, RoundTripIsExact) {
  std::vector<std::string> texts{
      kFigSix,
      R"({"family":"planar","case":"2b","d1":"1/2","d2":"1","taus":["1/3","-2"],"mode":"exact"})",
      R"({"family":"A","k":"1","mu14":"37/40","mu12":"7/8","mu23":"1","mu34":"1/2","tau_range":["1/10","2"],"tau_samples":4,"tol":1e-9})",
      R"({"family":"pyramidal","source":"C","a1":"1/2","a2":"1/3","mu14":"2/3","mu12":"1/2","s":-1,"branch":1,"tau":"3/4","patch_n":3,"ribbon_width":"1/20"})"};
  for (const auto& t : texts) {
    Config c = parse_config(t);
    std::string once = serialize_config(c);
    Config d = parse_config(once);
    EXPECT_EQ(c, d) << once;
    EXPECT_EQ(serialize_config(d), once);
  }
}

TEST(ConfigTest, RandomConfigsRoundTrip) {
  Sampler s(51);
  for (int i = 0; i < 30; ++i) {
    Config c;
    c.kind = ConfigKind::kFamilyC;
    auto d = s.design();
    c.a1 = d.a1;
    c.a2 = d.a2;
    c.k = d.k;
    c.mu14 = s.nonzero();
    c.mu12 = s.nonzero();
    c.s = s.sign();
    c.branch = s.sign();
    c.taus = {s.tau(), s.tau()};
    c.exact = s.sign() > 0;
    EXPECT_EQ(parse_config(serialize_config(c)), c);
  }
}

TEST(ConfigTest, TauRangeIsSampledInOrder) {
  Config c = parse_config(
      R"({"family":"single","a1":"1/2","a2":"1/3","tau_range":["-1","1"],"tau_samples":5})");
  auto t = config_taus(c);
  ASSERT_EQ(t.size(), 5u);
  EXPECT_EQ(t[0], Q(-1));
  EXPECT_EQ(t[2], Q(0));
  EXPECT_EQ(t[4], Q(1));
}

TEST(ConfigTest, FixturesAllLoad) {
  for (const char* name :
       {"fig3_case1a.json", "fig3_case1b.json", "fig3_case2a.json", "fig3_case2b.json",
        "fig4_family_a.json", "fig5_family_b.json", "fig6_family_c.json", "fig7_six_r.json",
        "fig8a_prismatic_anti.json", "fig8b_prismatic_para.json", "fig9a_pyramidal.json"}) {
    EXPECT_NO_THROW(load_config(fixture(name))) << name;
  }
  EXPECT_THROW(load_config(fixture("bad_degenerate.json")), Error);
  try {
    load_config(fixture("missing.json"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
  }
}

TEST(HpPatchTest, UnitDensityIsTheQuad) {
  std::array<Vec3<double>, 4> q{Vec3<double>(0, 0, 0), Vec3<double>(1, 0, 0),
                                Vec3<double>(1, 1, 0), Vec3<double>(0, 1, 0)};
  TubeMesh m = hp_patch(q, 1);
  ASSERT_EQ(m.vertices.size(), 4u);
  EXPECT_EQ(m.vertices[0], q[0]);
  EXPECT_EQ(m.vertices[1], q[1]);
  EXPECT_EQ(m.vertices[3], q[2]);
  EXPECT_EQ(m.vertices[2], q[3]);
  ASSERT_EQ(m.faces.size(), 1u);
  EXPECT_THROW(hp_patch(q, 0), Error);
}

TEST(HpPatchTest, CenterIsTheCornerAverage) {
  std::array<Vec3<double>, 4> q{Vec3<double>(0, 0, 0), Vec3<double>(2, 0, 1),
                                Vec3<double>(2, 2, 0), Vec3<double>(0, 2, 1)};
  TubeMesh m = hp_patch(q, 2);
  EXPECT_EQ(m.vertices.size(), 9u);
  EXPECT_EQ(m.faces.size(), 4u);
  Vec3<double> avg = (q[0] + q[1] + q[2] + q[3]) * 0.25;
  EXPECT_LT(norm(m.vertices[4] - avg), 1e-15);
}

TEST(HpPatchTest, SkewGridLiesOnTheParaboloid) {
  std::array<Vec3<double>, 4> q{Vec3<double>(0, 0, 0), Vec3<double>(1, 0, 0.3),
                                Vec3<double>(1.2, 1, -0.4), Vec3<double>(0.1, 1, 0.5)};
  TubeMesh m = hp_patch(q, 7);
  EXPECT_LT(hp_residual(m, q, 7), 1e-12);
  // Grid rows are straight rulings.
  for (int j = 0; j <= 7; ++j) {
    Vec3<double> a = m.vertices[j * 8], b = m.vertices[j * 8 + 7];
    for (int i = 1; i < 7; ++i) {
      EXPECT_LT(norm(cross(m.vertices[j * 8 + i] - a, b - a)), 1e-12);
    }
  }
}

TubeMesh figure_six_mesh(int n) {
  BiBennett<double> b = to_double(config_bibennett(parse_config(kFigSix)));
  RibbonOptions opt;
  opt.n = n;
  return coupled_ribbons(coupled_pose(b, 0.9), opt);
}

TEST(ObjTest, FigureSixHasEightRibbons) {
  for (int n : {1, 3}) {
    TubeMesh m = figure_six_mesh(n);
    EXPECT_EQ(m.groups.size(), 8u);
    EXPECT_EQ(m.vertices.size(), 8u * (n + 1) * (n + 1));
    EXPECT_EQ(m.faces.size(), 8u * n * n);
    EXPECT_TRUE(obj_lint(m));
  }
}

TEST(ObjTest, TextIsDeterministicAndWellFormed) {
  std::string a = to_obj(figure_six_mesh(4)), b = to_obj(figure_six_mesh(4));
  EXPECT_EQ(a, b);
  std::istringstream in(a);
  std::string line;
  size_t v = 0, g = 0, f = 0;
  while (std::getline(in, line)) {
    if (line.rfind("v ", 0) == 0) ++v;
    else if (line.rfind("g ", 0) == 0) ++g;
    else if (line.rfind("f ", 0) == 0) {
      ++f;
      std::istringstream fs(line.substr(2));
      size_t k;
      while (fs >> k) {
        EXPECT_GE(k, 1u);
        EXPECT_LE(k, v);
      }
    } else {
      EXPECT_EQ(line[0], '#');
    }
  }
  EXPECT_EQ(v, 200u);
  EXPECT_EQ(g, 8u);
  EXPECT_EQ(f, 128u);
}

TEST(ObjTest, LintRejectsBadMeshes) {
  TubeMesh m = figure_six_mesh(1);
  TubeMesh bad = m;
  bad.faces[0][2] = bad.vertices.size();
  EXPECT_FALSE(obj_lint(bad));
  bad = m;
  bad.vertices[0][1] = std::nan("");
  EXPECT_FALSE(obj_lint(bad));
}

TEST(SweepTest, FigureSixThreeRowsPass) {
  Config c = load_config(fixture("fig6_family_c.json"));
  auto rows = sweep(c, config_taus(c));
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.status, kRowOk) << r.detail;
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.certificates.size(), 2u);
  }
  EXPECT_NEAR(*rows[2].tau_bar, -1.23662, 1e-4);
}

TEST(SweepTest, FamilyBIsogramColumnIsExactlyZero) {
  Config c = load_config(fixture("fig5_family_b.json"));
  SweepOptions opt;
  opt.exact = true;
  for (const auto& r : sweep(c, {Q(1, 5), Q(1, 2), Q(3), Q(-7, 4)}, opt)) {
    EXPECT_EQ(r.isogram_residual, "0");
    EXPECT_TRUE(r.pass());
  }
}

TEST(SweepTest, PoleAndEmptyBranchMarkers) {
  Config c = load_config(fixture("fig6_family_c.json"));
  auto rows = sweep(c, {Q(0), Q(1, 2)});
  EXPECT_EQ(rows[0].status, kRowPole);
  EXPECT_EQ(rows[1].status, kRowOk);
  // mu14 = 0: tau_bar^2 = -(B tau^2 + D) / (A tau^2 + C) with dm < 0 and
  // large e is negative for small tau.
  Config e = parse_config(
      R"({"family":"C","a1":"1/2","a2":"1/3","k":"1","mu14":"1/5","mu12":"3","s":1})");
  bool saw_empty = false;
  for (const auto& r : sweep(e, {Q(1, 10), Q(1), Q(10)})) {
    if (r.status == kRowEmptyBranch) {
      saw_empty = true;
      EXPECT_EQ(r.tau_bar_minus, "none");
    }
  }
  EXPECT_TRUE(saw_empty);
}

TEST(SweepTest, CsvHeaderAndQuoting) {
  Config c = load_config(fixture("fig6_family_c.json"));
  auto rows = sweep(c, {Q(0), Q(1, 2)});
  std::string csv = sweep_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find("\r\n")), kSweepCsvHeader);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_EQ(csv, sweep_csv(sweep(c, {Q(0), Q(1, 2)})));
  std::string json = sweep_json(rows);
  EXPECT_NE(json.find("\"status\": \"pole\""), std::string::npos);
}

}  // namespace
}  // namespace bibennett
