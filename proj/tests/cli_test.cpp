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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bibennett/cli.hpp"

namespace bibennett {
namespace {

std::string fixture(const std::string& name) {
  return std::string(BIBENNETT_FIXTURE_DIR) + "/" + name;
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bibennett_cli_test_" + name);
}

TEST(CliTest, ValidateExitCodes) {
  EXPECT_EQ(run({"validate", "-c", fixture("fig6_family_c.json")}).code, kExitOk);
  CliRun bad = run({"validate", "-c", fixture("bad_degenerate.json")});
  EXPECT_EQ(bad.code, kExitInput);
  EXPECT_NE(bad.err.find("rule: a1 != a2"), std::string::npos);
  EXPECT_EQ(run({"validate", "-c", fixture("nope.json")}).code, kExitInput);
  EXPECT_EQ(run({}).code, kExitInput);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInput);
  EXPECT_EQ(run({"certify", "-c", fixture("fig6_family_c.json"), "--mode", "fuzzy"}).code,
            kExitInput);
  EXPECT_EQ(run({"certify", "-c", fixture("fig6_family_c.json"), "--tau", "0"}).code,
            kExitInput);
}

TEST(CliTest, CertifyFigureSixPrintsOneLinePerCertificate) {
  CliRun r = run({"certify", "-c", fixture("fig6_family_c.json")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("PASS halfturn"), std::string::npos);
  EXPECT_NE(r.out.find("PASS indicatrix"), std::string::npos);
  EXPECT_NE(r.out.find("PASS necessary conditions"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(CliTest, ModesAgreeOnFixtureVerdicts) {
  for (const char* f : {"fig4_family_a.json", "fig5_family_b.json", "fig6_family_c.json",
                        "fig8a_prismatic_anti.json", "fig8b_prismatic_para.json",
                        "fig9a_pyramidal.json", "fig3_case2a.json"}) {
    int exact = run({"certify", "-c", fixture(f), "--mode", "exact"}).code;
    int fl = run({"certify", "-c", fixture(f), "--mode", "float"}).code;
    EXPECT_EQ(exact, fl) << f;
    EXPECT_EQ(exact, kExitOk) << f;
  }
}

TEST(CliTest, FailingCertificateGivesExitOne) {
  // A tolerance below double rounding makes the float certificates fail.
  CliRun r = run({"certify", "-c", fixture("fig6_family_c.json"), "--tol", "1e-300"});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(CliTest, ToleranceFromEnvironment) {
  setenv(kTolEnv, "1e-300", 1);
  int code = run({"certify", "-c", fixture("fig6_family_c.json")}).code;
  setenv(kTolEnv, "oops", 1);
  int bad = run({"certify", "-c", fixture("fig6_family_c.json")}).code;
  unsetenv(kTolEnv);
  EXPECT_EQ(code, kExitFail);
  EXPECT_EQ(bad, kExitInput);
}

TEST(CliTest, ConstructListsSixRLoops) {
  CliRun r = run({"construct", "-c", fixture("fig7_six_r.json"), "-v"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("tau_bar = -1.2366"), std::string::npos);
  EXPECT_NE(r.out.find("6R loop: B23 B34 E34-14 H14 H12 E12-23"), std::string::npos);
  EXPECT_NE(r.out.find("M23:"), std::string::npos);
}

TEST(CliTest, SweepToCsvAndJson) {
  CliRun r = run({"sweep", "-c", fixture("fig6_family_c.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("tau,status,", 0), 0u);
  auto path = temp_path("sweep.json");
  EXPECT_EQ(run({"sweep", "-c", fixture("fig6_family_c.json"), "--out", path.string()}).code,
            kExitOk);
  EXPECT_EQ(slurp(path).front(), '[');
  std::filesystem::remove(path);
}

TEST(CliTest, LimitsAndAppendix) {
  CliRun l = run({"limits", "-c", fixture("fig9a_pyramidal.json")});
  EXPECT_EQ(l.code, kExitOk);
  EXPECT_NE(l.out.find("PASS I2"), std::string::npos);
  EXPECT_EQ(run({"limits", "-c", fixture("fig6_family_c.json")}).code, kExitInput);
  CliRun a = run({"appendix"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_NE(a.out.find("no flexible plane-symmetric arrangement exists"), std::string::npos);
}

TEST(CliTest, ExportIsByteIdentical) {
  auto p1 = temp_path("a.obj"), p2 = temp_path("b.obj");
  for (const auto& p : {p1, p2}) {
    EXPECT_EQ(run({"export", "-c", fixture("fig6_family_c.json"), "--patch-n", "3", "--out",
                   p.string()})
                  .code,
              kExitOk);
  }
  EXPECT_EQ(slurp(p1), slurp(p2));
  EXPECT_EQ(run({"export", "-c", fixture("fig6_family_c.json")}).code, kExitInput);
  EXPECT_EQ(run({"export", "-c", fixture("fig6_family_c.json"), "--out",
                 "/nonexistent-dir/x.obj"})
                .code,
            kExitInput);
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

}  // namespace
}  // namespace bibennett
