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

#include <algorithm>
#include <cmath>

#include "bibennett/error.hpp"
#include "bibennett/families.hpp"
#include "bibennett/sampling.hpp"

namespace bibennett {
namespace {

using Q = Rational;

std::array<double, 6> distances(const SkewQuad<double>& q) {
  return {norm(q[0] - q[1]), norm(q[1] - q[2]), norm(q[2] - q[3]),
          norm(q[3] - q[0]), norm(q[0] - q[2]), norm(q[1] - q[3])};
}

double rel_gap(const std::array<double, 6>& a, const std::array<double, 6>& b) {
  double worst = 0;
  for (int i = 0; i < 6; ++i) {
    worst = std::max(worst, std::fabs(a[i] - b[i]) / std::max(1.0, std::fabs(a[i])));
  }
  return worst;
}

TEST(FamilyATest, FigureOffsetsGiveFigureDesign) {
  MuSet<Q> mu(Q(37, 40), Q(7, 8), Q(1), Q(1, 2));
  auto [a1, a2] = family_a(mu);
  EXPECT_EQ(a1, Q(1, 2));
  EXPECT_EQ(a2, Q(1, 3));
}

TEST(FamilyATest, ExcludedBranchesAndNoRealSolution) {
  try {
    family_a(MuSet<Q>(Q(1), Q(2), Q(1), Q(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kExcludedBranch);
  }
  // s1 s2 and s3 s4 of equal sign makes the first square negative.
  try {
    family_a(MuSet<Q>(Q(3), Q(0), Q(0), Q(1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoRealFamily);
  }
}

TEST(FamilyBTest, OffsetsRepeat) {
  MuSet<Q> m = family_b(Q(2, 3), Q(1, 2));
  EXPECT_EQ(m.mu14(), Q(2, 3));
  EXPECT_EQ(m.mu12(), Q(1, 2));
  EXPECT_EQ(m.mu23(), Q(2, 3));
  EXPECT_EQ(m.mu34(), Q(1, 2));
  EXPECT_THROW(family_b(Q(0), Q(0)), Error);
  EXPECT_TRUE(detect_trivial(MuSet<Q>(Q(1), Q(2), Q(-1), Q(-2))));
  EXPECT_FALSE(detect_trivial(m));
}

TEST(FamilyCTest, FigureSixTauBarSquared) {
  auto d = validate(Q(1, 2), Q(1, 3), Q(1));
  auto quartic = coupling_quartic(d, Q(2, 3), Q(1, 4));
  EXPECT_EQ(tau_bar_squared(quartic, Q(9, 10)), Q(546307, 357245));
  BiBennett<double> b = to_double(family_c(d, Q(2, 3), Q(1, 4), 1, -1));
  CoupledPose cp = coupled_pose(b, 0.9);
  EXPECT_NEAR(cp.tau_bar, -std::sqrt(195165444215.0) / 357245.0, 1e-12);
  EXPECT_NEAR(cp.tau_bar, -1.23662, 1e-4);
  EXPECT_LT(cp.align_residual, 1e-12);
}

TEST(FamilyCTest, PyramidalTauBarSquared) {
  auto d = validate(Q(1, 2), Q(1, 3), Q(0));
  auto quartic = coupling_quartic(d, Q(2, 3), Q(1, 2));
  EXPECT_EQ(tau_bar_squared(quartic, Q(3, 4)), Q(6319, 3281));
}

TEST(FamilyCTest, PartnerOffsetsAndSign) {
  auto b = family_c(validate(Q(1, 2), Q(1, 3), Q(1)), Q(2, 3), Q(1, 4), -1);
  EXPECT_EQ(b.bar_mu.mu14(), Q(-1, 4));
  EXPECT_EQ(b.bar_mu.mu12(), Q(-2, 3));
  EXPECT_EQ(b.mu.mu23(), Q(2, 3));
  EXPECT_THROW(family_c(b.loop, Q(1), Q(1), 0), Error);
}

TEST(FamilyCTest, NumericRootsAgreeWithQuartic) {
  Sampler s(21);
  for (int i = 0; i < 10; ++i) {
    BiBennett<double> b = to_double(s.family_c());
    double tau = s.tau().to_double();
    auto exact = solve_bar_tau(coupling_quartic(b.loop.design, b.mu.mu14(), b.mu.mu12()),
                               tau);
    auto numeric = solve_bar_tau_numeric(b, tau);
    std::sort(numeric.begin(), numeric.end());
    ASSERT_EQ(exact.size(), numeric.size());
    for (size_t j = 0; j < exact.size(); ++j) EXPECT_NEAR(exact[j], numeric[j], 1e-8);
  }
}

TEST(CouplingTest, SharedQuadIsIsometricAtEveryTau) {
  Sampler s(22);
  std::vector<BiBennett<Q>> pairs{s.family_a(), s.family_b(), s.family_c()};
  for (const auto& bq : pairs) {
    BiBennett<double> b = to_double(bq);
    std::optional<std::array<double, 6>> first;
    for (double tau : {0.25, 0.5, 0.9, 2.0}) {
      CoupledPose cp;
      try {
        cp = coupled_pose(b, tau);
      } catch (const Error& e) {
        ASSERT_EQ(e.kind(), ErrorKind::kNoRealTauBar);
        continue;
      }
      auto d = distances(cp.quad);
      EXPECT_LT(rel_gap(d, distances(cp.bar_quad)), 1e-10) << family_name(b.family);
      if (!first) first = d;
      for (int i = 0; i < 4; ++i) EXPECT_NEAR(d[i], (*first)[i], 1e-10);
    }
  }
}

TEST(CouplingTest, LineSymmetricPartnerUsesNegatedTau) {
  BiBennett<double> b = to_double(Sampler(23).family_b());
  CoupledPose cp = coupled_pose(b, 0.7);
  EXPECT_DOUBLE_EQ(cp.tau_bar, -0.7);
  for (int v = 0; v < 4; ++v) {
    // The partner axis passes through the same quad vertex.
    const Axis<double>& h = cp.hat_axis(v);
    Vec3<double> off = cp.quad[v] - h.F;
    EXPECT_LT(norm(cross(off, h.r)), 1e-10);
  }
}

TEST(AlignTest, RecoversARigidMotion) {
  SkewQuad<double> src{Vec3<double>(0, 0, 0), Vec3<double>(1, 0, 0),
                       Vec3<double>(1, 1, 0.3), Vec3<double>(0, 1, 1)};
  double c = std::cos(0.4), s = std::sin(0.4);
  SkewQuad<double> dst;
  for (int i = 0; i < 4; ++i) {
    const auto& p = src[i];
    dst[i] = Vec3<double>(c * p[0] - s * p[1] + 2, s * p[0] + c * p[1] - 1, p[2] + 0.5);
  }
  RigidMotion<double> m = align_isometry(src, dst);
  EXPECT_EQ(m.orientation, 1);
  for (int i = 0; i < 4; ++i) EXPECT_LT(norm(m.apply_point(src[i]) - dst[i]), 1e-12);
  SkewQuad<double> bent = dst;
  bent[3] = bent[3] + Vec3<double>(0, 0, 0.5);
  EXPECT_THROW(align_isometry(src, bent), Error);
}

TEST(NecessaryConditionsTest, VanishForFamiliesAndNotForPerturbations) {
  Sampler s(24);
  for (int i = 0; i < 3; ++i) {
    for (const auto& b : {s.family_a(), s.family_b(), s.family_c()}) {
      auto nc = necessary_conditions(b.loop, b.mu, b.bar_loop, b.bar_mu);
      EXPECT_TRUE(nc.all_zero()) << family_name(b.family);
      MuSet<Q> off = b.bar_mu;
      off[2] += Q(1, 7);
      EXPECT_FALSE(necessary_conditions(b.loop, b.mu, b.bar_loop, off).all_zero());
    }
  }
}

TEST(SixRTest, FourLoopsAlternateBodies) {
  auto d = validate(Q(1, 2), Q(1, 3), Q(1));
  CoupledPose cp = coupled_pose(to_double(family_c(d, Q(2, 3), Q(1, 4), 1)), 0.9);
  auto loops = extract_6r_loops(cp);
  EXPECT_EQ(loops[0].labels,
            (std::array<std::string, 6>{"B23", "B34", "E34-14", "H14", "H12", "E12-23"}));
  for (const auto& l : loops) {
    for (const auto& a : l.axes) EXPECT_NEAR(norm(a.r), 1.0, 1e-12);
  }
}

}  // namespace
}  // namespace bibennett
