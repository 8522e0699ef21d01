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

#include <optional>

#include "bibennett/appendix.hpp"
#include "bibennett/error.hpp"
#include "bibennett/sampling.hpp"

namespace bibennett {
namespace {

using Q = Rational;

TEST(CoplanarityTest, PreconditionOnTheDesign) {
  MuSet<Q> mu(Q(1), Q(2), Q(3), Q(4));
  try {
    coplanarity_coeffs(Q(1, 2), Q(-1, 2), mu);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPrecondition);
  }
  EXPECT_THROW(coplanarity_coeffs(Q(0), Q(1, 2), mu), Error);
}

TEST(CoplanarityTest, CoefficientsReproduceN) {
  Q a1(1, 2), a2(1, 3);
  MuSet<Q> mu(Q(2, 3), Q(-1, 4), Q(5, 7), Q(1, 2));
  CoplanarityExpansion e = coplanarity_coeffs(a1, a2, mu);
  for (Q tau : {Q(7, 3), Q(-5, 2)}) {
    Q n = coplanarity_numerator(a1, a2, mu.mu, tau);
    Q sum(0), p(1);
    for (int i = 0; i < 5; ++i) {
      sum += e.raw[i] * p;
      p *= tau;
    }
    EXPECT_EQ(n, sum);
  }
  // Printed weights: (a1+a2)^2 c0, -a1 a2 (a1+a2) c1, c2, -a1 a2 (a1-a2) c3, (a1-a2)^2 c4.
  EXPECT_EQ(e.raw[0], (a1 + a2) * (a1 + a2) * e.c[0]);
  EXPECT_EQ(e.raw[1], -a1 * a2 * (a1 + a2) * e.c[1]);
  EXPECT_EQ(e.raw[2], e.c[2]);
  EXPECT_EQ(e.raw[3], -a1 * a2 * (a1 - a2) * e.c[3]);
  EXPECT_EQ(e.raw[4], (a1 - a2) * (a1 - a2) * e.c[4]);
}

TEST(CoplanarityTest, CZeroMinusCFourFactors) {
  Sampler s(41);
  for (int i = 0; i < 20; ++i) {
    Q a1 = s.positive(), a2 = s.positive();
    if (a1 == a2) continue;
    MuSet<Q> mu = s.mu();
    CoplanarityExpansion e = coplanarity_coeffs(a1, a2, mu);
    Q expect = Q(-16) * a1 * a2 * (a1 - a2) * (a1 + a2) *
               (mu.mu14() * mu.mu23() - mu.mu12() * mu.mu34());
    EXPECT_EQ(e.c[0] - e.c[4], expect);
  }
}

TEST(CoplanarityTest, AllEqualOffsetsLeadingCoefficient) {
  CoplanarityExpansion e = coplanarity_coeffs(Q(1, 2), Q(1, 3), MuSet<Q>(1, 1, 1, 1));
  // -16 a1^2 a2^2 mu^2 (a1^2 - a2^2) with mu = 1.
  EXPECT_EQ(e.c[4], Q(-5, 81));
}

TEST(HelperTest, FDifferenceAndGPositivity) {
  Sampler s(42);
  for (int i = 0; i < 50; ++i) {
    Q a1 = s.positive(), a2 = s.positive(), m = s.rational(), n = s.rational();
    EXPECT_EQ(appendix_f1(a1, a2, m, n) - appendix_f2(a1, a2, m, n),
              Q(4) * (a1 * a1 - a2 * a2));
    EXPECT_GT(appendix_g1(a1, a2), Q(0));
  }
}

TEST(HelperTest, GTwoAndGThreeRootCurves) {
  // a2^2 = a1^2 / (a1^2 + 2) at a1 = 1/2 gives a2 = 1/3.
  EXPECT_EQ(appendix_g2(Q(1, 2), Q(1, 3)), Q(0));
  EXPECT_NE(appendix_g2(Q(1, 2), Q(1, 4)), Q(0));
  // a2^2 = (a1^2 - 1) / (a1^2 + 3) meets a2 = 0 at a1 = 1.
  EXPECT_EQ(appendix_g3(Q(1), Q(0)), Q(0));
  EXPECT_EQ(appendix_g3(Q(1, 2), Q(1, 3)), Q(1, 36) - Q(1, 4) + Q(1, 3) + Q(1));
}

TEST(ReducedCaseTest, ResultantFactorizationAtSamples) {
  for (auto [a1, a2] : {std::pair{Q(3, 4), Q(1, 5)}, std::pair{Q(2), Q(3, 5)},
                        std::pair{Q(5, 4), Q(7, 3)}}) {
    Q target = resultant_target(a1, a2);
    EXPECT_NE(target, Q(0));
    EXPECT_EQ(reduced_case_resultant(ReducedCase::kCase3, a1, a2), target);
    EXPECT_EQ(reduced_case_resultant(ReducedCase::kCase4, a1, a2),
              resultant_target(a2, a1));
  }
}

TEST(ReducedCaseTest, NumeratorIsQuarticInM) {
  Q a1(2, 3), a2(1, 5);
  UPoly p = reduced_case_poly(ReducedCase::kCase3, 0, a1, a2);
  EXPECT_LE(p.size(), 5u);
  for (Q m : {Q(1, 2), Q(-3), Q(9, 4)}) {
    EXPECT_EQ(upoly_eval(p, m), reduced_case_numerator(ReducedCase::kCase3, 0, a1, a2, m));
  }
  MuSet<Q> mu = reduced_case_mu(ReducedCase::kCase3, a1, a2, Q(1, 2));
  EXPECT_EQ(mu.mu14(), mu.mu12());
  EXPECT_EQ(appendix_f2(a1, a2, mu.mu14(), mu.mu23()), Q(0));
  MuSet<Q> mu4 = reduced_case_mu(ReducedCase::kCase4, a1, a2, Q(1, 2));
  EXPECT_EQ(mu4.mu23(), mu4.mu12());
  EXPECT_EQ(appendix_f1(a1, a2, mu4.mu14(), mu4.mu23()), Q(0));
  EXPECT_THROW(reduced_case_mu(ReducedCase::kCase3, a1, a2, Q(0)), Error);
}

TEST(RestrictedTest, GThreeBranchIsAPositiveMultipleOfMToTheFourth) {
  RestrictedC0 r = restricted_c0_g3();
  ASSERT_EQ(r.coeffs.size(), 3u);
  for (int l : {0, 1}) {
    for (const Q& c : r.coeffs[l]) EXPECT_EQ(c, Q(0));
  }
  // 32 (u+1)(u+2)^5 expanded.
  UPoly expect{Q(1)};
  expect = upoly_mul(expect, UPoly{Q(1), Q(1)});
  for (int i = 0; i < 5; ++i) expect = upoly_mul(expect, UPoly{Q(2), Q(1)});
  for (Q& c : expect) c *= Q(32);
  UPoly got = r.coeffs[2];
  upoly_trim(got);
  EXPECT_EQ(got, expect);
}

TEST(RestrictedTest, GTwoBranchHasNonnegativeCoefficients) {
  RestrictedC0 r = restricted_c0_g2();
  ASSERT_EQ(r.coeffs.size(), 3u);
  for (const UPoly& p : r.coeffs) {
    // Every coefficient in x is nonnegative, so x > 0, w > 0 gives c0 > 0.
    for (const Q& c : p) EXPECT_GE(c, Q(0));
  }
  // On the curve at a1 = 1/2, a2 = 1/3 (x = 1/4) the form must agree with
  // the case 3 numerator up to the positive cleared denominator.
  Q x(1, 4);
  std::optional<Q> ratio;
  for (Q m : {Q(1, 2), Q(2), Q(-3, 5)}) {
    Q w = m * m, form(0), wl(1);
    for (const UPoly& p : r.coeffs) {
      form += upoly_eval(p, x) * wl;
      wl *= w;
    }
    Q direct = reduced_case_numerator(ReducedCase::kCase3, 0, Q(1, 2), Q(1, 3), m);
    ASSERT_NE(direct, Q(0));
    Q k = form / direct;
    EXPECT_GT(k, Q(0));
    if (ratio) EXPECT_EQ(k, *ratio);
    ratio = k;
  }
}

TEST(NonexistenceTest, FullSuitePasses) {
  NonexistenceOptions opt;
  opt.random_trials = 100;
  opt.grid_n = 30;
  CertificateReport r = verify_nonexistence(opt);
  EXPECT_TRUE(r.verdict());
  for (const Residual& x : r.residuals) {
    EXPECT_TRUE(x.pass) << x.label;
    bool typed = x.label.rfind("identity", 0) == 0 || x.label.rfind("structural", 0) == 0 ||
                 x.label.rfind("definite-form", 0) == 0 ||
                 x.label.rfind("exact-sample", 0) == 0 || x.label.rfind("grid", 0) == 0;
    EXPECT_TRUE(typed) << x.label;
  }
}

}  // namespace
}  // namespace bibennett
