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

#include "bibennett/error.hpp"
#include "bibennett/identity.hpp"
#include "bibennett/linalg.hpp"
#include "bibennett/poly.hpp"
#include "bibennett/rational.hpp"
#include "bibennett/resultant.hpp"

namespace bibennett {
namespace {

TEST(RationalTest, ParsesFractionsDecimalsAndExponents) {
  EXPECT_EQ(Rational::Parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::Parse("0.75"), Rational(3, 4));
  EXPECT_EQ(Rational::Parse("-2"), Rational(-2));
  EXPECT_EQ(Rational::Parse("1e-2"), Rational(1, 100));
  EXPECT_FALSE(Rational::TryParse("1/0").has_value());
  EXPECT_FALSE(Rational::TryParse("abc").has_value());
  try {
    Rational::Parse("x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
  }
}

TEST(RationalTest, ArithmeticIsExact) {
  Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ((a - b).str(), "1/6");
  EXPECT_EQ(Rational(-3, 4).abs(), Rational(3, 4));
  EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
  EXPECT_THROW(a / Rational(0), Error);
}

TEST(RationalTest, ExactSquareRoots) {
  EXPECT_EQ(Rational(9, 16).sqrt_exact(), Rational(3, 4));
  EXPECT_FALSE(Rational(2).sqrt_exact().has_value());
  EXPECT_FALSE(Rational(-4).sqrt_exact().has_value());
}

TEST(RationalTest, FromDoubleIsTheBinaryValue) {
  EXPECT_EQ(Rational::FromDouble(0.375), Rational(3, 8));
  EXPECT_THROW(Rational::FromDouble(std::nan("")), Error);
}

TEST(LinalgTest, MatMulComposesRigidMotions) {
  Mat4<Rational> a = Mat4<Rational>::Identity();
  a[1][0] = Rational(1);  // translation x
  Mat4<Rational> b = Mat4<Rational>::Identity();
  b[2][0] = Rational(2);
  Mat4<Rational> ab = mat_mul(a, b);
  EXPECT_EQ(ab[1][0], Rational(1));
  EXPECT_EQ(ab[2][0], Rational(2));
  EXPECT_EQ(max_abs_diff(ab, a * b), 0.0);
}

TEST(LinalgTest, Solve3AndDegenerateSystems) {
  Vec3<Rational> e0(1, 0, 0), e1(0, 2, 0), e2(1, 1, 1);
  Vec3<Rational> x = solve3(e0, e1, e2, Vec3<Rational>(3, 4, 5));
  EXPECT_EQ(e0 * x[0] + e1 * x[1] + e2 * x[2], Vec3<Rational>(3, 4, 5));
  EXPECT_THROW(solve3(e0, e0, e2, e1), Error);
}

TEST(PolyTest, ArithmeticAndEvaluation) {
  std::vector<std::string> v{"x", "y"};
  Poly x = Poly::Variable(v, 0), y = Poly::Variable(v, 1);
  Poly p = (x + y) * (x - y);
  EXPECT_EQ(p, x.pow(2) - y.pow(2));
  EXPECT_EQ(p.evaluate({Rational(3), Rational(2)}), Rational(5));
  EXPECT_EQ(p.degree(0), 2);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(PolyTest, InterpolationRecoversCoefficients) {
  UPoly f{Rational(1), Rational(-2), Rational(0), Rational(3)};
  std::vector<Rational> xs, ys;
  for (int i = 0; i < 4; ++i) {
    xs.push_back(Rational(i));
    ys.push_back(upoly_eval(f, Rational(i)));
  }
  EXPECT_EQ(interpolate(xs, ys), f);
  EXPECT_THROW(interpolate({Rational(1), Rational(1)}, {Rational(0), Rational(1)}),
               Error);
}

TEST(PolyTest, DeterminantAndSylvesterResultant) {
  EXPECT_EQ(determinant({{Rational(2), Rational(1)}, {Rational(1), Rational(3)}}),
            Rational(5));
  // Res(x^2 + 1, x^2 - 2) = (-1 - 2)^2.
  UPoly p{Rational(1), Rational(0), Rational(1)};
  UPoly q{Rational(-2), Rational(0), Rational(1)};
  EXPECT_EQ(sylvester_resultant(p, q), Rational(9));
  // A common root gives zero.
  UPoly r{Rational(-1), Rational(1)};
  UPoly s{Rational(-1), Rational(0), Rational(1)};
  EXPECT_EQ(sylvester_resultant(r, s), Rational(0));
}

TEST(IdentityTest, PolyIdentityZero) {
  std::vector<std::string> v{"a", "b"};
  Poly a = Poly::Variable(v, 0), b = Poly::Variable(v, 1);
  Poly zero = (a + b).pow(2) - a.pow(2) - b.pow(2) -
              Poly::Constant(v, Rational(2)) * a * b;
  EXPECT_TRUE(poly_identity_zero(zero, {2, 2}));
  EXPECT_FALSE(poly_identity_zero(a * b, {1, 1}));
}

TEST(IdentityTest, RingIdentityFindsBoundsAndRejectsNonzero) {
  auto sq = [](const auto& x) {
    using R = std::decay_t<decltype(x[0])>;
    return (x[0] + x[1]) * (x[0] - x[1]) - x[0] * x[0] + x[1] * x[1] + R(0);
  };
  IdentityResult r = ring_identity_zero(2, sq);
  EXPECT_TRUE(r.zero);
  EXPECT_EQ(r.bounds, (std::vector<int>{2, 2}));
  auto nz = [](const auto& x) { return x[0] * x[1] - x[1] * x[0] + x[0]; };
  EXPECT_FALSE(ring_identity_zero(2, nz).zero);
}

TEST(ResultantTest, EliminatesTauBar) {
  // taubar^2 - tau and taubar^2 - 2 share a root iff tau = 2; Res = (tau-2)^2.
  Quadratic2<Rational> p, q;
  p.c[0][2] = Rational(1);
  p.c[1][0] = Rational(-1);
  q.c[0][2] = Rational(1);
  q.c[0][0] = Rational(-2);
  auto c = resultant_tau_bar_coeffs(p, q);
  ASSERT_GE(c.size(), 3u);
  for (size_t i = 3; i < c.size(); ++i) EXPECT_EQ(c[i], Rational(0));
  EXPECT_EQ(c[0], Rational(4));
  EXPECT_EQ(c[1], Rational(-4));
  EXPECT_EQ(c[2], Rational(1));
  EXPECT_THROW(resultant_tau_bar_coeffs(Quadratic2<Rational>(), Quadratic2<Rational>()),
               Error);
}

TEST(ResultantTest, FitQuadratic2RecoversBidegreeTwo) {
  auto f = [](const Rational& t, const Rational& tb) {
    return Rational(3) * t * t * tb - tb * tb + Rational(1, 2);
  };
  Quadratic2<Rational> q = fit_quadratic2(f);
  EXPECT_EQ(q.c[2][1], Rational(3));
  EXPECT_EQ(q.c[0][2], Rational(-1));
  EXPECT_EQ(q.c[0][0], Rational(1, 2));
  auto cubic = [](const Rational& t, const Rational&) { return t * t * t; };
  EXPECT_THROW(fit_quadratic2(cubic), Error);
}

}  // namespace
}  // namespace bibennett
