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

#include <cmath>

#include "bibennett/bennett.hpp"
#include "bibennett/error.hpp"
#include "bibennett/sampling.hpp"

namespace bibennett {
namespace {

const Rational kA1(1, 2), kA2(1, 3), kK(1);

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kIo;
}

TEST(ValidateTest, ConventionChecks) {
  EXPECT_EQ(kind_of([] { validate(Rational(0), kA2, kK); }), ErrorKind::kConvention);
  EXPECT_EQ(kind_of([] { validate(kA1, Rational(-1), kK); }), ErrorKind::kConvention);
  EXPECT_EQ(kind_of([] { validate(kA1, kA1, kK); }), ErrorKind::kDegenerate);
  EXPECT_EQ(kind_of([] { validate(kA1, kA2, Rational(-1)); }),
            ErrorKind::kInvalidScale);
  EXPECT_NO_THROW(validate(kA1, kA2, Rational(0)));
}

TEST(TransmissionTest, KValues) {
  auto d = validate(kA1, kA2, kK);
  EXPECT_EQ(transmission_K(d), Rational(5));
  EXPECT_EQ(transmission_K_alt(d), Rational(5, 7));
  EXPECT_EQ(d.sin_alpha1(), Rational(4, 5));
  EXPECT_EQ(d.sin_alpha2(), Rational(3, 5));
  EXPECT_EQ(kind_of([] { coupler_parameter(Rational(5), Rational(0)); }),
            ErrorKind::kPole);
}

TEST(DhChainTest, FrameAtFigureParameters) {
  auto d = validate(kA1, kA2, kK);
  Pose<Rational> p = frame(d, Rational(9, 10));
  EXPECT_EQ(p.r(kAxis14), Vec3<Rational>(1, 0, 0));
  EXPECT_EQ(p.F(kAxis12), Vec3<Rational>(0, 0, Rational(4, 5)));
  EXPECT_EQ(p.r(kAxis12), Vec3<Rational>(Rational(3, 5), Rational(4, 5), 0));
  // Hand-reduced: F34 = (0, -4 a2 k tau, 2 a2 k (tau^2 - 1)) / ((1+a2^2)(1+tau^2)).
  EXPECT_EQ(p.F(kAxis34), Vec3<Rational>(0, Rational(-108, 181), Rational(-57, 905)));
}

TEST(DhChainTest, ClosureIsExact) {
  Sampler s(11);
  for (int i = 0; i < 20; ++i) {
    auto d = s.design();
    Rational tau = s.tau();
    EXPECT_EQ(loop_closure_residual(d, tau), 0.0);
    BennettDesign<double> dd{d.a1.to_double(), d.a2.to_double(), d.k.to_double()};
    EXPECT_LT(loop_closure_residual(dd, tau.to_double()), 1e-12);
  }
}

TEST(DhChainTest, ReducedFrameMatchesChain) {
  Sampler s(12);
  for (int i = 0; i < 10; ++i) {
    auto d = s.design();
    Rational tau = s.tau();
    Pose<Rational> p = frame(d, tau);
    ReducedFrame<Rational> f = reduced_frame(d.a1, d.a2, d.k, tau);
    for (int j = 0; j < 4; ++j) {
      for (int c = 0; c < 3; ++c) {
        EXPECT_EQ(f.F[j][c] / f.den[j], p.F(j)[c]);
        EXPECT_EQ(f.r[j][c] / f.den[j], p.r(j)[c]);
      }
    }
  }
}

TEST(DhChainTest, AxesAreUnitAndAdjacentTwistsMatch) {
  auto d = validate(kA1, kA2, kK);
  Pose<Rational> p = frame(d, Rational(3, 7));
  for (int i = 0; i < 4; ++i) EXPECT_EQ(norm2(p.r(i)), Rational(1));
  Rational c1 = (1 - kA1 * kA1) / (1 + kA1 * kA1);
  Rational c2 = (1 - kA2 * kA2) / (1 + kA2 * kA2);
  EXPECT_EQ(dot(p.r(0), p.r(1)), c1);
  EXPECT_EQ(dot(p.r(1), p.r(2)), c2);
  EXPECT_EQ(dot(p.r(2), p.r(3)), c1);
  EXPECT_EQ(dot(p.r(3), p.r(0)), c2);
}

TEST(FrameTest, FQuadIsAnIsogram) {
  auto d = validate(kA1, kA2, Rational(2));
  Pose<Rational> p = frame(d, Rational(2, 3));
  auto q = f_quad(p);
  EXPECT_EQ(dist2(q[0], q[1]), dist2(q[2], q[3]));
  EXPECT_EQ(dist2(q[1], q[2]), dist2(q[3], q[0]));
  Line<Rational> l = symmetry_line(q);
  EXPECT_EQ(halfturn_point(l, q[0]), q[2]);
  EXPECT_EQ(halfturn_point(l, q[1]), q[3]);
}

TEST(FrameTest, ScaleZeroIsCopunctal) {
  auto d = validate(kA1, kA2, Rational(0));
  Pose<Rational> p = frame(d, Rational(1, 2));
  for (int i = 0; i < 4; ++i) EXPECT_EQ(p.F(i), Vec3<Rational>());
  EXPECT_THROW(symmetry_line(f_quad(p)), Error);
}

TEST(PlanarTest, KValuesPerCase) {
  Rational d1(1, 2), d2(1);
  EXPECT_EQ(planar_K(validate_planar(d1, d2, PlanarCase::k1a)), Rational(3));
  // The 2a flips give the negated value.
  EXPECT_EQ(planar_K(validate_planar(d1, d2, PlanarCase::k2a)), Rational(-3));
  EXPECT_EQ(planar_K(validate_planar(d1, d2, PlanarCase::k1b)), Rational(1));
  EXPECT_EQ(planar_K(validate_planar(d1, d2, PlanarCase::k2b)), Rational(-1));
  EXPECT_EQ(kind_of([] {
              planar_K(validate_planar(Rational(1), Rational(1), PlanarCase::k2a));
            }),
            ErrorKind::kPole);
  EXPECT_EQ(kind_of([] { validate_planar(Rational(0), Rational(1), PlanarCase::k1a); }),
            ErrorKind::kConvention);
  EXPECT_EQ(parse_planar_case("2b"), PlanarCase::k2b);
  EXPECT_THROW(parse_planar_case("3c"), Error);
}

TEST(PlanarTest, ClosureAndParallelAxes) {
  for (PlanarCase c : {PlanarCase::k1a, PlanarCase::k1b, PlanarCase::k2a,
                       PlanarCase::k2b}) {
    auto pd = validate_planar(Rational(1, 2), Rational(1), c);
    for (Rational tau : {Rational(3, 5), Rational(-2), Rational(7, 3)}) {
      EXPECT_EQ(planar_loop_closure_residual(pd, tau), 0.0) << planar_case_name(c);
      Pose<Rational> p = planar_frame(pd, tau);
      for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(cross(p.r(i), p.r(0)), Vec3<Rational>());
        EXPECT_EQ(p.F(i)[0], Rational(0));
      }
      EXPECT_EQ(p.K, planar_K(pd));
    }
  }
}

TEST(IndicatrixTest, SphericalAntiParallelogram) {
  BennettDesign<double> d{0.5, 1.0 / 3.0, 1.0};
  IndicatrixReport r = indicatrix(d);
  double a1 = 2 * std::atan(0.5), a2 = 2 * std::atan(1.0 / 3.0);
  EXPECT_NEAR(r.arcs[0], a1, 1e-12);
  EXPECT_NEAR(r.arcs[1], a2, 1e-12);
  EXPECT_NEAR(r.arcs[2], a1, 1e-12);
  EXPECT_NEAR(r.arcs[3], a2, 1e-12);
  EXPECT_EQ(r.kind, IndicatrixReport::Kind::kVHedral);
  EXPECT_FALSE(r.adjacent_supplementary);
  // a1 a2 = 1 puts adjacent twists at alpha1 + alpha2 = pi.
  IndicatrixReport s = indicatrix(BennettDesign<double>{2.0, 0.5, 1.0});
  EXPECT_TRUE(s.adjacent_supplementary);
}

TEST(GeometryTest, OppositeAxesAreSkewAndOnOneRegulus) {
  BennettDesign<double> d{0.5, 1.0 / 3.0, 1.0};
  for (double tau : {0.3, 0.9, -1.7}) {
    Pose<double> p = frame(d, tau);
    OppositeIntersection o = opposite_axes_intersect(p);
    EXPECT_FALSE(o.pair_14_23);
    EXPECT_FALSE(o.pair_12_34);
    EXPECT_LT(regulus_residual(p), 1e-10);
  }
  Pose<double> flat = frame(BennettDesign<double>{0.5, 1.0 / 3.0, 0.0}, 0.9);
  EXPECT_THROW(regulus_residual(flat), Error);
}

TEST(GeometryTest, HalfturnMatrixIsAnInvolution) {
  Line<double> l{Vec3<double>(1, 2, 3), Vec3<double>(0, 1, 1)};
  Mat4<double> h = halfturn_matrix(l);
  EXPECT_LT(max_abs_diff(h * h, Mat4<double>::Identity()), 1e-14);
  Vec3<double> x(0.2, -1, 4);
  Vec3<double> y = halfturn_point(l, x);
  EXPECT_LT(norm(halfturn_point(l, y) - x), 1e-14);
  // Points on the line are fixed.
  EXPECT_LT(norm(halfturn_point(l, l.point + l.dir * 2.5) - (l.point + l.dir * 2.5)),
            1e-14);
}

}  // namespace
}  // namespace bibennett
