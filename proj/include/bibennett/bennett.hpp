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

// A single Bennett 4R loop in half-tangent coordinates.
//
// Axes are stored in the fixed order 14, 12, 23, 34 (indices 0..3), so that
// index i + 1 (mod 4) is the next axis around the loop. Axis 14 is the
// reference frame: F = 0, r = +x. Joint rotations act about x, the twist
// matrices rotate about z and translate along z.

#ifndef BIBENNETT_BENNETT_HPP_
#define BIBENNETT_BENNETT_HPP_

#include <array>
#include <cmath>
#include <string>

#include "bibennett/error.hpp"
#include "bibennett/linalg.hpp"

namespace bibennett {

enum AxisIndex { kAxis14 = 0, kAxis12 = 1, kAxis23 = 2, kAxis34 = 3 };

const char* axis_name(int i);
inline int next_axis(int i) { return (i + 1) % 4; }
inline int prev_axis(int i) { return (i + 3) % 4; }

template <class S>
struct BennettDesign {
  S a1{1};
  S a2{2};
  S k{1};

  S sin_alpha1() const { return S(2) * a1 / (S(1) + a1 * a1); }
  S sin_alpha2() const { return S(2) * a2 / (S(1) + a2 * a2); }
  S d1() const { return k * sin_alpha1(); }
  S d2() const { return k * sin_alpha2(); }
  double alpha1() const { return 2.0 * std::atan(to_double(a1)); }
  double alpha2() const { return 2.0 * std::atan(to_double(a2)); }
};

template <class S>
BennettDesign<S> validate(const S& a1, const S& a2, const S& k) {
  if (!(a1 > S(0)) || !(a2 > S(0))) {
    throw Error(ErrorKind::kConvention,
                "twist half-tangents must be positive (a1 > 0, a2 > 0)");
  }
  if (a1 == a2) {
    throw Error(ErrorKind::kDegenerate,
                "a1 == a2 makes the transmission factor infinite");
  }
  if (k < S(0)) throw Error(ErrorKind::kInvalidScale, "scale k must be >= 0");
  return BennettDesign<S>{a1, a2, k};
}

template <class S>
S transmission_K(const BennettDesign<S>& d) {
  return (d.a1 + d.a2) / (d.a1 - d.a2);
}

// Transmission factor under the opposite orientation of the second twist.
template <class S>
S transmission_K_alt(const BennettDesign<S>& d) {
  return (S(1) - d.a1 * d.a2) / (S(1) + d.a1 * d.a2);
}

// Joint rotation about x by the angle with half-tangent t.
template <class S>
Mat4<S> joint_rotation(const S& t) {
  S den = S(1) + t * t;
  S c = (S(1) - t * t) / den;
  S s = S(2) * t / den;
  Mat4<S> m = Mat4<S>::Identity();
  m[2][2] = c;
  m[2][3] = s;
  m[3][2] = -s;
  m[3][3] = c;
  return m;
}

// Twist about z by the angle with half-tangent a, offset k * sin along z.
template <class S>
Mat4<S> twist(const S& a, const S& k) {
  S den = S(1) + a * a;
  S c = (S(1) - a * a) / den;
  S s = S(2) * a / den;
  Mat4<S> m = Mat4<S>::Identity();
  m[1][1] = c;
  m[1][2] = -s;
  m[2][1] = s;
  m[2][2] = c;
  m[3][0] = k * s;
  return m;
}

// Twist with the angle pinned to 0 (flip = false) or pi, offset d along z.
template <class S>
Mat4<S> pinned_twist(bool flip, const S& d) {
  Mat4<S> m = Mat4<S>::Identity();
  if (flip) {
    m[1][1] = S(-1);
    m[2][2] = S(-1);
  }
  m[3][0] = d;
  return m;
}

template <class S>
struct Chain {
  Mat4<S> m12, m23, m34;
};

template <class S>
S coupler_parameter(const S& K, const S& tau) {
  if (tau == S(0)) {
    throw Error(ErrorKind::kPole,
                "tau = 0 is a pole of t12 = K / tau (transmission relation)");
  }
  return K / tau;
}

template <class S>
Chain<S> dh_chain(const BennettDesign<S>& d, const S& tau) {
  S t12 = coupler_parameter(transmission_K(d), tau);
  Chain<S> c;
  c.m12 = twist(d.a1, d.k);
  c.m23 = c.m12 * joint_rotation(t12) * twist(d.a2, d.k);
  c.m34 = c.m23 * joint_rotation(tau) * twist(d.a1, d.k);
  return c;
}

// Full closed-loop product; the identity whenever the loop closes.
template <class S>
Mat4<S> loop_product(const Mat4<S>& t1, const Mat4<S>& t2, const S& t12,
                     const S& tau) {
  return t1 * joint_rotation(t12) * t2 * joint_rotation(tau) * t1 *
         joint_rotation(S(-t12)) * t2 * joint_rotation(S(-tau));
}

template <class S>
double loop_closure_residual(const BennettDesign<S>& d, const S& tau) {
  S t12 = coupler_parameter(transmission_K(d), tau);
  Mat4<S> t1 = twist(d.a1, d.k), t2 = twist(d.a2, d.k);
  return max_abs_diff(loop_product(t1, t2, t12, tau), Mat4<S>::Identity());
}

template <class S>
struct Axis {
  Vec3<S> F;
  Vec3<S> r;
};

template <class S>
struct Pose {
  S tau{1};
  S K{1};
  std::array<Axis<S>, 4> axes;

  const Vec3<S>& F(int i) const { return axes[i].F; }
  const Vec3<S>& r(int i) const { return axes[i].r; }
};

template <class S>
Axis<S> axis_from(const Mat4<S>& m) {
  return Axis<S>{Vec3<S>(m[1][0], m[2][0], m[3][0]),
                 Vec3<S>(m[1][1], m[2][1], m[3][1])};
}

template <class S>
Pose<S> pose_from_chain(const Chain<S>& c, const S& tau, const S& K) {
  Pose<S> p;
  p.tau = tau;
  p.K = K;
  p.axes[kAxis14] = Axis<S>{Vec3<S>(), Vec3<S>(S(1), S(0), S(0))};
  p.axes[kAxis12] = axis_from(c.m12);
  p.axes[kAxis23] = axis_from(c.m23);
  p.axes[kAxis34] = axis_from(c.m34);
  return p;
}

template <class S>
Pose<S> frame(const BennettDesign<S>& d, const S& tau) {
  return pose_from_chain(dh_chain(d, tau), tau, transmission_K(d));
}

// Planar limit with both twists pinned to 0 or pi.
enum class PlanarCase { k1a, k1b, k2a, k2b };

const char* planar_case_name(PlanarCase c);
PlanarCase parse_planar_case(const std::string& s);
// Twist flips (alpha1 == pi, alpha2 == pi) for a case.
std::array<bool, 2> planar_flips(PlanarCase c);

template <class S>
struct PlanarDesign {
  S d1{1};
  S d2{2};
  PlanarCase kase = PlanarCase::k2a;
};

template <class S>
PlanarDesign<S> validate_planar(const S& d1, const S& d2, PlanarCase c) {
  if (!(d1 > S(0)) || !(d2 > S(0))) {
    throw Error(ErrorKind::kConvention, "planar offsets must be positive");
  }
  return PlanarDesign<S>{d1, d2, c};
}

template <class S>
S planar_K(const PlanarDesign<S>& pd) {
  switch (pd.kase) {
    case PlanarCase::k1b:
      return S(1);
    case PlanarCase::k2b:
      return S(-1);
    case PlanarCase::k1a:
    case PlanarCase::k2a:
      if (pd.d1 == pd.d2) {
        throw Error(ErrorKind::kPole, "d1 == d2 is a pole of the planar K");
      }
      if (pd.kase == PlanarCase::k1a) return (pd.d1 + pd.d2) / (pd.d2 - pd.d1);
      return (pd.d1 + pd.d2) / (pd.d1 - pd.d2);
  }
  return S(0);
}

template <class S>
Chain<S> planar_chain(const PlanarDesign<S>& pd, const S& tau) {
  auto flips = planar_flips(pd.kase);
  S t12 = coupler_parameter(planar_K(pd), tau);
  Mat4<S> t1 = pinned_twist(flips[0], pd.d1), t2 = pinned_twist(flips[1], pd.d2);
  Chain<S> c;
  c.m12 = t1;
  c.m23 = c.m12 * joint_rotation(t12) * t2;
  c.m34 = c.m23 * joint_rotation(tau) * t1;
  return c;
}

template <class S>
double planar_loop_closure_residual(const PlanarDesign<S>& pd, const S& tau) {
  auto flips = planar_flips(pd.kase);
  S t12 = coupler_parameter(planar_K(pd), tau);
  Mat4<S> t1 = pinned_twist(flips[0], pd.d1), t2 = pinned_twist(flips[1], pd.d2);
  return max_abs_diff(loop_product(t1, t2, t12, tau), Mat4<S>::Identity());
}

// Cases 1a/1b are the 2a/2b poses with axes 12 and 34 reversed.
template <class S>
Pose<S> planar_frame(const PlanarDesign<S>& pd, const S& tau) {
  PlanarDesign<S> base = pd;
  bool reverse = false;
  if (pd.kase == PlanarCase::k1a) {
    base.kase = PlanarCase::k2a;
    reverse = true;
  } else if (pd.kase == PlanarCase::k1b) {
    base.kase = PlanarCase::k2b;
    reverse = true;
  }
  Pose<S> p = pose_from_chain(planar_chain(base, tau), tau, planar_K(base));
  if (reverse) {
    p.axes[kAxis12].r = -p.axes[kAxis12].r;
    p.axes[kAxis34].r = -p.axes[kAxis34].r;
    p.K = planar_K(pd);
  }
  return p;
}

// Polynomial numerators of the frame over explicit denominators:
//   den14 = 1, den12 = 1 + a1^2, den23 = (1 + a1^2)(1 + a2^2) D(tau),
//   den34 = (1 + a2^2)(1 + tau^2), D(tau) = (a1 - a2)^2 tau^2 + (a1 + a2)^2.
// Works over any commutative ring R constructible from int.
template <class R>
struct ReducedFrame {
  std::array<R, 4> den;
  std::array<std::array<R, 3>, 4> F;
  std::array<std::array<R, 3>, 4> r;
};

template <class R>
ReducedFrame<R> reduced_frame(const R& a1, const R& a2, const R& k,
                              const R& tau) {
  const R one(1), two(2);
  R p = a1 + a2, m = a1 - a2;
  R t2 = tau * tau;
  R a1s = a1 * a1, a2s = a2 * a2;
  R D = m * m * t2 + p * p;
  ReducedFrame<R> f;
  f.den = {one, one + a1s, (one + a1s) * (one + a2s) * D,
           (one + a2s) * (one + t2)};
  f.F[0] = {R(0), R(0), R(0)};
  f.r[0] = {one, R(0), R(0)};
  f.F[1] = {R(0), R(0), two * a1 * k};
  f.r[1] = {one - a1s, two * a1, R(0)};

  R pm = p * m;
  R zf = a1s * a2 * t2 - a1s * a2 - a1 * a2s * t2 - a1 * a2s + a1 * t2 + a1 -
         a2 * t2 + a2;
  f.F[2] = {R(-8) * a1 * a2 * k * tau * pm,
            R(-4) * a2 * k * tau * (a1 - one) * (a1 + one) * pm,
            two * k * pm * zf};
  R a1c = a1s * a1, a2c = a2s * a2;
  R a14 = a1s * a1s, a24 = a2s * a2s;
  R xt = a14 * a2s - a14 - R(2) * a1c * a2c - R(2) * a1c * a2 + a1s * a24 +
         R(6) * a1s * a2s + a1s - R(2) * a1 * a2c - R(2) * a1 * a2 - a24 + a2s;
  R x0 = a14 * a2s - a14 + R(2) * a1c * a2c + R(2) * a1c * a2 + a1s * a24 +
         R(6) * a1s * a2s + a1s + R(2) * a1 * a2c + R(2) * a1 * a2 - a24 + a2s;
  R yf = a1s * a2 * t2 - a1s * a2 - a1 * a2s * t2 - a1 * a2s - a1 * t2 - a1 +
         a2 * t2 - a2;
  f.r[2] = {xt * t2 + x0, R(-2) * pm * yf,
            R(-4) * a2 * tau * pm * (a1s + one)};

  f.F[3] = {R(0), R(-4) * a2 * k * tau, two * a2 * k * (t2 - one)};
  f.r[3] = {-(a2s - one) * (t2 + one), two * a2 * (t2 - one),
            R(4) * a2 * tau};
  return f;
}

struct IndicatrixReport {
  std::array<double, 4> arcs{};  // angles between r_i and r_{i+1}
  enum class Kind { kVHedral, kAntiVHedral, kOther } kind = Kind::kOther;
  // Adjacent arcs are supplementary as well (a1 * a2 == 1).
  bool adjacent_supplementary = false;
};

const char* indicatrix_kind_name(IndicatrixReport::Kind k);

IndicatrixReport indicatrix(const BennettDesign<double>& d, double tau = 0.7,
                            double tol = 1e-9);

// Plücker side product of two lines; zero iff they are coplanar.
template <class S>
S side_product(const Axis<S>& u, const Axis<S>& v) {
  return dot(u.F - v.F, cross(u.r, v.r));
}

struct OppositeIntersection {
  bool pair_14_23 = false;
  bool pair_12_34 = false;
  double side_14_23 = 0.0;
  double side_12_34 = 0.0;
};

template <class S>
OppositeIntersection opposite_axes_intersect(const Pose<S>& p,
                                             double tol = 1e-9) {
  OppositeIntersection r;
  S s1 = side_product(p.axes[kAxis14], p.axes[kAxis23]);
  S s2 = side_product(p.axes[kAxis12], p.axes[kAxis34]);
  r.side_14_23 = to_double(s1);
  r.side_12_34 = to_double(s2);
  r.pair_14_23 = near_zero(s1, tol);
  r.pair_12_34 = near_zero(s2, tol);
  return r;
}

// Distance of the fourth axis from the quadric spanned by the first three.
double regulus_residual(const Pose<double>& p, double tol = 1e-9);

template <class S>
struct Line {
  Vec3<S> point;
  Vec3<S> dir;  // not normalized
};

// Symmetry line of a skew isogram q0 q1 q2 q3: through the midpoints of the
// diagonals q0 q2 and q1 q3.
template <class S>
Line<S> symmetry_line(const std::array<Vec3<S>, 4>& q, double tol = 1e-12) {
  const S half = from_rational<S>(Rational(1, 2));
  Vec3<S> m1 = (q[0] + q[2]) * half;
  Vec3<S> m2 = (q[1] + q[3]) * half;
  Vec3<S> u = m2 - m1;
  if (near_zero(norm2(u), tol)) {
    throw Error(ErrorKind::kUndefinedLine, "diagonal midpoints coincide");
  }
  return Line<S>{m1, u};
}

template <class S>
std::array<Vec3<S>, 4> f_quad(const Pose<S>& p) {
  return {p.F(0), p.F(1), p.F(2), p.F(3)};
}

template <class S>
Vec3<S> halfturn_vector(const Line<S>& l, const Vec3<S>& v) {
  return l.dir * (S(2) * dot(v, l.dir) / norm2(l.dir)) - v;
}

template <class S>
Vec3<S> halfturn_point(const Line<S>& l, const Vec3<S>& x) {
  return l.point + halfturn_vector(l, x - l.point);
}

template <class S>
Mat4<S> halfturn_matrix(const Line<S>& l) {
  Mat3<S> rot;
  for (int j = 0; j < 3; ++j) {
    Vec3<S> e;
    e[j] = S(1);
    Vec3<S> c = halfturn_vector(l, e);
    for (int i = 0; i < 3; ++i) rot[i][j] = c[i];
  }
  return Mat4<S>::FromRotationTranslation(rot, halfturn_point(l, Vec3<S>()));
}

}  // namespace bibennett

#endif  // BIBENNETT_BENNETT_HPP_
