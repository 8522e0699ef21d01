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

// Flexible couplings of two Bennett loops along a shared skew quadrilateral.

#ifndef BIBENNETT_FAMILIES_HPP_
#define BIBENNETT_FAMILIES_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bibennett/bennett.hpp"
#include "bibennett/linalg.hpp"
#include "bibennett/resultant.hpp"

namespace bibennett {

// Either a spatial Bennett loop or one of its planar limits.
template <class S>
struct Loop {
  bool planar = false;
  BennettDesign<S> design;
  PlanarDesign<S> pd;

  static Loop Spatial(const BennettDesign<S>& d) {
    Loop l;
    l.design = d;
    return l;
  }
  static Loop Planar(const PlanarDesign<S>& p) {
    Loop l;
    l.planar = true;
    l.pd = p;
    return l;
  }

  S K() const { return planar ? planar_K(pd) : transmission_K(design); }
  Pose<S> pose(const S& tau) const {
    return planar ? planar_frame(pd, tau) : frame(design, tau);
  }
};

template <class S>
struct MuSet {
  std::array<S, 4> mu{S(0), S(0), S(0), S(0)};  // axis order 14, 12, 23, 34

  MuSet() = default;
  MuSet(S m14, S m12, S m23, S m34) : mu{m14, m12, m23, m34} {}

  const S& operator[](int i) const { return mu[i]; }
  S& operator[](int i) { return mu[i]; }
  const S& mu14() const { return mu[kAxis14]; }
  const S& mu12() const { return mu[kAxis12]; }
  const S& mu23() const { return mu[kAxis23]; }
  const S& mu34() const { return mu[kAxis34]; }
  bool all_zero() const {
    for (const auto& m : mu)
      if (!(m == S(0))) return false;
    return true;
  }
};

template <class S>
using SkewQuad = std::array<Vec3<S>, 4>;  // P14, P12, P23, P34

template <class S>
SkewQuad<S> points_on_axes(const Pose<S>& p, const MuSet<S>& mu) {
  SkewQuad<S> q;
  for (int i = 0; i < 4; ++i) q[i] = p.F(i) + p.r(i) * mu[i];
  return q;
}

// Squared-length differences of opposite sides; both vanish on an isogram.
// Symmetry line of an isogram. A parallelogram has coincident diagonal
// midpoints; its half-turn axis is then the normal through the center.
template <class S>
Line<S> isogram_axis(const SkewQuad<S>& q, double tol = 1e-12) {
  try {
    return symmetry_line(q, tol);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kUndefinedLine) throw;
  }
  Vec3<S> n = cross(q[1] - q[0], q[3] - q[0]);
  if (near_zero(norm2(n), tol) || !near_zero(norm2((q[1] - q[0]) - (q[2] - q[3])), tol)) {
    throw Error(ErrorKind::kUndefinedLine, "diagonal midpoints coincide");
  }
  const S half = from_rational<S>(Rational(1, 2));
  return Line<S>{(q[0] + q[2]) * half, n};
}

template <class S>
std::array<S, 2> isogram_residuals(const SkewQuad<S>& q) {
  return {dist2(q[0], q[1]) - dist2(q[2], q[3]),
          dist2(q[0], q[3]) - dist2(q[2], q[1])};
}

// Returns the positive square root, exactly for Rational (kIrrational when
// the value is not a rational square).
inline double positive_root(double x) { return std::sqrt(x); }
inline Rational positive_root(const Rational& x) {
  auto r = x.sqrt_exact();
  if (!r) {
    throw Error(ErrorKind::kIrrational,
                "value " + x.str() + " is not a rational square");
  }
  return *r;
}

template <class S>
std::pair<S, S> family_a_squares(const MuSet<S>& m, double tol = 1e-12) {
  S s1 = m.mu14() - m.mu12() + m.mu23() - m.mu34();
  S s2 = m.mu14() - m.mu12() - m.mu23() + m.mu34();
  S s3 = m.mu14() + m.mu12() + m.mu23() + m.mu34();
  S s4 = m.mu14() + m.mu12() - m.mu23() - m.mu34();
  if (near_zero(s3, tol) || near_zero(s4, tol) || near_zero(s2, tol)) {
    throw Error(ErrorKind::kExcludedBranch,
                "vanishing denominator: mu lies on the mu14 = +-mu23, "
                "mu12 = +-mu34 branches (family B or the trivial coupling)");
  }
  return {-(s1 * s2) / (s3 * s4), -(s4 * s1) / (s3 * s2)};
}

// Twist half-tangents that make the quad a skew isogram for every tau (k = 1).
template <class S>
std::pair<S, S> family_a(const MuSet<S>& m, double tol = 1e-12) {
  auto [q1, q2] = family_a_squares(m, tol);
  if (!(q1 > S(0)) || !(q2 > S(0))) {
    throw Error(ErrorKind::kNoRealFamily,
                "nonpositive radicand: no real (a1, a2) for this mu");
  }
  return {positive_root(q1), positive_root(q2)};
}

template <class S>
MuSet<S> family_b(const S& mu23, const S& mu34) {
  if (mu23 == S(0) && mu34 == S(0)) {
    throw Error(ErrorKind::kTrivial, "mu23 = mu34 = 0 gives the F-quad");
  }
  return MuSet<S>(mu23, mu34, mu23, mu34);
}

// Family B offsets that also give an isogonal quad (k = 1):
// mu23 / mu34 = ((1 + a1 a2) / (1 - a1 a2))^(+-1).
template <class S>
bool family_b_isogonal(const S& a1, const S& a2, const MuSet<S>& m,
                       double tol = 1e-12) {
  S p = S(1) + a1 * a2, q = S(1) - a1 * a2;
  return near_zero(S(m.mu23() * q - m.mu34() * p), tol) ||
         near_zero(S(m.mu23() * p - m.mu34() * q), tol);
}

template <class S>
bool detect_trivial(const MuSet<S>& m, double tol = 1e-12) {
  return near_zero(S(m.mu14() + m.mu23()), tol) &&
         near_zero(S(m.mu12() + m.mu34()), tol);
}

enum class Family { kA, kB, kC, kTrivialLineSym };
const char* family_name(Family f);
Family parse_family(const std::string& s);

template <class S>
struct RigidMotion {
  Mat4<S> transform = Mat4<S>::Identity();
  int orientation = 1;

  Vec3<S> apply_point(const Vec3<S>& x) const { return transform.apply_point(x); }
  Vec3<S> apply_vector(const Vec3<S>& x) const { return transform.apply_vector(x); }
  Axis<S> apply(const Axis<S>& a) const {
    return Axis<S>{apply_point(a.F), apply_vector(a.r)};
  }
};

template <class S>
struct BiBennett {
  Family family = Family::kA;
  Loop<S> loop;
  MuSet<S> mu;
  Loop<S> bar_loop;
  MuSet<S> bar_mu;
  int s = 1;       // family C sign
  int branch = -1;  // sign of taubar (family C)
};

// A/B: the partner is the half-turn image; in the canonical frame it is the
// same loop with mu rotated by two positions.
template <class S>
BiBennett<S> make_line_symmetric(Family f, const Loop<S>& loop,
                                 const MuSet<S>& mu) {
  BiBennett<S> b;
  b.family = f;
  b.loop = loop;
  b.mu = mu;
  b.bar_loop = loop;
  b.bar_mu = MuSet<S>(mu.mu23(), mu.mu34(), mu.mu14(), mu.mu12());
  return b;
}

template <class S>
BiBennett<S> family_c(const Loop<S>& loop, const S& mu14, const S& mu12,
                      int s, int branch = -1) {
  if (s != 1 && s != -1) throw Error(ErrorKind::kPrecondition, "s must be +-1");
  BiBennett<S> b;
  b.family = Family::kC;
  b.loop = loop;
  b.mu = MuSet<S>(mu14, mu12, mu14, mu12);
  b.bar_loop = loop;
  S ss(s);
  b.bar_mu = MuSet<S>(ss * mu12, ss * mu14, ss * mu12, ss * mu14);
  b.s = s;
  b.branch = branch;
  return b;
}

template <class S>
BiBennett<S> family_c(const BennettDesign<S>& d, const S& mu14, const S& mu12,
                      int s, int branch = -1) {
  return family_c(Loop<S>::Spatial(d), mu14, mu12, s, branch);
}

// A tau^2 taubar^2 + B tau^2 + C taubar^2 + D = 0.
template <class S>
struct CouplingQuartic {
  S A, B, C, D;
};

template <class S>
CouplingQuartic<S> coupling_quartic(const BennettDesign<S>& d, const S& mu14,
                                    const S& mu12) {
  S dm = mu14 * mu14 - mu12 * mu12;
  S e = S(2) * (mu14 * mu14 + mu12 * mu12 + S(2) * d.k * d.k) * d.a1 * d.a2;
  S p = d.a1 + d.a2, m = d.a1 - d.a2;
  S sq = d.a1 * d.a1 + d.a2 * d.a2;
  return CouplingQuartic<S>{dm * m * m, dm * sq + e, dm * sq - e, dm * p * p};
}

template <class S>
S tau_bar_squared(const CouplingQuartic<S>& q, const S& tau,
                  double tol = 1e-14) {
  if (tau == S(0)) throw Error(ErrorKind::kPole, "tau = 0");
  S den = q.A * tau * tau + q.C;
  if (near_zero(den, tol)) {
    throw Error(ErrorKind::kPole, "A tau^2 + C = 0: taubar is at infinity");
  }
  return -(q.B * tau * tau + q.D) / den;
}

// Real roots in increasing order: none, a double root 0, or -r and r.
template <class S>
std::vector<double> solve_bar_tau(const CouplingQuartic<S>& q, const S& tau,
                                  double tol = 1e-14) {
  double t2 = to_double(tau_bar_squared(q, tau, tol));
  if (t2 < -tol) return {};
  if (t2 <= tol) return {0.0};
  double r = std::sqrt(t2);
  return {-r, r};
}

// Direct (or, if unavoidable, reversing) isometry mapping src onto dst.
RigidMotion<double> align_isometry(const SkewQuad<double>& src,
                                   const SkewQuad<double>& dst,
                                   double tol = 1e-9);

// Same-orientation test: det of edge vectors of both tetrahedra.
template <class S>
S orientation_det(const SkewQuad<S>& q) {
  return det3(q[1] - q[0], q[2] - q[0], q[3] - q[0]);
}

// Cleared Eq. 2mit-type conditions as bidegree-(2,2) forms. The first
// compares the 14-23 diagonal (cleared by (tau^2 + K^2)(taubar^2 + Kbar^2)),
// the second the 12-34 diagonal (cleared by (1 + tau^2)(1 + taubar^2)).
std::array<Quadratic2<Rational>, 2> coupling_conditions(
    const Loop<Rational>& loop, const MuSet<Rational>& mu,
    const Loop<Rational>& bar_loop, const MuSet<Rational>& bar_mu);

// Double-precision counterpart, fitted on the same grid.
std::array<Quadratic2<double>, 2> coupling_conditions(
    const Loop<double>& loop, const MuSet<double>& mu,
    const Loop<double>& bar_loop, const MuSet<double>& bar_mu);

// Common real taubar roots of both conditions at tau.
std::vector<double> solve_bar_tau_numeric(const BiBennett<double>& b,
                                          double tau, double tol = 1e-8);

struct NecessaryConditions {
  std::array<Rational, 4> side_residuals;  // tau-free conditions
  std::array<Rational, 9> resultant;       // c0 .. c8
  bool proportional = false;  // the two forms are scalar multiples
  bool degenerate = false;    // resultant undefined (both leading forms zero)

  bool all_zero() const;
  std::array<Rational, 13> values() const;
};

NecessaryConditions necessary_conditions(const Loop<Rational>& loop,
                                         const MuSet<Rational>& mu,
                                         const Loop<Rational>& bar_loop,
                                         const MuSet<Rational>& bar_mu);

// Both loops placed at one tau with the partner moved onto the shared quad.
struct CoupledPose {
  Family family = Family::kA;
  double tau = 0.0;
  double tau_bar = 0.0;
  Pose<double> pose;         // B
  SkewQuad<double> quad;     // P14, P12, P23, P34 of B
  Pose<double> bar_pose;     // Bbar in its own frame (family C)
  SkewQuad<double> bar_quad;
  Pose<double> hat_pose;     // Bhat = delta(Bbar) or the half-turn image of B
  RigidMotion<double> delta;
  std::array<int, 4> partner_at_vertex{};  // hat axis index through P_v
  double align_residual = 0.0;

  const Axis<double>& own_axis(int v) const { return pose.axes[v]; }
  const Axis<double>& hat_axis(int v) const {
    return hat_pose.axes[partner_at_vertex[v]];
  }
};

// Half-turn of all four axes of the pose about the symmetry line of quad.
Pose<double> halfturn_partner(const Pose<double>& pose,
                              const SkewQuad<double>& quad, double tol = 1e-9);

// Builds the coupled configuration at tau; family C picks the taubar root by
// b.branch. Throws kNoRealTauBar when no real root exists.
CoupledPose coupled_pose(const BiBennett<double>& b, double tau,
                         double tol = 1e-9);

struct SixRLoop {
  std::array<Axis<double>, 6> axes;
  std::array<std::string, 6> labels;  // "B23", "E34", "H14", ...
};

std::array<SixRLoop, 4> extract_6r_loops(const CoupledPose& cp);

// Conversions for running exact instances in double precision.
Loop<double> to_double(const Loop<Rational>& l);
MuSet<double> to_double(const MuSet<Rational>& m);
BiBennett<double> to_double(const BiBennett<Rational>& b);

}  // namespace bibennett

#endif  // BIBENNETT_FAMILIES_HPP_
