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

#include "bibennett/families.hpp"

#include <algorithm>
#include <cmath>

namespace bibennett {

const char* family_name(Family f) {
  switch (f) {
    case Family::kA: return "A";
    case Family::kB: return "B";
    case Family::kC: return "C";
    case Family::kTrivialLineSym: return "trivial";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "A") return Family::kA;
  if (s == "B") return Family::kB;
  if (s == "C") return Family::kC;
  if (s == "trivial") return Family::kTrivialLineSym;
  throw Error(ErrorKind::kParse, "unknown family '" + s + "'");
}

namespace {

// Quadratic through (1, y0), (2, y1), (3, y2), coefficients low to high.
template <class S>
std::array<S, 3> quad_through(const S& y0, const S& y1, const S& y2) {
  S c2 = (y0 - S(2) * y1 + y2) / S(2);
  S c1 = y1 - y0 - S(3) * c2;
  S c0 = y0 - c1 - c2;
  return {c0, c1, c2};
}

template <class S, class F>
Quadratic2<S> fit_grid(F&& f) {
  std::array<std::array<S, 3>, 3> y;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) y[i][j] = f(S(i + 1), S(j + 1));
  // Fit in taubar per tau node, then in tau per coefficient.
  std::array<std::array<S, 3>, 3> by_tau;
  for (int i = 0; i < 3; ++i) by_tau[i] = quad_through(y[i][0], y[i][1], y[i][2]);
  Quadratic2<S> q;
  for (int j = 0; j < 3; ++j) {
    auto c = quad_through(by_tau[0][j], by_tau[1][j], by_tau[2][j]);
    for (int i = 0; i < 3; ++i) q.c[i][j] = c[i];
  }
  return q;
}

template <class S>
std::array<Quadratic2<S>, 2> conditions_impl(const Loop<S>& loop,
                                             const MuSet<S>& mu,
                                             const Loop<S>& bar_loop,
                                             const MuSet<S>& bar_mu) {
  S K = loop.K(), Kb = bar_loop.K();
  auto quads = [&](const S& t, const S& tb) {
    SkewQuad<S> p = points_on_axes(loop.pose(t), mu);
    SkewQuad<S> pb = points_on_axes(bar_loop.pose(tb), bar_mu);
    return std::pair{p, pb};
  };
  auto cond1 = [&](const S& t, const S& tb) {
    auto [p, pb] = quads(t, tb);
    return (dist2(p[0], p[2]) - dist2(pb[0], pb[2])) * (t * t + K * K) *
           (tb * tb + Kb * Kb);
  };
  auto cond2 = [&](const S& t, const S& tb) {
    auto [p, pb] = quads(t, tb);
    return (dist2(p[1], p[3]) - dist2(pb[1], pb[3])) * (S(1) + t * t) *
           (S(1) + tb * tb);
  };
  std::array<Quadratic2<S>, 2> q{fit_grid<S>(cond1), fit_grid<S>(cond2)};
  if constexpr (kExact<S>) {
    for (const auto& [t, tb] : {std::pair{Rational(5, 7), Rational(-4, 3)},
                                std::pair{Rational(-11, 2), Rational(13, 5)}}) {
      if (!(q[0].eval(t, tb) == cond1(t, tb)) ||
          !(q[1].eval(t, tb) == cond2(t, tb))) {
        throw Error(ErrorKind::kDegreeBound,
                    "coupling condition is not of bidegree (2, 2)");
      }
    }
  }
  return q;
}

// Real roots of c0 + c1 x + c2 x^2.
std::vector<double> quadratic_roots(const std::array<double, 3>& c,
                                    double tol) {
  double scale = std::max({std::fabs(c[0]), std::fabs(c[1]), std::fabs(c[2])});
  if (scale == 0.0) return {};
  if (std::fabs(c[2]) <= tol * scale) {
    if (std::fabs(c[1]) <= tol * scale) return {};
    return {-c[0] / c[1]};
  }
  double disc = c[1] * c[1] - 4 * c[2] * c[0];
  if (disc < -tol * scale * scale) return {};
  disc = std::max(disc, 0.0);
  double sq = std::sqrt(disc);
  // Stable pair of roots.
  double qq = -0.5 * (c[1] + (c[1] >= 0 ? sq : -sq));
  std::vector<double> r;
  if (qq != 0.0) {
    r.push_back(qq / c[2]);
    r.push_back(c[0] / qq);
  } else {
    r.push_back(0.0);
    r.push_back(0.0);
  }
  std::sort(r.begin(), r.end());
  return r;
}

Vec3<double> unit_or_throw(const Vec3<double>& v, const char* what) {
  double n = norm(v);
  if (n < 1e-14) throw Error(ErrorKind::kDegenerate, what);
  return v * (1.0 / n);
}

// Orthonormal frame from three points (columns e1, e2, e3).
Mat3<double> tri_frame(const SkewQuad<double>& q) {
  Vec3<double> e1 = unit_or_throw(q[1] - q[0], "coincident quad vertices");
  Vec3<double> v = q[2] - q[0];
  v -= e1 * dot(v, e1);
  Vec3<double> e2 = unit_or_throw(v, "collinear quad vertices");
  return Mat3<double>::FromColumns(e1, e2, cross(e1, e2));
}

double quad_fit_residual(const RigidMotion<double>& m,
                         const SkewQuad<double>& src,
                         const SkewQuad<double>& dst) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i) r = std::max(r, norm(m.apply_point(src[i]) - dst[i]));
  return r;
}

}  // namespace

std::array<Quadratic2<Rational>, 2> coupling_conditions(
    const Loop<Rational>& loop, const MuSet<Rational>& mu,
    const Loop<Rational>& bar_loop, const MuSet<Rational>& bar_mu) {
  return conditions_impl(loop, mu, bar_loop, bar_mu);
}

std::array<Quadratic2<double>, 2> coupling_conditions(
    const Loop<double>& loop, const MuSet<double>& mu,
    const Loop<double>& bar_loop, const MuSet<double>& bar_mu) {
  return conditions_impl(loop, mu, bar_loop, bar_mu);
}

std::vector<double> solve_bar_tau_numeric(const BiBennett<double>& b,
                                          double tau, double tol) {
  auto q = coupling_conditions(b.loop, b.mu, b.bar_loop, b.bar_mu);
  auto c1 = q[0].at_tau(tau), c2 = q[1].at_tau(tau);
  auto scale = [](const std::array<double, 3>& c) {
    return std::max({std::fabs(c[0]), std::fabs(c[1]), std::fabs(c[2])});
  };
  const auto& lead = scale(c1) >= scale(c2) ? c1 : c2;
  const auto& other = scale(c1) >= scale(c2) ? c2 : c1;
  std::vector<double> out;
  for (double x : quadratic_roots(lead, 1e-13)) {
    double v = other[0] + x * (other[1] + x * other[2]);
    double s = scale(other) * (1.0 + x * x);
    if (std::fabs(v) <= tol * std::max(s, 1e-300) || scale(other) == 0.0) {
      out.push_back(x);
    }
  }
  return out;
}

RigidMotion<double> align_isometry(const SkewQuad<double>& src,
                                   const SkewQuad<double>& dst, double tol) {
  double size = 0.0;
  for (int i = 0; i < 4; ++i) size = std::max(size, norm(src[i] - src[0]));
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      double a = norm(src[i] - src[j]), b = norm(dst[i] - dst[j]);
      if (std::fabs(a - b) > tol * (1.0 + size)) {
        throw Error(ErrorKind::kNotIsometric,
                    "edge " + std::to_string(i) + "-" + std::to_string(j) +
                        " differs by " + std::to_string(std::fabs(a - b)));
      }
    }
  }
  Mat3<double> es = tri_frame(src), ed = tri_frame(dst);
  for (int orientation : {1, -1}) {
    Mat3<double> e = ed;
    if (orientation < 0) {
      for (int i = 0; i < 3; ++i) e[i][2] = -e[i][2];
    }
    Mat3<double> rot = e * es.transposed();
    Vec3<double> t = dst[0] - rot * src[0];
    RigidMotion<double> m{Mat4<double>::FromRotationTranslation(rot, t),
                          orientation};
    if (quad_fit_residual(m, src, dst) <= tol * (1.0 + size)) return m;
  }
  throw Error(ErrorKind::kNotIsometric, "no isometry maps the fourth vertex");
}

bool NecessaryConditions::all_zero() const {
  for (const auto& x : side_residuals)
    if (!x.is_zero()) return false;
  if (degenerate && !proportional) return false;
  for (const auto& x : resultant)
    if (!x.is_zero()) return false;
  return true;
}

std::array<Rational, 13> NecessaryConditions::values() const {
  std::array<Rational, 13> v;
  for (int i = 0; i < 4; ++i) v[i] = side_residuals[i];
  for (int i = 0; i < 9; ++i) v[4 + i] = resultant[i];
  return v;
}

NecessaryConditions necessary_conditions(const Loop<Rational>& loop,
                                         const MuSet<Rational>& mu,
                                         const Loop<Rational>& bar_loop,
                                         const MuSet<Rational>& bar_mu) {
  NecessaryConditions nc;
  SkewQuad<Rational> p = points_on_axes(loop.pose(Rational(1)), mu);
  SkewQuad<Rational> pb = points_on_axes(bar_loop.pose(Rational(1)), bar_mu);
  for (int i = 0; i < 4; ++i) {
    int j = next_axis(i);
    nc.side_residuals[i] = dist2(p[i], p[j]) - dist2(pb[i], pb[j]);
  }
  auto q = coupling_conditions(loop, mu, bar_loop, bar_mu);
  // Rank <= 1 test of the two coefficient vectors.
  nc.proportional = true;
  for (int a = 0; a < 9 && nc.proportional; ++a) {
    for (int b = a + 1; b < 9; ++b) {
      const Rational& x0 = q[0].c[a / 3][a % 3];
      const Rational& y0 = q[0].c[b / 3][b % 3];
      const Rational& x1 = q[1].c[a / 3][a % 3];
      const Rational& y1 = q[1].c[b / 3][b % 3];
      if (!(x0 * y1 - x1 * y0).is_zero()) {
        nc.proportional = false;
        break;
      }
    }
  }
  try {
    auto r = resultant_tau_bar_coeffs(q[0], q[1]);
    for (int i = 0; i < 9; ++i) nc.resultant[i] = r[i];
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kDegenerateResultant) throw;
    nc.degenerate = true;
  }
  return nc;
}

Pose<double> halfturn_partner(const Pose<double>& pose,
                              const SkewQuad<double>& quad, double tol) {
  auto res = isogram_residuals(quad);
  double scale = 1.0 + dist2(quad[0], quad[2]) + dist2(quad[1], quad[3]);
  if (std::fabs(res[0]) > tol * scale || std::fabs(res[1]) > tol * scale) {
    throw Error(ErrorKind::kPrecondition, "quad is not a skew isogram");
  }
  Line<double> l = isogram_axis(quad);
  Pose<double> h = pose;
  for (int i = 0; i < 4; ++i) {
    h.axes[i].F = halfturn_point(l, pose.F(i));
    h.axes[i].r = halfturn_vector(l, pose.r(i));
  }
  return h;
}

CoupledPose coupled_pose(const BiBennett<double>& b, double tau, double tol) {
  CoupledPose cp;
  cp.family = b.family;
  cp.tau = tau;
  cp.pose = b.loop.pose(tau);
  cp.quad = points_on_axes(cp.pose, b.mu);
  if (b.family != Family::kC) {
    // The relabeled copy of the loop runs with reversed axis directions, which
    // in the canonical frame is the pose at -tau.
    cp.tau_bar = -tau;
    cp.hat_pose = halfturn_partner(cp.pose, cp.quad, tol);
    cp.partner_at_vertex = {2, 3, 0, 1};
    cp.bar_pose = b.bar_loop.pose(cp.tau_bar);
    cp.bar_quad = points_on_axes(cp.bar_pose, b.bar_mu);
    cp.delta = align_isometry(cp.bar_quad, cp.quad, tol);
    cp.align_residual = quad_fit_residual(cp.delta, cp.bar_quad, cp.quad);
    return cp;
  }
  std::vector<double> roots;
  if (b.loop.planar) {
    roots = solve_bar_tau_numeric(b, tau);
  } else {
    roots = solve_bar_tau(
        coupling_quartic(b.loop.design, b.mu.mu14(), b.mu.mu12()), tau);
  }
  if (roots.empty()) {
    throw Error(ErrorKind::kNoRealTauBar,
                "no real taubar at tau = " + std::to_string(tau));
  }
  std::sort(roots.begin(), roots.end());
  cp.tau_bar = b.branch < 0 ? roots.front() : roots.back();
  cp.bar_pose = b.bar_loop.pose(cp.tau_bar);
  cp.bar_quad = points_on_axes(cp.bar_pose, b.bar_mu);
  cp.delta = align_isometry(cp.bar_quad, cp.quad, tol);
  cp.align_residual = quad_fit_residual(cp.delta, cp.bar_quad, cp.quad);
  cp.hat_pose = cp.bar_pose;
  for (int i = 0; i < 4; ++i) cp.hat_pose.axes[i] = cp.delta.apply(cp.bar_pose.axes[i]);
  cp.partner_at_vertex = {0, 1, 2, 3};
  return cp;
}

std::array<SixRLoop, 4> extract_6r_loops(const CoupledPose& cp) {
  auto own = [&](int v) {
    return std::pair{cp.own_axis(v % 4), std::string("B") + axis_name(v % 4)};
  };
  auto hat = [&](int v) {
    return std::pair{cp.hat_axis(v % 4), std::string("H") + axis_name(v % 4)};
  };
  auto edge = [&](int v) {
    int a = v % 4, b = (v + 1) % 4;
    Axis<double> ax{cp.quad[a], normalized(cp.quad[b] - cp.quad[a])};
    return std::pair{ax, std::string("E") + axis_name(a) + "-" + axis_name(b)};
  };
  std::array<SixRLoop, 4> loops;
  for (int j = 0; j < 4; ++j) {
    std::array<std::pair<Axis<double>, std::string>, 6> seq = {
        own(j + 2), own(j + 3), edge(j + 3), hat(j + 4), hat(j + 1), edge(j + 1)};
    for (int i = 0; i < 6; ++i) {
      loops[j].axes[i] = seq[i].first;
      loops[j].labels[i] = seq[i].second;
    }
  }
  return loops;
}

Loop<double> to_double(const Loop<Rational>& l) {
  Loop<double> r;
  r.planar = l.planar;
  r.design = BennettDesign<double>{l.design.a1.to_double(), l.design.a2.to_double(),
                                   l.design.k.to_double()};
  r.pd = PlanarDesign<double>{l.pd.d1.to_double(), l.pd.d2.to_double(), l.pd.kase};
  return r;
}

MuSet<double> to_double(const MuSet<Rational>& m) {
  return MuSet<double>(m[0].to_double(), m[1].to_double(), m[2].to_double(),
                       m[3].to_double());
}

BiBennett<double> to_double(const BiBennett<Rational>& b) {
  BiBennett<double> r;
  r.family = b.family;
  r.loop = to_double(b.loop);
  r.mu = to_double(b.mu);
  r.bar_loop = to_double(b.bar_loop);
  r.bar_mu = to_double(b.bar_mu);
  r.s = b.s;
  r.branch = b.branch;
  return r;
}

}  // namespace bibennett
