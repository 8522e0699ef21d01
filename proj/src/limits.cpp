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

#include "bibennett/limits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bibennett {

const char* limit_kind_name(LimitKind k) {
  switch (k) {
    case LimitKind::kPrismaticAnti: return "prismatic-anti";
    case LimitKind::kPrismaticPara: return "prismatic-para";
    case LimitKind::kPyramidal: return "pyramidal";
  }
  return "?";
}

const char* class_label_name(ClassLabel c) {
  switch (c) {
    case ClassLabel::kI1: return "I1";
    case ClassLabel::kI2: return "I2";
    case ClassLabel::kI3: return "I3";
    case ClassLabel::kIII1: return "III1";
    case ClassLabel::kIII2i: return "III2i";
    case ClassLabel::kIII2ii: return "III2ii";
    case ClassLabel::kIII3: return "III3";
    case ClassLabel::kIII4i: return "III4i";
    case ClassLabel::kIII4ii: return "III4ii";
  }
  return "?";
}

namespace {

PlanarCase planar_case_for(LimitKind kind) {
  switch (kind) {
    case LimitKind::kPrismaticAnti: return PlanarCase::k2a;
    case LimitKind::kPrismaticPara: return PlanarCase::k2b;
    case LimitKind::kPyramidal: break;
  }
  throw Error(ErrorKind::kPrecondition, "not a prismatic limit kind");
}

}  // namespace

Rational prismatic_isogonal_condition(LimitKind kind, const Rational& d1,
                                      const Rational& d2,
                                      const MuSet<Rational>& m) {
  const Rational& m12 = m.mu12();
  const Rational& m23 = m.mu23();
  const Rational& m34 = m.mu34();
  if (kind == LimitKind::kPrismaticAnti) {
    return (d1 * m12 - d1 * m23 - d2 * m23 + d2 * m34) *
           (d1 * m12 - d1 * m23 + d2 * m23 - d2 * m34);
  }
  return (d1 * m12 + d1 * m23 + d2 * m23 - d2 * m34) *
         (d1 * m12 + d1 * m23 - d2 * m23 + d2 * m34);
}

LimitStructure prismatic_limit_ab(Family family, LimitKind kind,
                                  const Rational& d1, const Rational& d2,
                                  const MuSet<Rational>& mu) {
  if (family != Family::kA && family != Family::kB) {
    throw Error(ErrorKind::kPrecondition, "expected family A or B");
  }
  LimitStructure ls;
  ls.kind = kind;
  ls.source = family;
  MuSet<Rational> m = mu;
  if (family == Family::kB) {
    m = bibennett::family_b(mu.mu23(), mu.mu34());
  } else if (kind == LimitKind::kPrismaticAnti) {
    m[kAxis14] = m.mu12() - m.mu23() + m.mu34();
  } else {
    m[kAxis14] = m.mu12() + m.mu23() - m.mu34();
  }
  if (detect_trivial(m)) {
    throw Error(ErrorKind::kTrivial,
                "offsets give the self-coupling (mu14 = -mu23, mu12 = -mu34)");
  }
  PlanarDesign<Rational> pd = validate_planar(d1, d2, planar_case_for(kind));
  ls.coupling = make_line_symmetric(family, Loop<Rational>::Planar(pd), m);
  ls.labels.insert(ClassLabel::kIII1);
  if (kind == LimitKind::kPrismaticAnti) {
    if (family == Family::kB) {
      ls.labels.insert(ClassLabel::kIII2ii);
    } else {
      ls.isogonal_compatible = prismatic_isogonal_condition(kind, d1, d2, m).is_zero();
      if (ls.isogonal_compatible) ls.labels.insert(ClassLabel::kIII3);
    }
  } else {
    ls.labels.insert(ClassLabel::kIII4ii);
    if (family == Family::kA) {
      ls.isogonal_compatible = prismatic_isogonal_condition(kind, d1, d2, m).is_zero();
    }
  }
  return ls;
}

LimitStructure prismatic_limit_c(LimitKind kind, const Rational& d1,
                                 const Rational& d2, const Rational& mu14,
                                 const Rational& mu12, int s, int branch) {
  LimitStructure ls;
  ls.kind = kind;
  ls.source = Family::kC;
  PlanarDesign<Rational> pd = validate_planar(d1, d2, planar_case_for(kind));
  ls.coupling = family_c(Loop<Rational>::Planar(pd), mu14, mu12, s, branch);
  ls.labels.insert(kind == LimitKind::kPrismaticAnti ? ClassLabel::kIII2ii
                                                     : ClassLabel::kIII4ii);
  return ls;
}

LimitStructure pyramidal_limit(Family family, const BennettDesign<Rational>& d,
                               const MuSet<Rational>& mu, int s, int branch) {
  LimitStructure ls;
  ls.kind = LimitKind::kPyramidal;
  ls.source = family;
  switch (family) {
    case Family::kA: {
      auto [a1, a2] = bibennett::family_a(mu);
      ls.coupling = make_line_symmetric(
          Family::kA, Loop<Rational>::Spatial(validate(a1, a2, Rational(0))), mu);
      ls.labels = {ClassLabel::kI1, ClassLabel::kI3};
      break;
    }
    case Family::kB: {
      MuSet<Rational> m = bibennett::family_b(mu.mu23(), mu.mu34());
      ls.coupling = make_line_symmetric(
          Family::kB, Loop<Rational>::Spatial(validate(d.a1, d.a2, Rational(0))), m);
      ls.labels = {ClassLabel::kI1, ClassLabel::kI2};
      break;
    }
    case Family::kC:
      ls.coupling = family_c(validate(d.a1, d.a2, Rational(0)), mu.mu14(),
                             mu.mu12(), s, branch);
      ls.labels = {ClassLabel::kI2};
      break;
    default:
      throw Error(ErrorKind::kPrecondition, "expected family A, B or C");
  }
  return ls;
}

Octahedron octahedron(const CoupledPose& cp) {
  Octahedron o;
  o.apex = cp.pose.F(0);
  o.hat_apex = cp.hat_axis(0).F;
  o.quad = cp.quad;
  return o;
}

namespace {

// The three pairs of opposite octahedron vertices.
std::array<std::array<Vec3<double>, 2>, 3> opposite_pairs(const Octahedron& o) {
  return {{{o.apex, o.hat_apex}, {o.quad[0], o.quad[2]}, {o.quad[1], o.quad[3]}}};
}

// Spherical side lengths around a vertex with cyclically ordered neighbors.
std::array<double, 4> sides_at(const Vec3<double>& x,
                               const std::array<Vec3<double>, 4>& nb) {
  std::array<double, 4> s{};
  for (int i = 0; i < 4; ++i) {
    Vec3<double> u = normalized(nb[i] - x), w = normalized(nb[(i + 1) % 4] - x);
    s[i] = std::acos(std::clamp(dot(u, w), -1.0, 1.0));
  }
  return s;
}

double v_hedral(const std::array<double, 4>& s) {
  return std::max(std::fabs(s[0] - s[2]), std::fabs(s[1] - s[3]));
}

double anti_v_hedral(const std::array<double, 4>& s) {
  return std::max(std::fabs(s[0] + s[2] - M_PI), std::fabs(s[1] + s[3] - M_PI));
}

// Each prism has parallel edges; returns the shared edge direction of the
// partner and writes the worst deviation.
Vec3<double> prism_edges(const CoupledPose& cp, double* res) {
  Vec3<double> x = normalized(cp.pose.r(0));
  Vec3<double> y = normalized(cp.hat_axis(0).r);
  double m = 0.0;
  for (int v = 0; v < 4; ++v) {
    m = std::max(m, norm(cross(x, normalized(cp.own_axis(v).r))));
    m = std::max(m, norm(cross(y, normalized(cp.hat_axis(v).r))));
  }
  *res = m;
  return y;
}

}  // namespace

double common_line_residual(const Octahedron& o) {
  Line<double> l = isogram_axis(o.quad);
  return norm(halfturn_point(l, o.apex) - o.hat_apex);
}

double plane_symmetry_residual(const Octahedron& o) {
  auto pairs = opposite_pairs(o);
  double best = std::numeric_limits<double>::infinity();
  // Mirror plane: bisector of pair i, which must also swap pair j and contain
  // the remaining pair.
  for (int i = 0; i < 3; ++i) {
    Vec3<double> n = pairs[i][1] - pairs[i][0];
    if (norm(n) <= 1e-12) continue;
    n = normalized(n);
    Vec3<double> mid = (pairs[i][0] + pairs[i][1]) * 0.5;
    auto reflect = [&](const Vec3<double>& x) {
      return x - n * (2.0 * dot(x - mid, n));
    };
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      int k = 3 - i - j;
      double r = std::max({norm(reflect(pairs[j][0]) - pairs[j][1]),
                           std::fabs(dot(pairs[k][0] - mid, n)),
                           std::fabs(dot(pairs[k][1] - mid, n))});
      best = std::min(best, r);
    }
  }
  return best;
}

double voss_residual(const Octahedron& o) {
  const SkewQuad<double>& q = o.quad;
  std::array<double, 4> at_apex = sides_at(o.apex, {q[0], q[1], q[2], q[3]});
  std::array<double, 4> at_hat = sides_at(o.hat_apex, {q[0], q[1], q[2], q[3]});
  std::array<std::array<double, 4>, 4> at_p;
  for (int v = 0; v < 4; ++v) {
    at_p[v] = sides_at(q[v], {q[wrap(v - 1)], o.apex, q[wrap(v + 1)], o.hat_apex});
  }
  // Pair 0: apices, pair 1: P14/P23, pair 2: P12/P34.
  std::array<std::array<const std::array<double, 4>*, 2>, 3> pair_sides = {
      {{&at_apex, &at_hat}, {&at_p[0], &at_p[2]}, {&at_p[1], &at_p[3]}}};
  double best = std::numeric_limits<double>::infinity();
  for (int anti = 0; anti < 3; ++anti) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
      for (const auto* s : pair_sides[i])
        r = std::max(r, i == anti ? anti_v_hedral(*s) : v_hedral(*s));
    best = std::min(best, r);
  }
  return best;
}

std::vector<LabelCheck> verify_labels(const LimitStructure& ls, double tau,
                                      double tol) {
  BiBennett<double> b = to_double(ls.coupling);
  CoupledPose cp = coupled_pose(b, tau);
  std::vector<LabelCheck> out;
  bool prismatic = ls.kind != LimitKind::kPyramidal;
  double par = 0.0;
  Vec3<double> x = normalized(cp.pose.r(0));
  Vec3<double> y = x;
  if (prismatic) y = prism_edges(cp, &par);
  const SkewQuad<double>& q = cp.quad;
  double coplanar = std::fabs(orientation_det(q)) /
                    (1.0 + norm2(q[1] - q[0]) * norm(q[2] - q[0]));
  auto iso = isogram_residuals(q);
  double isogram = std::max(std::fabs(iso[0]), std::fabs(iso[1]));
  double parallelogram = norm((q[1] - q[0]) - (q[2] - q[3]));
  for (ClassLabel c : ls.labels) {
    LabelCheck lc{c, false, 0.0};
    switch (c) {
      case ClassLabel::kIII1: {
        // Common symmetry line of the vertices that also carries the edges of
        // one prism onto the edges of the other.
        Line<double> l = isogram_axis(q);
        double r = isogram;
        for (int v = 0; v < 4; ++v) {
          r = std::max(r, norm(halfturn_point(l, q[v]) - q[wrap(v + 2)]));
        }
        r = std::max(r, norm(cross(halfturn_vector(l, x), y)));
        lc.residual = std::max(r, par);
        break;
      }
      case ClassLabel::kIII2ii: {
        // Coplanar anti-parallelogram whose symmetry plane is parallel to the
        // edges of both prisms.
        Line<double> l = symmetry_line(q);
        Vec3<double> n = cross(q[2] - q[0], q[3] - q[1]);
        if (norm(n) <= 1e-12) n = cross(q[1] - q[0], q[3] - q[0]);
        Vec3<double> m = normalized(cross(l.dir, n));
        double r = std::max({coplanar, isogram, par, std::fabs(dot(m, x)),
                             std::fabs(dot(m, y))});
        lc.residual = parallelogram > 1e-6 ? r : std::numeric_limits<double>::infinity();
        break;
      }
      case ClassLabel::kIII3: {
        CertificateReport rep = isogonal_certificate(b, tau, tol);
        lc.residual = std::max(rep.max_zero_residual(), par);
        break;
      }
      case ClassLabel::kIII4ii:
        lc.residual = std::max({coplanar, parallelogram, par});
        break;
      case ClassLabel::kI1:
        lc.residual = common_line_residual(octahedron(cp));
        break;
      case ClassLabel::kI2:
        lc.residual = plane_symmetry_residual(octahedron(cp));
        break;
      case ClassLabel::kI3:
        lc.residual = voss_residual(octahedron(cp));
        break;
      default:
        lc.residual = std::numeric_limits<double>::infinity();
        break;
    }
    lc.holds = lc.residual <= tol;
    out.push_back(lc);
  }
  return out;
}

}  // namespace bibennett
