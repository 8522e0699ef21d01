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

#include "bibennett/properties.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

namespace bibennett {

void CertificateReport::expect_zero(const std::string& label, double value,
                                    double tol) {
  residuals.push_back(
      Residual{label, value, tol, std::isfinite(value) && std::fabs(value) <= tol});
}

void CertificateReport::expect_nonzero(const std::string& label, double value,
                                       double tol) {
  residuals.push_back(
      Residual{label, value, tol, std::isfinite(value) && std::fabs(value) > tol, true});
}

void CertificateReport::merge(const CertificateReport& other) {
  residuals.insert(residuals.end(), other.residuals.begin(),
                   other.residuals.end());
  for (const auto& n : other.notes)
    if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
}

bool CertificateReport::verdict() const {
  if (residuals.empty()) return false;
  return std::all_of(residuals.begin(), residuals.end(),
                     [](const Residual& r) { return r.pass; });
}

double CertificateReport::max_zero_residual() const {
  double m = 0.0;
  for (const auto& r : residuals) {
    if (r.negative) continue;
    m = std::max(m, std::fabs(r.value));
  }
  return m;
}

namespace {

std::string vertex_label(int v) { return std::string("P") + axis_name(v); }

double cosine(const Vec3<double>& a, const Vec3<double>& b) {
  return dot(a, b) / (norm(a) * norm(b));
}

// Direction from p toward an axis anchor, falling back to the axis direction
// when the anchor coincides with p.
Vec3<double> toward(const Vec3<double>& p, const Axis<double>& ax) {
  Vec3<double> d = ax.F - p;
  if (norm(d) <= 1e-12) return normalized(ax.r);
  return normalized(d);
}

double max_dist(const std::vector<Vec3<double>>& a,
                const std::vector<Vec3<double>>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, norm(a[i] - b[i]));
  return m;
}

// Best rotation taking us[i] to ws[i] built from the first two vectors;
// returns the max residual over all four.
double rotation_fit_residual(const std::array<Vec3<double>, 4>& us,
                             const std::array<Vec3<double>, 4>& ws) {
  auto frame_of = [](const Vec3<double>& a, const Vec3<double>& b) {
    Vec3<double> e1 = normalized(a);
    Vec3<double> e2 = normalized(b - e1 * dot(b, e1));
    return Mat3<double>::FromColumns(e1, e2, cross(e1, e2));
  };
  Mat3<double> rot = frame_of(ws[0], ws[1]) * frame_of(us[0], us[1]).transposed();
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, norm(rot * us[i] - ws[i]));
  return m;
}

}  // namespace

CertificateReport isogonal_certificate(const BiBennett<double>& b, double tau,
                                       double tol) {
  CertificateReport rep;
  rep.name = "isogonal";
  Pose<double> pose = b.loop.pose(tau);
  SkewQuad<double> q = points_on_axes(pose, b.mu);
  for (int v = 0; v < 4; ++v) {
    int a = wrap(v - 1), c = wrap(v + 1), o = wrap(v + 2);
    double x1 = cosine(q[a] - q[v], pose.r(v));
    double y1 = cosine(q[a] - q[o], pose.r(o));
    double x2 = cosine(q[c] - q[v], pose.r(v));
    double y2 = cosine(q[c] - q[o], pose.r(o));
    std::string at = " at " + vertex_label(v);
    rep.expect_zero("iso1" + at, x1 * x1 - y1 * y1, tol);
    rep.expect_zero("iso2" + at, x2 * x2 - y2 * y2, tol);
    rep.expect_zero("iso3" + at, x1 * y2 - y1 * x2, tol);
  }
  return rep;
}

CertificateReport deltoidal_certificate(const BiBennett<double>& b, double tau,
                                        double tol) {
  CertificateReport rep;
  rep.name = "deltoidal";
  Pose<double> pose = b.loop.pose(tau);
  SkewQuad<double> q = points_on_axes(pose, b.mu);
  for (int v = 0; v < 4; ++v) {
    int a = wrap(v - 1), c = wrap(v + 1), o = wrap(v + 2);
    std::string at = " at " + vertex_label(v);
    rep.expect_zero("delto1" + at,
                    cosine(q[a] - q[v], pose.r(v)) - cosine(q[c] - q[o], pose.r(o)),
                    tol);
    rep.expect_zero("delto2" + at,
                    cosine(q[c] - q[v], pose.r(v)) - cosine(q[a] - q[o], pose.r(o)),
                    tol);
  }
  return rep;
}

bool isogonal_exact(const BiBennett<Rational>& b, const Rational& tau) {
  Pose<Rational> pose = b.loop.pose(tau);
  SkewQuad<Rational> q = points_on_axes(pose, b.mu);
  for (int v = 0; v < 4; ++v)
    for (const Rational& x : isogonal_numerators(pose, q, v))
      if (!x.is_zero()) return false;
  return true;
}

bool deltoidal_exact(const BiBennett<Rational>& b, const Rational& tau) {
  Pose<Rational> pose = b.loop.pose(tau);
  SkewQuad<Rational> q = points_on_axes(pose, b.mu);
  for (int v = 0; v < 4; ++v)
    for (const Rational& x : deltoidal_numerators(pose, q, v))
      if (!x.is_zero()) return false;
  return true;
}

Vec3<double> hat_point(const SkewQuad<double>& p, const SkewQuad<double>& pbar,
                       const Vec3<double>& fbar, HatScheme scheme, int v) {
  int a = wrap(v - 1), c = wrap(v + 1), o = wrap(v + 2);
  auto basis = [&](const SkewQuad<double>& x) {
    if (scheme == HatScheme::kAt23) {
      return std::array<Vec3<double>, 3>{x[c] - x[v], x[a] - x[v], x[o] - x[c]};
    }
    return std::array<Vec3<double>, 3>{x[v] - x[c], x[o] - x[c], x[a] - x[v]};
  };
  auto bb = basis(pbar);
  Vec3<double> coef = solve3(bb[0], bb[1], bb[2], fbar - pbar[v]);
  auto pb = basis(p);
  return p[v] + pb[0] * coef[0] + pb[1] * coef[1] + pb[2] * coef[2];
}

namespace {

struct AdjacentData {
  Vec3<double> p0, p1, f0, f1, fh0, fh1, prev, opp;
  bool transferred = true;  // false: the quads are coplanar, delta used
};

AdjacentData adjacent_data(const CoupledPose& cp, int v) {
  int c = wrap(v + 1);
  AdjacentData d;
  d.p0 = cp.quad[v];
  d.p1 = cp.quad[c];
  d.f0 = cp.pose.F(v);
  d.f1 = cp.pose.F(c);
  try {
    d.fh0 = hat_point(cp.quad, cp.bar_quad, cp.bar_pose.F(v), HatScheme::kAt23, v);
    d.fh1 = hat_point(cp.quad, cp.bar_quad, cp.bar_pose.F(c), HatScheme::kAt34, v);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kDegenerate) throw;
    d.transferred = false;
    d.fh0 = cp.delta.apply_point(cp.bar_pose.F(v));
    d.fh1 = cp.delta.apply_point(cp.bar_pose.F(c));
  }
  d.prev = cp.quad[wrap(v - 1)];
  d.opp = cp.quad[wrap(v + 2)];
  return d;
}

void require_family_c(const BiBennett<double>& b) {
  if (b.family != Family::kC) {
    throw Error(ErrorKind::kPrecondition,
                "half-turn certificate applies to family C couplings only");
  }
}

}  // namespace

HalfTurn vertex_halfturn(const CoupledPose& cp, const BiBennett<double>& b,
                         int v) {
  require_family_c(b);
  AdjacentData d = adjacent_data(cp, v);
  HalfTurn h;
  // A zero offset puts F on P and leaves the fit underdetermined; then unit
  // points along the axes stand in, with the sign left to the fit.
  int c = wrap(v + 1);
  double scale = 1.0 + norm(d.p1 - d.p0);
  bool own_flat = norm(d.f0 - d.p0) < 1e-9 * scale;
  bool hat_flat = norm(d.fh0 - d.p0) < 1e-9 * scale;
  std::optional<Error> last;
  for (int sa : {1, -1}) {
    for (int sb : {1, -1}) {
      SkewQuad<double> src{d.p0, d.p1, d.f0, d.fh0}, dst{d.p1, d.p0, d.fh1, d.f1};
      if (own_flat) {
        src[2] = d.p0 + normalized(cp.pose.r(v));
        dst[2] = d.p1 + normalized(cp.hat_axis(c).r) * static_cast<double>(sa);
      }
      if (hat_flat) {
        src[3] = d.p0 + normalized(cp.hat_axis(v).r);
        dst[3] = d.p1 + normalized(cp.pose.r(c)) * static_cast<double>(sb);
      }
      try {
        h.motion = align_isometry(src, dst, 1e-7);
        if (h.motion.orientation == 1) {
          last.reset();
          break;
        }
        last = Error(ErrorKind::kNotIsometric, "only an opposite isometry fits");
      } catch (const Error& e) {
        last = e;
      }
      if (!hat_flat) break;
    }
    if (!last || !own_flat) break;
  }
  if (last) throw *last;
  Mat3<double> rot = h.motion.transform.rotation();
  // R + I = 2 u u^T for a half-turn about u.
  Vec3<double> best;
  for (int j = 0; j < 3; ++j) {
    Vec3<double> col(rot[0][j], rot[1][j], rot[2][j]);
    col[j] += 1.0;
    if (norm2(col) > norm2(best)) best = col;
  }
  h.axis = Line<double>{(d.p0 + d.p1) * 0.5, normalized(best)};
  std::vector<Vec3<double>> pts{d.p0, d.p1, d.f0, d.fh0, d.prev, d.opp};
  std::vector<Vec3<double>> back;
  for (const auto& x : pts)
    back.push_back(h.motion.apply_point(h.motion.apply_point(x)));
  h.involution_residual = max_dist(back, pts);
  return h;
}

CertificateReport halfturn_certificate(const CoupledPose& cp,
                                       const BiBennett<double>& b, int v,
                                       double tol) {
  require_family_c(b);
  CertificateReport rep;
  rep.name = "halfturn";
  int a = wrap(v - 1), c = wrap(v + 1), o = wrap(v + 2);
  const SkewQuad<double>& p = cp.quad;
  const SkewQuad<double>& pb = cp.bar_quad;
  const Pose<double>& bp = cp.bar_pose;
  std::string at = " at " + vertex_label(v) + "/" + vertex_label(c);

  // Step 1: angles within single links.
  rep.expect_zero("gleich1" + at,
                  dot(p[c] - p[v], cp.pose.F(v) - p[v]) -
                      dot(pb[v] - pb[c], bp.F(c) - pb[c]),
                  tol);
  rep.expect_zero("gleich2" + at,
                  dot(p[a] - p[v], cp.pose.F(v) - p[v]) -
                      dot(pb[o] - pb[c], bp.F(c) - pb[c]),
                  tol);
  rep.expect_zero("gleich3" + at,
                  dot(p[v] - p[c], cp.pose.F(c) - p[c]) -
                      dot(pb[c] - pb[v], bp.F(v) - pb[v]),
                  tol);
  rep.expect_zero("gleich4" + at,
                  dot(p[o] - p[c], cp.pose.F(c) - p[c]) -
                      dot(pb[a] - pb[v], bp.F(v) - pb[v]),
                  tol);

  // Step 2: the diagonal angles, with the partner anchors transferred.
  AdjacentData d = adjacent_data(cp, v);
  if (d.transferred) {
    rep.expect_zero("hat transfer" + at,
                    std::max(norm(d.fh0 - cp.delta.apply_point(bp.F(v))),
                             norm(d.fh1 - cp.delta.apply_point(bp.F(c)))),
                    tol);
  } else {
    rep.notes.push_back("coplanar quad: partner anchors taken from the coupling isometry");
  }
  rep.expect_zero("diag" + at,
                  dot(d.f0 - d.p0, d.fh0 - d.p0) - dot(d.f1 - d.p1, d.fh1 - d.p1),
                  tol);

  // Step 3: same orientation of the two tetrahedra.
  rep.expect_zero("orientation" + at,
                  det3(d.p1 - d.p0, d.f0 - d.p0, d.fh0 - d.p0) -
                      det3(d.p0 - d.p1, d.fh1 - d.p1, d.f1 - d.p1),
                  tol);

  HalfTurn h;
  try {
    h = vertex_halfturn(cp, b, v);
  } catch (const Error& e) {
    rep.expect_zero("rho exists" + at, std::numeric_limits<double>::infinity(),
                    tol);
    return rep;
  }
  rep.expect_zero("rho exists" + at,
                  std::max({norm(h.motion.apply_point(d.p0) - d.p1),
                            norm(h.motion.apply_point(d.f0) - d.fh1),
                            norm(h.motion.apply_point(d.fh0) - d.f1)}),
                  tol);
  rep.expect_zero("rho direct" + at, h.motion.orientation - 1.0, 0.0);
  rep.expect_zero("rho involution" + at, h.involution_residual, 1e-12);

  // The half-turn does not carry P(v-1) to P(v+2); the two points are mirror
  // images in the plane through P(v+1), F(v+1) and its partner anchor.
  rep.expect_nonzero("not angle equality" + at,
                     dot(d.prev - d.p0, d.p1 - d.p0) - dot(d.opp - d.p1, d.p0 - d.p1),
                     1e-6);
  Vec3<double> image = h.motion.apply_point(d.prev);
  rep.expect_nonzero("not rho(prev) = opp" + at, norm(image - d.opp), 1e-6);
  // The plane holds both axes through P(v+1); their directions stay defined
  // when an offset is zero and F coincides with P.
  Vec3<double> n = normalized(cross(cp.pose.r(c), cp.hat_axis(c).r));
  Vec3<double> mirrored = image - n * (2.0 * dot(image - d.p1, n));
  rep.expect_zero("reflection" + at, norm(mirrored - d.opp), tol);
  return rep;
}

CertificateReport halfturn_certificate(const BiBennett<double>& b, double tau,
                                       double tol) {
  require_family_c(b);
  CoupledPose cp = coupled_pose(b, tau);
  CertificateReport rep;
  rep.name = "halfturn";
  for (int v = 0; v < 4; ++v) rep.merge(halfturn_certificate(cp, b, v, tol));
  return rep;
}

std::array<Vec3<double>, 4> vertex_directions(const CoupledPose& cp, int v) {
  const Vec3<double>& p = cp.quad[v];
  return {normalized(cp.quad[wrap(v - 1)] - p), toward(p, cp.own_axis(v)),
          normalized(cp.quad[wrap(v + 1)] - p), toward(p, cp.hat_axis(v))};
}

namespace {

std::array<double, 4> sides_of(const std::array<Vec3<double>, 4>& u) {
  std::array<double, 4> s{};
  for (int i = 0; i < 4; ++i) {
    s[i] = std::acos(std::clamp(dot(u[i], u[(i + 1) % 4]), -1.0, 1.0));
  }
  std::sort(s.begin(), s.end());
  return s;
}

// Slots 1 and 3 of vertex_directions whose anchor sits on P; their sign is
// not determined by the geometry.
std::vector<int> free_slots(const CoupledPose& cp, int v) {
  std::vector<int> out;
  const Vec3<double>& p = cp.quad[v];
  if (norm(cp.own_axis(v).F - p) <= 1e-12) out.push_back(1);
  if (norm(cp.hat_axis(v).F - p) <= 1e-12) out.push_back(3);
  return out;
}

// Smallest sorted-side mismatch over the sign choices of free slots.
double adjacent_side_mismatch(const CoupledPose& cp, int v, int c) {
  auto u = vertex_directions(cp, v), w = vertex_directions(cp, c);
  std::vector<int> fu = free_slots(cp, v), fw = free_slots(cp, c);
  size_t nu = fu.size(), nw = fw.size();
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 0; mask < (1u << (nu + nw)); ++mask) {
    auto x = u, y = w;
    for (size_t i = 0; i < nu; ++i)
      if (mask >> i & 1u) x[fu[i]] = -x[fu[i]];
    for (size_t i = 0; i < nw; ++i)
      if (mask >> (nu + i) & 1u) y[fw[i]] = -y[fw[i]];
    auto a = sides_of(x), b = sides_of(y);
    double diff = 0.0;
    for (int i = 0; i < 4; ++i) diff = std::max(diff, std::fabs(a[i] - b[i]));
    best = std::min(best, diff);
  }
  return best;
}

}  // namespace

std::array<double, 4> indicatrix_sides(const CoupledPose& cp, int v) {
  auto u = vertex_directions(cp, v);
  std::array<double, 4> s{};
  for (int i = 0; i < 4; ++i) {
    s[i] = std::acos(std::clamp(dot(u[i], u[(i + 1) % 4]), -1.0, 1.0));
  }
  return s;
}

CertificateReport indicatrix_relation(const BiBennett<double>& b, double tau,
                                      double tol) {
  require_family_c(b);
  CoupledPose cp = coupled_pose(b, tau);
  CertificateReport rep;
  rep.name = "indicatrix";
  for (int v = 0; v < 2; ++v) {
    // Joint axes are unoriented lines; the rotation carries each line of one
    // star onto the matching line of the other with reversed direction.
    auto u = vertex_directions(cp, v);
    auto w = vertex_directions(cp, v + 2);
    for (auto& x : w) x = -x;
    rep.expect_zero("opposite rotation " + vertex_label(v) + "/" +
                        vertex_label(v + 2),
                    rotation_fit_residual(u, w), tol);
  }
  for (int v = 0; v < 4; ++v) {
    int c = wrap(v + 1);
    std::string at = " " + vertex_label(v) + "/" + vertex_label(c);
    rep.expect_zero("adjacent sides" + at, adjacent_side_mismatch(cp, v, c), tol);
    // Different modes: no rigid rotation matches the two direction sets
    // under any cyclic relabeling.
    auto u = vertex_directions(cp, v), w = vertex_directions(cp, c);
    double best = std::numeric_limits<double>::infinity();
    for (int sh = 0; sh < 4; ++sh)
      for (int rev = 0; rev < 2; ++rev) {
        std::array<Vec3<double>, 4> z;
        for (int i = 0; i < 4; ++i) z[i] = w[rev ? wrap(sh - i) : wrap(sh + i)];
        best = std::min(best, rotation_fit_residual(u, z));
      }
    rep.expect_nonzero("not congruent" + at, best, 1e-6);
  }
  return rep;
}

}  // namespace bibennett
