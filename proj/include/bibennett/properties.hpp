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

// Certificates for the symmetry properties of coupled Bennett pairs.
//
// Certificates report failure as data. Exceptions are reserved for malformed
// input (wrong family, missing partner).

#ifndef BIBENNETT_PROPERTIES_HPP_
#define BIBENNETT_PROPERTIES_HPP_

#include <array>
#include <string>
#include <vector>

#include "bibennett/families.hpp"

namespace bibennett {

struct Residual {
  std::string label;
  double value = 0.0;
  double tol = 0.0;
  bool pass = false;
  bool negative = false;  // an expect_nonzero check
};

struct CertificateReport {
  std::string name;
  std::vector<Residual> residuals;
  std::vector<std::string> notes;

  // Adds |value| <= tol.
  void expect_zero(const std::string& label, double value, double tol);
  // Adds |value| > tol; used for the negative checks.
  void expect_nonzero(const std::string& label, double value, double tol);
  void merge(const CertificateReport& other);
  bool verdict() const;
  // Largest residual among the zero checks.
  double max_zero_residual() const;
};

inline int wrap(int v) { return ((v % 4) + 4) % 4; }

// Isogonality at vertex v, denominators cleared with the isogram lengths:
// L1 = |P(v-1) P(v)| = |P(v+1) P(v+2)|, L2 = |P(v-1) P(v+2)| = |P(v) P(v+1)|.
// Entries: squared pair 1, squared pair 2, sign consistency.
template <class S>
std::array<S, 3> isogonal_numerators(const Pose<S>& pose, const SkewQuad<S>& q,
                                     int v) {
  int a = wrap(v - 1), b = wrap(v + 1), o = wrap(v + 2);
  const Vec3<S>& rv = pose.r(v);
  const Vec3<S>& ro = pose.r(o);
  S x1 = dot(q[a] - q[v], rv), y1 = dot(q[a] - q[o], ro);
  S x2 = dot(q[b] - q[v], rv), y2 = dot(q[b] - q[o], ro);
  S l1 = dist2(q[a], q[v]), l2 = dist2(q[a], q[o]);
  S l3 = dist2(q[b], q[v]), l4 = dist2(q[b], q[o]);
  return {x1 * x1 * l2 - y1 * y1 * l1, x2 * x2 * l4 - y2 * y2 * l3,
          x1 * y2 * l2 - y1 * x2 * l1};
}

// Deltoidality at vertex v with the isogram lengths cleared (one numerator
// per adjacent pair).
template <class S>
std::array<S, 2> deltoidal_numerators(const Pose<S>& pose, const SkewQuad<S>& q,
                                      int v) {
  int a = wrap(v - 1), b = wrap(v + 1), o = wrap(v + 2);
  const Vec3<S>& rv = pose.r(v);
  const Vec3<S>& ro = pose.r(o);
  return {dot(q[a] - q[v], rv) - dot(q[b] - q[o], ro),
          dot(q[b] - q[v], rv) - dot(q[a] - q[o], ro)};
}

// The closed-form deltoid numerators at vertex 23 in the design and offsets.
template <class S>
std::array<S, 2> deltoid_closed_form(const S& a1, const S& a2,
                                     const MuSet<S>& m) {
  return {(m.mu14() - m.mu12() - m.mu23() + m.mu34()) * a2 + m.mu14() +
              m.mu12() - m.mu23() - m.mu34(),
          (m.mu14() + m.mu12() - m.mu23() - m.mu34()) * a1 + m.mu14() -
              m.mu12() - m.mu23() + m.mu34()};
}

CertificateReport isogonal_certificate(const BiBennett<double>& b, double tau,
                                       double tol = 1e-10);
CertificateReport deltoidal_certificate(const BiBennett<double>& b, double tau,
                                        double tol = 1e-10);

// Exact versions for rational instances; every numerator must vanish.
bool isogonal_exact(const BiBennett<Rational>& b, const Rational& tau);
bool deltoidal_exact(const BiBennett<Rational>& b, const Rational& tau);

// Two bases for transferring a point of the barred tetrahedron onto the
// unbarred one. kAt23 expands around P(v), kAt34 around P(v) for the
// neighbor v+1.
enum class HatScheme { kAt23, kAt34 };

Vec3<double> hat_point(const SkewQuad<double>& p, const SkewQuad<double>& pbar,
                       const Vec3<double>& fbar, HatScheme scheme,
                       int v = kAxis23);

struct HalfTurn {
  RigidMotion<double> motion;
  Line<double> axis;
  double involution_residual = 0.0;  // max |rho(rho(x)) - x| on the test points
};

// Adjacent-vertex half-turn between P(v) and P(v+1) of a family C coupling.
HalfTurn vertex_halfturn(const CoupledPose& cp, const BiBennett<double>& b,
                         int v = kAxis23);

CertificateReport halfturn_certificate(const BiBennett<double>& b, double tau,
                                       double tol = 1e-9);
CertificateReport halfturn_certificate(const CoupledPose& cp,
                                       const BiBennett<double>& b, int v,
                                       double tol = 1e-9);

// Unit directions of the spherical 4R-loop at P(v), in cyclic order:
// toward P(v-1), own axis, toward P(v+1), partner axis.
std::array<Vec3<double>, 4> vertex_directions(const CoupledPose& cp, int v);

// Spherical side lengths of the indicatrix at P(v).
std::array<double, 4> indicatrix_sides(const CoupledPose& cp, int v);

CertificateReport indicatrix_relation(const BiBennett<double>& b, double tau,
                                      double tol = 1e-9);

}  // namespace bibennett

#endif  // BIBENNETT_PROPERTIES_HPP_
