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

// Exact verification that no flexible plane-symmetric pair of Bennett loops
// exists: the four points P(i) on the axes cannot stay coplanar.
//
// With k = 1 and the reduced frame, N(tau) = -det[den_i ; den_i * P_i] is a
// quartic in tau:
//   N = (a1-a2)^2 c4 tau^4 - a1 a2 (a1-a2) c3 tau^3 + c2 tau^2
//       - a1 a2 (a1+a2) c1 tau + (a1+a2)^2 c0.
// N differs from the plain coplanarity determinant by the factor
// -(1+tau^2) D (1+a1^2)^2 (1+a2^2)^2, which never vanishes.

#ifndef BIBENNETT_APPENDIX_HPP_
#define BIBENNETT_APPENDIX_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "bibennett/bennett.hpp"
#include "bibennett/families.hpp"
#include "bibennett/identity.hpp"
#include "bibennett/poly.hpp"
#include "bibennett/properties.hpp"
#include "bibennett/rational.hpp"

namespace bibennett {

namespace appendix_detail {

template <class R>
R det4(const std::array<std::array<R, 4>, 4>& m) {
  // Laplace expansion along the first two rows.
  auto minor2 = [&m](int r0, int r1, int c0, int c1) {
    return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
  };
  R d = minor2(0, 1, 0, 1) * minor2(2, 3, 2, 3);
  d -= minor2(0, 1, 0, 2) * minor2(2, 3, 1, 3);
  d += minor2(0, 1, 0, 3) * minor2(2, 3, 1, 2);
  d += minor2(0, 1, 1, 2) * minor2(2, 3, 0, 3);
  d -= minor2(0, 1, 1, 3) * minor2(2, 3, 0, 2);
  d += minor2(0, 1, 2, 3) * minor2(2, 3, 0, 1);
  return d;
}

// Lagrange weights mapping N at tau = 1..5 to its coefficients.
const std::array<std::array<Rational, 5>, 5>& quartic_weights();

}  // namespace appendix_detail

// N at a fixed tau, over any ring.
template <class R>
R coplanarity_numerator(const R& a1, const R& a2, const std::array<R, 4>& mu,
                        const R& tau) {
  ReducedFrame<R> f = reduced_frame(a1, a2, R(1), tau);
  std::array<std::array<R, 4>, 4> m;
  for (int j = 0; j < 4; ++j) {
    m[0][j] = f.den[j];
    for (int i = 0; i < 3; ++i) m[i + 1][j] = f.F[j][i] + mu[j] * f.r[j][i];
  }
  return -appendix_detail::det4(m);
}

// Raw tau-coefficients of N, low to high, before the structural factors are
// divided out.
template <class R>
std::array<R, 5> coplanarity_raw(const R& a1, const R& a2,
                                 const std::array<R, 4>& mu) {
  std::array<R, 5> values;
  for (int j = 0; j < 5; ++j) {
    values[j] = coplanarity_numerator(a1, a2, mu, ring_const<R>(Rational(j + 1)));
  }
  const auto& w = appendix_detail::quartic_weights();
  std::array<R, 5> c;
  for (int i = 0; i < 5; ++i) {
    c[i] = R(0);
    for (int j = 0; j < 5; ++j) c[i] += ring_const<R>(w[i][j]) * values[j];
  }
  return c;
}

struct CoplanarityExpansion {
  std::array<Rational, 5> raw;  // coefficients of N
  std::array<Rational, 5> c;    // c0..c4 with the structural factors removed
};

// Throws kPrecondition when a1 a2 (a1 - a2)(a1 + a2) = 0 and kDegreeBound if
// N is not a quartic at a sixth node.
CoplanarityExpansion coplanarity_coeffs(const Rational& a1, const Rational& a2,
                                        const MuSet<Rational>& mu);

// Helper polynomials of the case analysis.
Rational appendix_f1(const Rational& a1, const Rational& a2,
                     const Rational& mu14, const Rational& mu23);
Rational appendix_f2(const Rational& a1, const Rational& a2,
                     const Rational& mu14, const Rational& mu23);
Rational appendix_g1(const Rational& a1, const Rational& a2);
Rational appendix_g2(const Rational& a1, const Rational& a2);
Rational appendix_g3(const Rational& a1, const Rational& a2);

// The two single-parameter cases. Case 3: mu14 = mu12 = m, f2 = 0 solved for
// mu23 (then mu34 = mu23). Case 4: mu23 = mu12 = m, f1 = 0 solved for mu14
// (then mu34 = mu14).
enum class ReducedCase { kCase3, kCase4 };

MuSet<Rational> reduced_case_mu(ReducedCase which, const Rational& a1,
                                const Rational& a2, const Rational& m);

// c_i m^2 (a1^2+1)^2 (a2^2+1) in case 3 and c_i m^2 (a1^2+1) (a2^2+1)^2 in
// case 4; polynomial in (a1, a2, m). Only i = 0 and i = 2 are used.
Rational reduced_case_numerator(ReducedCase which, int i, const Rational& a1,
                                const Rational& a2, const Rational& m);

// The same numerators as quartics in m, low to high.
UPoly reduced_case_poly(ReducedCase which, int i, const Rational& a1,
                        const Rational& a2);

// Sylvester resultant in m of the c0 and c2 numerators.
Rational reduced_case_resultant(ReducedCase which, const Rational& a1,
                                const Rational& a2);

// 2^36 a1^16 a2^8 (a1^2+1)^8 (a2^2+1)^4 (a1^2-a2^2)^4 g1^4 g2^4 g3^4.
Rational resultant_target(const Rational& a1, const Rational& a2);

// The case 3 c0 numerator restricted to g2 = 0 or g3 = 0, cleared of the
// positive denominator. g2: a2^2 = x/(x+2) with x = a1^2, result in (x, w).
// g3: a2^2 = (x-1)/(x+3) with x = 1 + u, result in (u, w). w = m^2.
// coeffs[l] is the polynomial coefficient of w^l.
struct RestrictedC0 {
  std::vector<UPoly> coeffs;
};
RestrictedC0 restricted_c0_g2();
RestrictedC0 restricted_c0_g3();

struct NonexistenceOptions {
  uint64_t seed = 7;
  int random_trials = 1000;    // f1 - f2 identity samples
  int resultant_points = 6;    // random (a1, a2) for the resultant factorization
  int grid_n = 100;            // per-axis grid for the sampled sign checks
};

// Runs the whole case analysis. Every label starts with its argument type:
// "identity", "structural", "definite-form", "exact-sample" or "grid".
CertificateReport verify_nonexistence(const NonexistenceOptions& opt = {});

}  // namespace bibennett

#endif  // BIBENNETT_APPENDIX_HPP_
