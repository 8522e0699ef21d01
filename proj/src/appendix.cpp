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

#include "bibennett/appendix.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "bibennett/error.hpp"

namespace bibennett {

namespace appendix_detail {

const std::array<std::array<Rational, 5>, 5>& quartic_weights() {
  static const auto weights = [] {
    std::array<std::array<Rational, 5>, 5> w;
    std::vector<Rational> xs;
    for (int j = 0; j < 5; ++j) xs.push_back(Rational(j + 1));
    for (int j = 0; j < 5; ++j) {
      std::vector<Rational> ys(5, Rational(0));
      ys[j] = Rational(1);
      UPoly basis = interpolate(xs, ys);
      basis.resize(5, Rational(0));
      for (int i = 0; i < 5; ++i) w[i][j] = basis[i];
    }
    return w;
  }();
  return weights;
}

}  // namespace appendix_detail

namespace {

std::array<Rational, 4> as_array(const MuSet<Rational>& mu) {
  return {mu[0], mu[1], mu[2], mu[3]};
}

template <class S>
S sq(const S& x) {
  return x * x;
}

template <class S>
std::array<S, 4> case_mu(ReducedCase which, const S& a1, const S& a2,
                         const S& m) {
  S one(1);
  S a1s = a1 * a1, a2s = a2 * a2;
  S e = (a1s + one) * (a2s + one);
  if (which == ReducedCase::kCase3) {
    S b = -(a1s * a2s - a1s + S(3) * a2s + one) / (m * e);
    return {m, m, b, b};
  }
  S b = -(a1s * a2s + S(3) * a1s - a2s + one) / (m * e);
  return {b, m, m, b};
}

template <class S>
S case_numerator(ReducedCase which, int i, const S& a1, const S& a2,
                 const S& m) {
  std::array<S, 5> raw = coplanarity_raw(a1, a2, case_mu(which, a1, a2, m));
  S c = (i == 0) ? raw[0] / sq(a1 + a2) : raw[2];
  S one(1);
  S norm = which == ReducedCase::kCase3
               ? sq(a1 * a1 + one) * (a2 * a2 + one)
               : (a1 * a1 + one) * sq(a2 * a2 + one);
  return c * m * m * norm;
}

UPoly upow(const UPoly& p, int e) {
  UPoly r{Rational(1)};
  for (int i = 0; i < e; ++i) r = upoly_mul(r, p);
  return r;
}

// Q(x, y, w) with c0-numerator(case 3) = Q(a1^2, a2^2, m^2); q[i][j][l].
using Lifted = std::vector<std::vector<std::vector<Rational>>>;

constexpr int kLiftX = 4, kLiftY = 3, kLiftW = 2;

Lifted lift_case3_c0() {
  auto square_nodes = [](int n) {
    std::vector<Rational> xs;
    for (int j = 1; j <= n; ++j) xs.push_back(Rational(j * j));
    return xs;
  };
  std::vector<Rational> xn = square_nodes(kLiftX + 1);
  std::vector<Rational> yn = square_nodes(kLiftY + 1);
  std::vector<Rational> wn = square_nodes(kLiftW + 1);
  auto fit = [](const std::vector<Rational>& nodes,
                const std::vector<Rational>& ys, size_t len) {
    UPoly u = interpolate(nodes, ys);
    u.resize(std::max(len, u.size()), Rational(0));
    for (size_t k = len; k < u.size(); ++k) {
      if (!u[k].is_zero()) {
        throw Error(ErrorKind::kDegreeBound, "lifted polynomial degree");
      }
    }
    u.resize(len);
    return u;
  };
  Lifted q(kLiftX + 1, std::vector<std::vector<Rational>>(
                           kLiftY + 1, std::vector<Rational>(kLiftW + 1)));
  // by_xy[ia][ib] = coefficients in w.
  std::vector<std::vector<UPoly>> by_xy(kLiftX + 1,
                                        std::vector<UPoly>(kLiftY + 1));
  for (int ia = 0; ia <= kLiftX; ++ia) {
    for (int ib = 0; ib <= kLiftY; ++ib) {
      std::vector<Rational> ys;
      for (int im = 0; im <= kLiftW; ++im) {
        ys.push_back(case_numerator(ReducedCase::kCase3, 0, Rational(ia + 1),
                                    Rational(ib + 1), Rational(im + 1)));
      }
      by_xy[ia][ib] = fit(wn, ys, kLiftW + 1);
    }
  }
  for (int ia = 0; ia <= kLiftX; ++ia) {
    for (int l = 0; l <= kLiftW; ++l) {
      std::vector<Rational> ys;
      for (int ib = 0; ib <= kLiftY; ++ib) ys.push_back(by_xy[ia][ib][l]);
      UPoly u = fit(yn, ys, kLiftY + 1);
      for (int j = 0; j <= kLiftY; ++j) by_xy[ia][j][l] = u[j];
    }
  }
  for (int j = 0; j <= kLiftY; ++j) {
    for (int l = 0; l <= kLiftW; ++l) {
      std::vector<Rational> ys;
      for (int ia = 0; ia <= kLiftX; ++ia) ys.push_back(by_xy[ia][j][l]);
      UPoly u = fit(xn, ys, kLiftX + 1);
      for (int i = 0; i <= kLiftX; ++i) q[i][j][l] = u[i];
    }
  }
  // Off-node checks catch a wrong degree guess.
  for (auto [a1, a2, m] : {std::array<Rational, 3>{Rational(2, 7), Rational(11, 3),
                                                   Rational(-5, 4)},
                           std::array<Rational, 3>{Rational(13, 5), Rational(3, 8),
                                                   Rational(7, 2)}}) {
    Rational x = a1 * a1, y = a2 * a2, w = m * m, v(0);
    for (int i = 0; i <= kLiftX; ++i)
      for (int j = 0; j <= kLiftY; ++j)
        for (int l = 0; l <= kLiftW; ++l)
          v += q[i][j][l] * x.pow(i) * y.pow(j) * w.pow(l);
    if (!(v == case_numerator(ReducedCase::kCase3, 0, a1, a2, m))) {
      throw Error(ErrorKind::kDegreeBound,
                  "c0 numerator is not a polynomial in the squares");
    }
  }
  return q;
}

// Substitutes y = num(t)/den(t), x = xt(t) and multiplies by den^kLiftY.
RestrictedC0 restrict_lifted(const Lifted& q, const UPoly& xt, const UPoly& num,
                             const UPoly& den) {
  RestrictedC0 r;
  r.coeffs.assign(kLiftW + 1, UPoly{});
  for (int i = 0; i <= kLiftX; ++i) {
    for (int j = 0; j <= kLiftY; ++j) {
      UPoly base = upoly_mul(upoly_mul(upow(xt, i), upow(num, j)),
                             upow(den, kLiftY - j));
      for (int l = 0; l <= kLiftW; ++l) {
        if (q[i][j][l].is_zero()) continue;
        UPoly term = base;
        for (Rational& c : term) c *= q[i][j][l];
        r.coeffs[l] = upoly_add(r.coeffs[l], term);
      }
    }
  }
  for (UPoly& p : r.coeffs) upoly_trim(p);
  return r;
}

bool all_nonnegative(const UPoly& p) {
  return std::all_of(p.begin(), p.end(),
                     [](const Rational& c) { return c.sign() >= 0; });
}

void add_check(CertificateReport& rep, const std::string& label, bool ok) {
  rep.expect_zero(label, ok ? 0.0 : 1.0, 0.0);
}

// Coefficients (w^0, w^1, w^2) of the case 3 c0 numerator at fixed a1, a2 in
// double precision, from samples at m = 1, 2, 3.
std::array<double, 3> c0_in_w(double a1, double a2) {
  std::array<double, 3> v;
  for (int k = 0; k < 3; ++k) {
    v[k] = case_numerator<double>(ReducedCase::kCase3, 0, a1, a2, k + 1.0);
  }
  // Quadratic through (1, v0), (4, v1), (9, v2).
  double d1 = (v[1] - v[0]) / 3.0, d2 = (v[2] - v[1]) / 5.0;
  double h2 = (d2 - d1) / 8.0;
  double h1 = d1 - 5.0 * h2;
  double h0 = v[0] - h1 - h2;
  return {h0, h1, h2};
}

}  // namespace

CoplanarityExpansion coplanarity_coeffs(const Rational& a1, const Rational& a2,
                                        const MuSet<Rational>& mu) {
  if ((a1 * a2 * (a1 - a2) * (a1 + a2)).is_zero()) {
    throw Error(ErrorKind::kPrecondition,
                "coplanarity expansion needs a1 a2 (a1 - a2)(a1 + a2) != 0");
  }
  std::array<Rational, 4> m = as_array(mu);
  CoplanarityExpansion e;
  e.raw = coplanarity_raw(a1, a2, m);
  UPoly p(e.raw.begin(), e.raw.end());
  for (const Rational& t : {Rational(6), Rational(-7, 3)}) {
    if (!(upoly_eval(p, t) == coplanarity_numerator(a1, a2, m, t))) {
      throw Error(ErrorKind::kDegreeBound,
                  "coplanarity numerator is not a quartic in tau");
    }
  }
  e.c[0] = e.raw[0] / sq(a1 + a2);
  e.c[1] = -e.raw[1] / (a1 * a2 * (a1 + a2));
  e.c[2] = e.raw[2];
  e.c[3] = -e.raw[3] / (a1 * a2 * (a1 - a2));
  e.c[4] = e.raw[4] / sq(a1 - a2);
  return e;
}

Rational appendix_f1(const Rational& a1, const Rational& a2,
                     const Rational& mu14, const Rational& mu23) {
  Rational x = a1 * a1, y = a2 * a2, p = mu14 * mu23;
  return p * (x + 1) * (y + 1) + x * y + 3 * x - y + 1;
}

Rational appendix_f2(const Rational& a1, const Rational& a2,
                     const Rational& mu14, const Rational& mu23) {
  Rational x = a1 * a1, y = a2 * a2, p = mu14 * mu23;
  return p * (x + 1) * (y + 1) + x * y + 3 * y - x + 1;
}

Rational appendix_g1(const Rational& a1, const Rational& a2) {
  Rational x = a1 * a1, y = a2 * a2;
  return x * y + 2 * y + 1;
}

Rational appendix_g2(const Rational& a1, const Rational& a2) {
  Rational x = a1 * a1, y = a2 * a2;
  return x * y - x + 2 * y;
}

Rational appendix_g3(const Rational& a1, const Rational& a2) {
  Rational x = a1 * a1, y = a2 * a2;
  return x * y - x + 3 * y + 1;
}

MuSet<Rational> reduced_case_mu(ReducedCase which, const Rational& a1,
                                const Rational& a2, const Rational& m) {
  if (m.is_zero()) throw Error(ErrorKind::kPrecondition, "m must be nonzero");
  auto mu = case_mu(which, a1, a2, m);
  return MuSet<Rational>(mu[0], mu[1], mu[2], mu[3]);
}

Rational reduced_case_numerator(ReducedCase which, int i, const Rational& a1,
                                const Rational& a2, const Rational& m) {
  if (i != 0 && i != 2) {
    throw Error(ErrorKind::kPrecondition, "only c0 and c2 are reduced");
  }
  if (m.is_zero() || (a1 + a2).is_zero()) {
    throw Error(ErrorKind::kPrecondition, "needs m != 0 and a1 + a2 != 0");
  }
  return case_numerator(which, i, a1, a2, m);
}

UPoly reduced_case_poly(ReducedCase which, int i, const Rational& a1,
                        const Rational& a2) {
  std::vector<Rational> xs, ys;
  for (int j = 1; j <= 5; ++j) {
    xs.push_back(Rational(j));
    ys.push_back(reduced_case_numerator(which, i, a1, a2, Rational(j)));
  }
  UPoly p = interpolate(xs, ys);
  for (const Rational& m : {Rational(6), Rational(-7, 3)}) {
    if (!(upoly_eval(p, m) == reduced_case_numerator(which, i, a1, a2, m))) {
      throw Error(ErrorKind::kDegreeBound, "numerator is not a quartic in m");
    }
  }
  return p;
}

Rational reduced_case_resultant(ReducedCase which, const Rational& a1,
                                const Rational& a2) {
  return sylvester_resultant(reduced_case_poly(which, 0, a1, a2),
                             reduced_case_poly(which, 2, a1, a2));
}

Rational resultant_target(const Rational& a1, const Rational& a2) {
  Rational x = a1 * a1, y = a2 * a2;
  Rational g = appendix_g1(a1, a2) * appendix_g2(a1, a2) * appendix_g3(a1, a2);
  return Rational(2).pow(36) * a1.pow(16) * a2.pow(8) * (x + 1).pow(8) *
         (y + 1).pow(4) * (x - y).pow(4) * g.pow(4);
}

RestrictedC0 restricted_c0_g2() {
  // x = t, y = t / (t + 2).
  UPoly t{Rational(0), Rational(1)};
  return restrict_lifted(lift_case3_c0(), t, t, UPoly{Rational(2), Rational(1)});
}

RestrictedC0 restricted_c0_g3() {
  // x = 1 + u, y = u / (u + 4).
  UPoly u{Rational(0), Rational(1)};
  return restrict_lifted(lift_case3_c0(), UPoly{Rational(1), Rational(1)}, u,
                         UPoly{Rational(4), Rational(1)});
}

CertificateReport verify_nonexistence(const NonexistenceOptions& opt) {
  CertificateReport rep;
  rep.name = "plane-symmetric non-existence";
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> num(1, 97), den(1, 53), snum(-97, 97);
  auto positive = [&] { return Rational(num(rng), den(rng)); };

  // Elimination steps.
  auto c0_minus_c4 = [](const auto& v) {
    using R = std::decay_t<decltype(v[0])>;
    const R &a1 = v[0], &a2 = v[1];
    auto raw = coplanarity_raw(a1, a2, std::array<R, 4>{v[2], v[3], v[4], v[5]});
    R p = a1 + a2, m = a1 - a2;
    return raw[0] * m * m - raw[4] * p * p +
           R(16) * a1 * a2 * m * p * (v[2] * v[4] - v[3] * v[5]) * p * p * m * m;
  };
  add_check(rep, "identity: c0 - c4 = -16 a1 a2 (a1-a2)(a1+a2)(mu14 mu23 - mu12 mu34)",
            ring_identity_zero(6, c0_minus_c4).zero);

  // After mu34 = mu14 mu23 / mu12, mu12 * c is polynomial because c is affine
  // in mu34.
  auto c13 = [](const auto& v, int sign) {
    using R = std::decay_t<decltype(v[0])>;
    const R &a1 = v[0], &a2 = v[1], &m14 = v[2], &m12 = v[3], &m23 = v[4];
    auto r0 = coplanarity_raw(a1, a2, std::array<R, 4>{m14, m12, m23, R(0)});
    auto r1 = coplanarity_raw(a1, a2, std::array<R, 4>{m14, m12, m23, R(1)});
    auto g = [&](int i) { return m12 * r0[i] + m14 * m23 * (r1[i] - r0[i]); };
    R one(1), x = a1 * a1, y = a2 * a2, p = m14 * m23;
    R scale = a1 * a2 * (x - y);
    if (sign < 0) {
      R f1 = p * (x + one) * (y + one) + x * y + R(3) * x - y + one;
      return -g(1) * (a1 - a2) + g(3) * (a1 + a2) -
             R(16) * a2 * (m12 + m23) * (m14 - m12) * f1 * scale;
    }
    R f2 = p * (x + one) * (y + one) + x * y + R(3) * y - x + one;
    return -g(1) * (a1 - a2) - g(3) * (a1 + a2) -
           R(16) * a1 * (m12 - m23) * (m14 + m12) * f2 * scale;
  };
  add_check(rep, "identity: mu12 (c1 - c3) = 16 a2 (mu12+mu23)(mu14-mu12) f1",
            ring_identity_zero(5, [&](const auto& v) { return c13(v, -1); }).zero);
  add_check(rep, "identity: mu12 (c1 + c3) = 16 a1 (mu12-mu23)(mu14+mu12) f2",
            ring_identity_zero(5, [&](const auto& v) { return c13(v, 1); }).zero);

  // Case 1.
  bool f_ok = true;
  for (int t = 0; t < opt.random_trials && f_ok; ++t) {
    Rational a1(snum(rng), den(rng)), a2(snum(rng), den(rng));
    Rational m14(snum(rng), den(rng)), m23(snum(rng), den(rng));
    f_ok = appendix_f1(a1, a2, m14, m23) - appendix_f2(a1, a2, m14, m23) ==
           4 * (a1 * a1 - a2 * a2);
  }
  add_check(rep, "identity: f1 - f2 = 4 (a1^2 - a2^2) on random rationals", f_ok);
  add_check(rep, "structural: 4 (a1^2 - a2^2) != 0 since a1, a2 > 0, a1 != a2",
            true);

  // Case 2.
  auto c4_equal = [](const auto& v) {
    using R = std::decay_t<decltype(v[0])>;
    const R &a1 = v[0], &a2 = v[1], &m = v[2];
    auto raw = coplanarity_raw(a1, a2, std::array<R, 4>{m, m, m, m});
    R d = a1 - a2;
    return raw[4] + R(16) * a1 * a1 * a2 * a2 * m * m * (a1 * a1 - a2 * a2) * d * d;
  };
  add_check(rep, "identity: equal offsets give c4 = -16 a1^2 a2^2 mu^2 (a1^2 - a2^2)",
            ring_identity_zero(3, c4_equal).zero);
  add_check(rep,
            "structural: a1^2 a2^2 mu^2 (a1^2 - a2^2) != 0 for mu != 0, a1 != a2",
            true);

  // Case 3: resultant factorization.
  bool res_ok = true, swap_res_ok = true;
  for (int t = 0; t < opt.resultant_points; ++t) {
    Rational a1 = positive(), a2 = positive();
    if (a1 == a2) a2 += 1;
    res_ok = res_ok && reduced_case_resultant(ReducedCase::kCase3, a1, a2) ==
                           resultant_target(a1, a2);
    swap_res_ok = swap_res_ok &&
                  reduced_case_resultant(ReducedCase::kCase4, a1, a2) ==
                      resultant_target(a2, a1);
  }
  add_check(rep, "exact-sample: case 3 resultant of c0, c2 in mu12 equals the "
                 "g1 g2 g3 product", res_ok);

  // g1 = x y + 2 y + 1 in the squares: all coefficients positive.
  add_check(rep, "structural: g1 is a positive combination of 1, a2^2, a1^2 a2^2",
            grid_identity_zero({4, 4}, [](const std::vector<Rational>& v) {
                  Rational x = v[0] * v[0], y = v[1] * v[1];
                  return appendix_g1(v[0], v[1]) - (x * y + 2 * y + 1);
                }).zero);
  double g1_min = 1e300;
  for (int i = 1; i <= opt.grid_n; ++i) {
    for (int j = 1; j <= opt.grid_n; ++j) {
      double a1 = 5.0 * i / opt.grid_n, a2 = 5.0 * j / opt.grid_n;
      g1_min = std::min(g1_min, a1 * a1 * a2 * a2 + 2 * a2 * a2 + 1);
    }
  }
  add_check(rep, "grid: g1 > 0 on (0, 5]^2", g1_min > 0.0);

  // g2 = 0 means a2^2 = a1^2 / (a1^2 + 2).
  bool g2_root = true;
  for (int s = 2; s <= 6; ++s) {
    Rational r(s), a1 = (r * r - 2) / (2 * r), a2 = (r * r - 2) / (r * r + 2);
    g2_root = g2_root && appendix_g2(a1, a2).is_zero();
  }
  add_check(rep, "identity: a2 = a1 / sqrt(a1^2 + 2) solves g2 = 0", g2_root);
  RestrictedC0 on_g2 = restricted_c0_g2();
  bool g2_definite = !on_g2.coeffs.empty() && !on_g2.coeffs[0].empty();
  for (const UPoly& p : on_g2.coeffs) g2_definite = g2_definite && all_nonnegative(p);
  add_check(rep, "definite-form: on g2 = 0 the c0 numerator has non-negative "
                 "coefficients in (a1^2, mu12^2) and a nonzero mu12-free part",
            g2_definite);
  bool g2_grid = true;
  for (int i = 1; i <= opt.grid_n; ++i) {
    double a1 = 5.0 * i / opt.grid_n, a2 = a1 / std::sqrt(a1 * a1 + 2);
    auto h = c0_in_w(a1, a2);
    g2_grid = g2_grid && h[0] > 0 && h[1] > 0 && h[2] > 0;
  }
  add_check(rep, "grid: on g2 = 0 the c0 numerator has no real mu12", g2_grid);

  // g3 = 0 means a2^2 = (a1^2 - 1) / (a1^2 + 3).
  bool g3_root = true;
  for (int k = 2; k <= 6; ++k) {
    Rational x(k * k), y = (x - 1) / (x + 3);
    g3_root = g3_root && (x * y - x + 3 * y + 1).is_zero();
  }
  add_check(rep, "identity: a2^2 = (a1^2 - 1)/(a1^2 + 3) solves g3 = 0", g3_root);
  RestrictedC0 on_g3 = restricted_c0_g3();
  bool g3_forced = on_g3.coeffs.size() == 3 && on_g3.coeffs[0].empty() &&
                   on_g3.coeffs[1].empty() && !on_g3.coeffs[2].empty() &&
                   all_nonnegative(on_g3.coeffs[2]) &&
                   on_g3.coeffs[2][0].sign() > 0;
  add_check(rep, "identity: on g3 = 0 the c0 numerator is a positive multiple "
                 "of mu12^4, forcing mu12 = 0", g3_forced);
  double g3_worst = 0.0;
  for (int i = 1; i <= opt.grid_n; ++i) {
    double a1 = 1.0 + 4.0 * i / opt.grid_n;
    double x = a1 * a1, a2 = std::sqrt((x - 1) / (x + 3));
    auto h = c0_in_w(a1, a2);
    if (h[2] <= 0) {
      g3_worst = 1e300;
      break;
    }
    g3_worst = std::max(g3_worst, std::max(std::abs(h[0]), std::abs(h[1])) / h[2]);
  }
  add_check(rep, "grid: on g3 = 0 the c0 numerator only has a mu12^4 term",
            g3_worst < 1e-8);

  // Case 4 is case 3 with a1 and a2 exchanged.
  bool swap_ok = true;
  for (int i : {0, 2}) {
    swap_ok = swap_ok &&
              grid_identity_zero({9, 9, 5}, [i](const std::vector<Rational>& v) {
                return reduced_case_numerator(ReducedCase::kCase4, i, v[0], v[1], v[2]) +
                       reduced_case_numerator(ReducedCase::kCase3, i, v[1], v[0], v[2]);
              }).zero;
  }
  add_check(rep, "identity: case 4 numerators are minus case 3 with a1, a2 "
                 "exchanged", swap_ok);
  add_check(rep, "exact-sample: case 4 resultant equals the exchanged case 3 "
                 "product", swap_res_ok);

  rep.notes.push_back(
      "g3 branch: the restricted c0 numerator was shown exactly to be a "
      "positive multiple of mu12^4; the grid check is a cross-check");
  return rep;
}

}  // namespace bibennett
