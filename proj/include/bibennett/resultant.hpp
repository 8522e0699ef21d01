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

#ifndef BIBENNETT_RESULTANT_HPP_
#define BIBENNETT_RESULTANT_HPP_

#include <array>
#include <vector>

#include "bibennett/error.hpp"
#include "bibennett/poly.hpp"
#include "bibennett/rational.hpp"

namespace bibennett {

// Bidegree-(2,2) polynomial sum c[i][j] tau^i taubar^j.
template <class S>
struct Quadratic2 {
  std::array<std::array<S, 3>, 3> c{};

  Quadratic2() {
    for (auto& row : c) row.fill(S(0));
  }

  S eval(const S& tau, const S& tau_bar) const {
    S r(0), ti(1);
    for (int i = 0; i < 3; ++i) {
      S tj(1);
      for (int j = 0; j < 3; ++j) {
        r += c[i][j] * ti * tj;
        tj *= tau_bar;
      }
      ti *= tau;
    }
    return r;
  }

  // Coefficients (taubar^0, taubar^1, taubar^2) at a fixed tau.
  std::array<S, 3> at_tau(const S& tau) const {
    std::array<S, 3> r{S(0), S(0), S(0)};
    for (int j = 0; j < 3; ++j) r[j] = c[0][j] + tau * (c[1][j] + tau * c[2][j]);
    return r;
  }

  bool is_zero() const {
    for (const auto& row : c)
      for (const auto& x : row)
        if (!(x == S(0))) return false;
    return true;
  }
};

// 4x4 Sylvester determinant of p and q as quadratics in taubar. The result is
// univariate in "tau" of degree <= 8.
Poly resultant_tau_bar(const Quadratic2<Rational>& p,
                       const Quadratic2<Rational>& q);

// The same as dense coefficients, padded to length 9.
std::vector<Rational> resultant_tau_bar_coeffs(const Quadratic2<Rational>& p,
                                               const Quadratic2<Rational>& q);

// Fits a Quadratic2 to f on the 3x3 grid {1,2,3}^2 and checks one more point.
// Throws kDegreeBound when f is not of bidegree (2,2).
template <class F>
Quadratic2<Rational> fit_quadratic2(F&& f) {
  Quadratic2<Rational> q;
  std::vector<Rational> nodes{Rational(1), Rational(2), Rational(3)};
  // Interpolate in taubar for each tau node, then in tau for each slot.
  std::array<std::vector<Rational>, 3> by_j;
  for (const Rational& t : nodes) {
    std::vector<Rational> ys;
    for (const Rational& tb : nodes) ys.push_back(f(t, tb));
    UPoly u = interpolate(nodes, ys);
    u.resize(3, Rational(0));
    for (int j = 0; j < 3; ++j) by_j[j].push_back(u[j]);
  }
  for (int j = 0; j < 3; ++j) {
    UPoly u = interpolate(nodes, by_j[j]);
    u.resize(3, Rational(0));
    for (int i = 0; i < 3; ++i) q.c[i][j] = u[i];
  }
  for (const auto& [t, tb] : {std::pair{Rational(5, 7), Rational(-4, 3)},
                              std::pair{Rational(-11, 2), Rational(13, 5)}}) {
    if (!(q.eval(t, tb) == f(t, tb))) {
      throw Error(ErrorKind::kDegreeBound,
                  "function is not of bidegree (2, 2) in (tau, taubar)");
    }
  }
  return q;
}

}  // namespace bibennett

#endif  // BIBENNETT_RESULTANT_HPP_
