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

#include "bibennett/resultant.hpp"

#include "bibennett/error.hpp"

namespace bibennett {

namespace {

using PolyMatrix = std::vector<std::vector<UPoly>>;

UPoly det_upoly(const PolyMatrix& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  UPoly sum;
  for (size_t col = 0; col < n; ++col) {
    if (m[0][col].empty()) continue;
    PolyMatrix minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<UPoly> row;
      for (size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    UPoly term = upoly_mul(m[0][col], det_upoly(minor));
    sum = (col % 2 == 0) ? upoly_add(sum, term) : upoly_sub(sum, term);
  }
  return sum;
}

UPoly tau_coeff(const Quadratic2<Rational>& q, int j) {
  UPoly u{q.c[0][j], q.c[1][j], q.c[2][j]};
  upoly_trim(u);
  return u;
}

}  // namespace

std::vector<Rational> resultant_tau_bar_coeffs(const Quadratic2<Rational>& p,
                                               const Quadratic2<Rational>& q) {
  UPoly p2 = tau_coeff(p, 2), p1 = tau_coeff(p, 1), p0 = tau_coeff(p, 0);
  UPoly q2 = tau_coeff(q, 2), q1 = tau_coeff(q, 1), q0 = tau_coeff(q, 0);
  if (p2.empty() && q2.empty()) {
    throw Error(ErrorKind::kDegenerateResultant,
                "both taubar^2 coefficients vanish identically");
  }
  PolyMatrix s = {{p2, p1, p0, {}},
                  {{}, p2, p1, p0},
                  {q2, q1, q0, {}},
                  {{}, q2, q1, q0}};
  UPoly r = det_upoly(s);
  r.resize(9, Rational(0));
  return r;
}

Poly resultant_tau_bar(const Quadratic2<Rational>& p,
                       const Quadratic2<Rational>& q) {
  return Poly::FromUnivariate("tau", resultant_tau_bar_coeffs(p, q));
}

}  // namespace bibennett
