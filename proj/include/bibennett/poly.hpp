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

#ifndef BIBENNETT_POLY_HPP_
#define BIBENNETT_POLY_HPP_

#include <map>
#include <string>
#include <vector>

#include "bibennett/rational.hpp"

namespace bibennett {

// Sparse multivariate polynomial with rational coefficients.
class Poly {
 public:
  using Exponents = std::vector<int>;

  Poly() = default;
  explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Poly Constant(std::vector<std::string> vars, const Rational& c);
  static Poly Variable(std::vector<std::string> vars, int index);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  int nvars() const { return static_cast<int>(vars_.size()); }

  // Adds c * x^e; drops the term if the sum cancels.
  void add_term(const Exponents& e, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  int degree(int var) const;
  std::vector<int> degrees() const;
  Rational evaluate(const std::vector<Rational>& point) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly pow(int e) const;
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Coefficients of a univariate polynomial, low to high.
  std::vector<Rational> univariate_coeffs() const;
  static Poly FromUnivariate(const std::string& var,
                             const std::vector<Rational>& coeffs);

  std::string str() const;

 private:
  void check_compatible(const Poly& o) const;

  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

// Dense univariate helpers, coefficients low to high.
using UPoly = std::vector<Rational>;

void upoly_trim(UPoly& p);
UPoly upoly_add(const UPoly& a, const UPoly& b);
UPoly upoly_sub(const UPoly& a, const UPoly& b);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
Rational upoly_eval(const UPoly& p, const Rational& x);
double upoly_eval(const UPoly& p, double x);

// Exact Lagrange interpolation through (xs[i], ys[i]); xs distinct.
UPoly interpolate(const std::vector<Rational>& xs,
                  const std::vector<Rational>& ys);

// Determinant by Gaussian elimination over the rationals.
Rational determinant(std::vector<std::vector<Rational>> m);

// Sylvester resultant of two univariate polynomials given low to high.
Rational sylvester_resultant(const UPoly& p, const UPoly& q);

}  // namespace bibennett

#endif  // BIBENNETT_POLY_HPP_
