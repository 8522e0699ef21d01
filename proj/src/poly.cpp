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

#include "bibennett/poly.hpp"

#include <algorithm>
#include <sstream>

#include "bibennett/error.hpp"

namespace bibennett {

Poly Poly::Constant(std::vector<std::string> vars, const Rational& c) {
  Poly p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

Poly Poly::Variable(std::vector<std::string> vars, int index) {
  Poly p(std::move(vars));
  Exponents e(p.vars_.size(), 0);
  e.at(index) = 1;
  p.add_term(e, Rational(1));
  return p;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size()) {
    throw Error(ErrorKind::kPrecondition, "exponent arity mismatch");
  }
  for (int x : e) {
    if (x < 0) throw Error(ErrorKind::kPrecondition, "negative exponent");
  }
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int Poly::degree(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::vector<int> Poly::degrees() const {
  std::vector<int> d(vars_.size(), 0);
  for (int i = 0; i < nvars(); ++i) d[i] = std::max(0, degree(i));
  return d;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) {
    throw Error(ErrorKind::kPrecondition, "evaluation point arity mismatch");
  }
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t *= point[i].pow(e[i]);
    }
    sum += t;
  }
  return sum;
}

void Poly::check_compatible(const Poly& o) const {
  if (vars_ != o.vars_) {
    throw Error(ErrorKind::kPrecondition, "polynomials over different variables");
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly r(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw Error(ErrorKind::kPrecondition, "negative polynomial power");
  Poly r = Constant(vars_, Rational(1));
  Poly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::vector<Rational> Poly::univariate_coeffs() const {
  if (vars_.size() != 1) {
    throw Error(ErrorKind::kPrecondition, "polynomial is not univariate");
  }
  std::vector<Rational> c(std::max(0, degree(0)) + 1, Rational(0));
  for (const auto& [e, v] : terms_) c[e[0]] = v;
  return c;
}

Poly Poly::FromUnivariate(const std::string& var,
                          const std::vector<Rational>& coeffs) {
  Poly p({var});
  for (size_t i = 0; i < coeffs.size(); ++i) {
    p.add_term({static_cast<int>(i)}, coeffs[i]);
  }
  return p;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second << ")";
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (it->first[i] == 0) continue;
      os << "*" << vars_[i];
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

void upoly_trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly upoly_add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  upoly_trim(r);
  return r;
}

UPoly upoly_sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  upoly_trim(r);
  return r;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  upoly_trim(r);
  return r;
}

Rational upoly_eval(const UPoly& p, const Rational& x) {
  Rational r(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

double upoly_eval(const UPoly& p, double x) {
  double r = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + it->to_double();
  return r;
}

UPoly interpolate(const std::vector<Rational>& xs,
                  const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw Error(ErrorKind::kPrecondition, "interpolation needs matching nodes");
  }
  // Newton divided differences, then expand to monomial form.
  size_t n = xs.size();
  std::vector<Rational> c = ys;
  for (size_t j = 1; j < n; ++j) {
    for (size_t i = n - 1; i >= j; --i) {
      Rational dx = xs[i] - xs[i - j];
      if (dx.is_zero()) {
        throw Error(ErrorKind::kDegenerate, "repeated interpolation node");
      }
      c[i] = (c[i] - c[i - 1]) / dx;
      if (i == j) break;
    }
  }
  UPoly r{c[n - 1]};
  for (size_t k = n - 1; k-- > 0;) {
    r = upoly_mul(r, UPoly{-xs[k], Rational(1)});
    r = upoly_add(r, UPoly{c[k]});
  }
  upoly_trim(r);
  return r;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  size_t n = m.size();
  Rational det(1);
  for (size_t i = 0; i < n; ++i) {
    size_t p = i;
    while (p < n && m[p][i].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != i) {
      std::swap(m[p], m[i]);
      det = -det;
    }
    det *= m[i][i];
    for (size_t r = i + 1; r < n; ++r) {
      if (m[r][i].is_zero()) continue;
      Rational f = m[r][i] / m[i][i];
      for (size_t c = i; c < n; ++c) m[r][c] -= f * m[i][c];
    }
  }
  return det;
}

Rational sylvester_resultant(const UPoly& p0, const UPoly& q0) {
  UPoly p = p0, q = q0;
  upoly_trim(p);
  upoly_trim(q);
  if (p.empty() || q.empty()) return Rational(0);
  size_t m = p.size() - 1, n = q.size() - 1;
  size_t size = m + n;
  if (size == 0) return Rational(1);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= m; ++j) s[i][i + j] = p[m - j];
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= n; ++j) s[n + i][i + j] = q[n - j];
  return determinant(std::move(s));
}

}  // namespace bibennett
