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

#include "bibennett/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "bibennett/error.hpp"

namespace bibennett {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConvention: return "convention";
    case ErrorKind::kDegenerate: return "degenerate";
    case ErrorKind::kInvalidScale: return "invalid-scale";
    case ErrorKind::kPole: return "pole";
    case ErrorKind::kNoRealFamily: return "no-real-family";
    case ErrorKind::kExcludedBranch: return "excluded-branch";
    case ErrorKind::kTrivial: return "trivial";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kNotIsometric: return "not-isometric";
    case ErrorKind::kDegreeBound: return "degree-bound";
    case ErrorKind::kDegenerateResultant: return "degenerate-resultant";
    case ErrorKind::kDegenerateQuadric: return "degenerate-quadric";
    case ErrorKind::kUndefinedLine: return "undefined-line";
    case ErrorKind::kNoRealTauBar: return "no-real-tau-bar";
    case ErrorKind::kIrrational: return "irrational";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kSchema: return "schema";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<mpz_class> ParseInteger(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!AllDigits(s)) return std::nullopt;
  mpz_class z(std::string(s), 10);
  if (negative) z = -z;
  return z;
}

mpz_class TenTo(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::kPole, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::kPole, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const {
  mpq_class r;
  mpq_abs(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(r);
}

Rational Rational::pow(int e) const {
  if (e < 0) return Rational(1) / pow(-e);
  Rational result(1);
  Rational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::optional<Rational> Rational::sqrt_exact() const {
  if (sign() < 0) return std::nullopt;
  mpz_class n = v_.get_num();
  mpz_class d = v_.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) ||
      !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

std::optional<Rational> Rational::TryParse(std::string_view text) {
  std::string_view s = Trim(text);
  if (s.empty()) return std::nullopt;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = ParseInteger(Trim(s.substr(0, slash)));
    std::string_view den_text = Trim(s.substr(slash + 1));
    if (!num || !AllDigits(den_text)) return std::nullopt;
    mpz_class den(std::string(den_text), 10);
    if (den == 0) return std::nullopt;
    return Rational(mpq_class(*num, den));
  }
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto ez = ParseInteger(s.substr(e + 1));
    if (!ez || !ez->fits_slong_p()) return std::nullopt;
    exponent = ez->get_si();
    if (exponent > 4096 || exponent < -4096) return std::nullopt;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) return std::nullopt;
    if ((!ip.empty() && !AllDigits(ip)) || (!fp.empty() && !AllDigits(fp))) {
      return std::nullopt;
    }
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!AllDigits(s)) return std::nullopt;
    digits = std::string(s);
  }
  mpq_class q(mpz_class(digits, 10));
  if (exponent > 0) q *= TenTo(static_cast<unsigned long>(exponent));
  if (exponent < 0) q /= TenTo(static_cast<unsigned long>(-exponent));
  q.canonicalize();
  if (negative) q = -q;
  return Rational(q);
}

Rational Rational::Parse(std::string_view text) {
  auto q = TryParse(text);
  if (!q) {
    throw Error(ErrorKind::kParse,
                "not a rational literal: '" + std::string(text) + "'");
  }
  return *q;
}

Rational Rational::FromDouble(double x) {
  if (!std::isfinite(x)) {
    throw Error(ErrorKind::kParse, "non-finite double has no rational value");
  }
  return Rational(mpq_class(x));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.str();
}

}  // namespace bibennett
