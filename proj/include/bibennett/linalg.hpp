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

// Small fixed-size vectors and matrices, generic over the scalar type.
// Only two scalars are used in practice: double and Rational.

#ifndef BIBENNETT_LINALG_HPP_
#define BIBENNETT_LINALG_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <type_traits>

#include "bibennett/error.hpp"
#include "bibennett/rational.hpp"

namespace bibennett {

template <class S>
inline constexpr bool kExact = std::is_same_v<S, Rational>;

template <class S>
S from_rational(const Rational& q) {
  if constexpr (kExact<S>) {
    return q;
  } else {
    return q.to_double();
  }
}

inline double abs_value(double x) { return std::fabs(x); }
inline Rational abs_value(const Rational& x) { return x.abs(); }

// Zero test: exact for Rational, |x| <= tol for double.
inline bool near_zero(double x, double tol) { return std::fabs(x) <= tol; }
inline bool near_zero(const Rational& x, double /*tol*/) { return x.is_zero(); }

template <class S>
struct Vec3 {
  std::array<S, 3> v{S(0), S(0), S(0)};

  Vec3() = default;
  Vec3(S x, S y, S z) : v{std::move(x), std::move(y), std::move(z)} {}

  S& operator[](int i) { return v[i]; }
  const S& operator[](int i) const { return v[i]; }

  Vec3& operator+=(const Vec3& o) {
    for (int i = 0; i < 3; ++i) v[i] += o.v[i];
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    for (int i = 0; i < 3; ++i) v[i] -= o.v[i];
    return *this;
  }
  Vec3& operator*=(const S& s) {
    for (int i = 0; i < 3; ++i) v[i] *= s;
    return *this;
  }
  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend Vec3 operator*(Vec3 a, const S& s) { return a *= s; }
  friend Vec3 operator*(const S& s, Vec3 a) { return a *= s; }
  Vec3 operator-() const { return Vec3(-v[0], -v[1], -v[2]); }
  friend bool operator==(const Vec3& a, const Vec3& b) { return a.v == b.v; }
};

template <class S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return Vec3<S>(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                 a[0] * b[1] - a[1] * b[0]);
}

template <class S>
S norm2(const Vec3<S>& a) {
  return dot(a, a);
}

template <class S>
S dist2(const Vec3<S>& a, const Vec3<S>& b) {
  return norm2(a - b);
}

inline double norm(const Vec3<double>& a) { return std::sqrt(norm2(a)); }

inline Vec3<double> normalized(const Vec3<double>& a) {
  double n = norm(a);
  if (n == 0.0) throw Error(ErrorKind::kDegenerate, "cannot normalize zero vector");
  return a * (1.0 / n);
}

template <class S>
S det3(const Vec3<S>& a, const Vec3<S>& b, const Vec3<S>& c) {
  return dot(a, cross(b, c));
}

template <class S>
Vec3<double> to_double(const Vec3<S>& a) {
  return Vec3<double>(to_double(a[0]), to_double(a[1]), to_double(a[2]));
}

template <class S>
Vec3<S> vec_from_rational(const Vec3<Rational>& a) {
  return Vec3<S>(from_rational<S>(a[0]), from_rational<S>(a[1]),
                 from_rational<S>(a[2]));
}

// Solves [c0 c1 c2] x = rhs with columns c0, c1, c2 by Cramer's rule.
template <class S>
Vec3<S> solve3(const Vec3<S>& c0, const Vec3<S>& c1, const Vec3<S>& c2,
               const Vec3<S>& rhs, double tol = 1e-14) {
  S d = det3(c0, c1, c2);
  double scale = 1.0;
  if constexpr (!kExact<S>) {
    scale = norm(c0) * norm(c1) * norm(c2);
  }
  if (near_zero(d, tol * scale) || (!kExact<S> && scale == 0.0)) {
    throw Error(ErrorKind::kDegenerate, "singular 3x3 system");
  }
  return Vec3<S>(det3(rhs, c1, c2) / d, det3(c0, rhs, c2) / d,
                 det3(c0, c1, rhs) / d);
}

// 3x3 matrix, row-major.
template <class S>
struct Mat3 {
  std::array<std::array<S, 3>, 3> m{};

  static Mat3 Identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = S(i == j ? 1 : 0);
    return r;
  }
  static Mat3 FromColumns(const Vec3<S>& a, const Vec3<S>& b,
                          const Vec3<S>& c) {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
      r.m[i][0] = a[i];
      r.m[i][1] = b[i];
      r.m[i][2] = c[i];
    }
    return r;
  }
  std::array<S, 3>& operator[](int i) { return m[i]; }
  const std::array<S, 3>& operator[](int i) const { return m[i]; }

  Vec3<S> operator*(const Vec3<S>& x) const {
    Vec3<S> r;
    for (int i = 0; i < 3; ++i) r[i] = m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2];
    return r;
  }
  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        S s(0);
        for (int l = 0; l < 3; ++l) s += m[i][l] * o.m[l][j];
        r.m[i][j] = s;
      }
    return r;
  }
  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }
  S det() const {
    return det3(Vec3<S>(m[0][0], m[1][0], m[2][0]),
                Vec3<S>(m[0][1], m[1][1], m[2][1]),
                Vec3<S>(m[0][2], m[1][2], m[2][2]));
  }
  S trace() const { return m[0][0] + m[1][1] + m[2][2]; }
};

// 4x4 homogeneous transform acting on columns (w, x, y, z).
template <class S>
struct Mat4 {
  std::array<std::array<S, 4>, 4> m{};

  static Mat4 Identity() {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r.m[i][j] = S(i == j ? 1 : 0);
    return r;
  }
  std::array<S, 4>& operator[](int i) { return m[i]; }
  const std::array<S, 4>& operator[](int i) const { return m[i]; }

  friend bool operator==(const Mat4& a, const Mat4& b) { return a.m == b.m; }

  Mat3<S> rotation() const {
    Mat3<S> r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[i + 1][j + 1];
    return r;
  }
  Vec3<S> translation() const { return Vec3<S>(m[1][0], m[2][0], m[3][0]); }

  Vec3<S> apply_point(const Vec3<S>& p) const {
    Vec3<S> r;
    for (int i = 0; i < 3; ++i)
      r[i] = m[i + 1][0] + m[i + 1][1] * p[0] + m[i + 1][2] * p[1] +
             m[i + 1][3] * p[2];
    return r;
  }
  Vec3<S> apply_vector(const Vec3<S>& p) const {
    Vec3<S> r;
    for (int i = 0; i < 3; ++i)
      r[i] = m[i + 1][1] * p[0] + m[i + 1][2] * p[1] + m[i + 1][3] * p[2];
    return r;
  }

  static Mat4 FromRotationTranslation(const Mat3<S>& rot, const Vec3<S>& t) {
    Mat4 r = Identity();
    for (int i = 0; i < 3; ++i) {
      r.m[i + 1][0] = t[i];
      for (int j = 0; j < 3; ++j) r.m[i + 1][j + 1] = rot.m[i][j];
    }
    return r;
  }
};

template <class S>
Mat4<S> mat_mul(const Mat4<S>& a, const Mat4<S>& b) {
  Mat4<S> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      S s(0);
      for (int l = 0; l < 4; ++l) s += a.m[i][l] * b.m[l][j];
      r.m[i][j] = s;
    }
  return r;
}

template <class S>
Mat4<S> operator*(const Mat4<S>& a, const Mat4<S>& b) {
  return mat_mul(a, b);
}

template <class S>
double max_abs_diff(const Mat4<S>& a, const Mat4<S>& b) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r = std::max(r, std::fabs(to_double(S(a.m[i][j] - b.m[i][j]))));
  return r;
}

template <class S>
Mat4<double> to_double(const Mat4<S>& a) {
  Mat4<double> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.m[i][j] = to_double(a.m[i][j]);
  return r;
}

}  // namespace bibennett

#endif  // BIBENNETT_LINALG_HPP_
