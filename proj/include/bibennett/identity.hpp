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

// Polynomial identity testing by exact evaluation on complete grids.
//
// A polynomial of degree <= d_i in variable i that vanishes on a grid of
// d_i + 1 distinct nodes per variable is the zero polynomial, so a "true"
// verdict is a proof provided the degree bounds are right. Bounds come either
// from the caller or from running the same expression over DegreeBound.

#ifndef BIBENNETT_IDENTITY_HPP_
#define BIBENNETT_IDENTITY_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <type_traits>
#include <vector>

#include "bibennett/error.hpp"
#include "bibennett/poly.hpp"
#include "bibennett/rational.hpp"

namespace bibennett {

// Ring element that only tracks an upper bound of the degree in each
// variable. Addition takes the maximum, multiplication adds.
class DegreeBound {
 public:
  DegreeBound() : zero_(true) {}
  DegreeBound(int c) : zero_(c == 0) {}  // NOLINT(runtime/explicit)
  DegreeBound(long c) : zero_(c == 0) {}  // NOLINT(runtime/explicit)
  explicit DegreeBound(const Rational& c) : zero_(c.is_zero()) {}

  static DegreeBound Variable(int nvars, int index) {
    DegreeBound d(1);
    d.deg_.assign(nvars, 0);
    d.deg_.at(index) = 1;
    return d;
  }

  bool is_zero() const { return zero_; }
  int degree(int var) const {
    return var < static_cast<int>(deg_.size()) ? deg_[var] : 0;
  }
  const std::vector<int>& degrees() const { return deg_; }

  DegreeBound& operator+=(const DegreeBound& o) {
    if (o.zero_) return *this;
    if (zero_) return *this = o;
    if (deg_.size() < o.deg_.size()) deg_.resize(o.deg_.size(), 0);
    for (size_t i = 0; i < o.deg_.size(); ++i) {
      deg_[i] = std::max(deg_[i], o.deg_[i]);
    }
    return *this;
  }
  DegreeBound& operator-=(const DegreeBound& o) { return *this += o; }
  DegreeBound& operator*=(const DegreeBound& o) {
    if (zero_ || o.zero_) return *this = DegreeBound();
    if (deg_.size() < o.deg_.size()) deg_.resize(o.deg_.size(), 0);
    for (size_t i = 0; i < o.deg_.size(); ++i) deg_[i] += o.deg_[i];
    return *this;
  }
  friend DegreeBound operator+(DegreeBound a, const DegreeBound& b) { return a += b; }
  friend DegreeBound operator-(DegreeBound a, const DegreeBound& b) { return a -= b; }
  friend DegreeBound operator*(DegreeBound a, const DegreeBound& b) { return a *= b; }
  DegreeBound operator-() const { return *this; }

 private:
  bool zero_;
  std::vector<int> deg_;
};

// Converts a rational constant into a ring element.
template <class R>
R ring_const(const Rational& c) {
  if constexpr (std::is_same_v<R, Rational>) {
    return c;
  } else if constexpr (std::is_same_v<R, double>) {
    return c.to_double();
  } else {
    return R(c);
  }
}

struct IdentityResult {
  bool zero = false;
  std::vector<int> bounds;
  uint64_t evaluations = 0;
};

// Evaluates f on the complete grid {1, ..., bounds[i] + 1}^n and reports
// whether every value vanishes. An extra off-grid sample that does not vanish
// after a vanishing grid means the bounds were too small: kDegreeBound.
IdentityResult grid_identity_zero(
    const std::vector<int>& bounds,
    const std::function<Rational(const std::vector<Rational>&)>& f,
    uint64_t seed = 1, uint64_t max_points = 4'000'000);

// Bounds are derived by evaluating f over DegreeBound, then the grid test runs
// with Rational. f must be callable as f(const std::vector<R>&) for both R.
template <class F>
IdentityResult ring_identity_zero(int nvars, F&& f, uint64_t seed = 1,
                                  uint64_t max_points = 4'000'000) {
  std::vector<DegreeBound> vars;
  for (int i = 0; i < nvars; ++i) vars.push_back(DegreeBound::Variable(nvars, i));
  DegreeBound d = f(vars);
  std::vector<int> bounds(nvars, 0);
  for (int i = 0; i < nvars; ++i) bounds[i] = d.degree(i);
  return grid_identity_zero(
      bounds,
      [&f](const std::vector<Rational>& x) -> Rational { return f(x); }, seed,
      max_points);
}

// Zero test of an explicit polynomial against caller-supplied bounds. Bounds
// below the true degree of p raise kDegreeBound.
bool poly_identity_zero(const Poly& p, const std::vector<int>& degree_bounds);

}  // namespace bibennett

#endif  // BIBENNETT_IDENTITY_HPP_
