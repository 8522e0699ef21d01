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

#include "bibennett/sampling.hpp"

namespace bibennett {

Rational Sampler::rational(long bound, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  long q = den(rng_);
  std::uniform_int_distribution<long> num(-bound * q, bound * q);
  return Rational(num(rng_), q);
}

Rational Sampler::positive(long bound, long max_den) {
  for (;;) {
    Rational r = rational(bound, max_den);
    if (r.sign() > 0) return r;
  }
}

Rational Sampler::nonzero(long bound, long max_den) {
  for (;;) {
    Rational r = rational(bound, max_den);
    if (!r.is_zero()) return r;
  }
}

int Sampler::sign() {
  return std::uniform_int_distribution<int>(0, 1)(rng_) ? 1 : -1;
}

Rational Sampler::tau() {
  for (;;) {
    Rational t = rational(4, 11);
    if (t.abs() >= Rational(1, 20)) return t;
  }
}

BennettDesign<Rational> Sampler::design(const Rational& k) {
  for (;;) {
    Rational a1 = positive(3, 7), a2 = positive(3, 7);
    if (a1 != a2) return validate(a1, a2, k);
  }
}

PlanarDesign<Rational> Sampler::planar(PlanarCase c) {
  for (;;) {
    Rational d1 = positive(2, 7), d2 = positive(2, 7);
    if (d1 != d2) return validate_planar(d1, d2, c);
  }
}

MuSet<Rational> Sampler::mu() {
  return MuSet<Rational>(rational(), rational(), rational(), rational());
}

BiBennett<Rational> Sampler::family_a() {
  for (;;) {
    BennettDesign<Rational> d = design(Rational(1));
    // With s1..s4 the four signed mu sums of the closed form, a1 a2 = |s1/s3|
    // and a1 / a2 = |s2 / s4|; choose s1, s4 freely and solve for s2, s3.
    Rational s1 = nonzero(), s4 = nonzero();
    int e = sign();
    Rational s3 = Rational(e) * s1 / (d.a1 * d.a2);
    Rational s2 = -Rational(e) * s4 * d.a1 / d.a2;
    Rational q(1, 4);
    MuSet<Rational> m((s1 + s2 + s3 + s4) * q, (s3 + s4 - s1 - s2) * q,
                      (s3 - s4 + s1 - s2) * q, (s3 - s4 - s1 + s2) * q);
    if (detect_trivial(m)) continue;
    auto [a1, a2] = bibennett::family_a(m);
    if (a1 != d.a1 || a2 != d.a2) {
      throw Error(ErrorKind::kPrecondition, "family A sampler inconsistency");
    }
    return make_line_symmetric(Family::kA, Loop<Rational>::Spatial(d), m);
  }
}

BiBennett<Rational> Sampler::family_b(const Rational& k) {
  for (;;) {
    Rational x = rational(), y = rational();
    if (x.is_zero() && y.is_zero()) continue;
    MuSet<Rational> m = bibennett::family_b(x, y);
    if (detect_trivial(m)) continue;
    BennettDesign<Rational> d = design(k);
    if (family_b_isogonal(d.a1, d.a2, m)) continue;
    return make_line_symmetric(Family::kB, Loop<Rational>::Spatial(d), m);
  }
}

BiBennett<Rational> Sampler::family_c(const Rational& k) {
  for (;;) {
    Rational m14 = rational(), m12 = rational();
    if (m14.abs() == m12.abs()) continue;
    return bibennett::family_c(design(k), m14, m12, sign(), sign());
  }
}

}  // namespace bibennett
