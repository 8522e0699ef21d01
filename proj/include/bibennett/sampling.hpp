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

// Seeded generators of random exact instances.

#ifndef BIBENNETT_SAMPLING_HPP_
#define BIBENNETT_SAMPLING_HPP_

#include <cstdint>
#include <random>

#include "bibennett/families.hpp"

namespace bibennett {

class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  // Uniform-ish rational p/q with 1 <= q <= max_den and |p/q| <= bound.
  Rational rational(long bound = 3, long max_den = 9);
  Rational positive(long bound = 3, long max_den = 9);
  Rational nonzero(long bound = 3, long max_den = 9);
  int sign();
  // Random tau away from the pole at 0.
  Rational tau();

  BennettDesign<Rational> design(const Rational& k);
  BennettDesign<Rational> design() { return design(positive(2, 5)); }
  PlanarDesign<Rational> planar(PlanarCase c);
  MuSet<Rational> mu();

  // Family A instance with k = 1: mu is built so that the closed form returns
  // rational (a1, a2).
  BiBennett<Rational> family_a();
  BiBennett<Rational> family_b(const Rational& k = Rational(1));
  BiBennett<Rational> family_c(const Rational& k = Rational(1));

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bibennett

#endif  // BIBENNETT_SAMPLING_HPP_
