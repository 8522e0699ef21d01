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

#include "bibennett/identity.hpp"

#include <string>

namespace bibennett {

IdentityResult grid_identity_zero(
    const std::vector<int>& bounds,
    const std::function<Rational(const std::vector<Rational>&)>& f,
    uint64_t seed, uint64_t max_points) {
  IdentityResult result;
  result.bounds = bounds;
  uint64_t total = 1;
  for (int b : bounds) {
    if (b < 0) throw Error(ErrorKind::kPrecondition, "negative degree bound");
    total *= static_cast<uint64_t>(b + 1);
    if (total > max_points) {
      throw Error(ErrorKind::kPrecondition,
                  "identity grid exceeds " + std::to_string(max_points) +
                      " points");
    }
  }
  size_t n = bounds.size();
  std::vector<int> idx(n, 0);
  std::vector<Rational> x(n);
  for (uint64_t count = 0; count < total; ++count) {
    for (size_t i = 0; i < n; ++i) x[i] = Rational(idx[i] + 1);
    ++result.evaluations;
    if (!f(x).is_zero()) return result;
    for (size_t i = 0; i < n; ++i) {
      if (++idx[i] <= bounds[i]) break;
      idx[i] = 0;
    }
  }
  // Off-grid spot check with non-integer nodes.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-97, 97), den(2, 61);
  for (int trial = 0; trial < 2; ++trial) {
    for (size_t i = 0; i < n; ++i) x[i] = Rational(num(rng), den(rng));
    ++result.evaluations;
    if (!f(x).is_zero()) {
      throw Error(ErrorKind::kDegreeBound,
                  "expression vanishes on the grid but not off it; degree "
                  "bounds are too small");
    }
  }
  result.zero = true;
  return result;
}

bool poly_identity_zero(const Poly& p, const std::vector<int>& degree_bounds) {
  if (static_cast<int>(degree_bounds.size()) != p.nvars()) {
    throw Error(ErrorKind::kPrecondition, "one degree bound per variable");
  }
  std::vector<int> actual = p.degrees();
  for (int i = 0; i < p.nvars(); ++i) {
    if (actual[i] > degree_bounds[i]) {
      throw Error(ErrorKind::kDegreeBound,
                  "degree of " + p.vars()[i] + " is " +
                      std::to_string(actual[i]) + ", bound " +
                      std::to_string(degree_bounds[i]));
    }
  }
  return grid_identity_zero(degree_bounds, [&p](const std::vector<Rational>& x) {
           return p.evaluate(x);
         }).zero;
}

}  // namespace bibennett
