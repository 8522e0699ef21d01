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

// Prismatic (planar) and pyramidal (k = 0) limits of coupled Bennett pairs,
// with class labels of flexible biprisms and bipyramids.

#ifndef BIBENNETT_LIMITS_HPP_
#define BIBENNETT_LIMITS_HPP_

#include <array>
#include <set>
#include <string>
#include <vector>

#include "bibennett/families.hpp"
#include "bibennett/properties.hpp"

namespace bibennett {

enum class LimitKind { kPrismaticAnti, kPrismaticPara, kPyramidal };

// Bipyramid classes I1..I3 and biprism classes III1..III4.
enum class ClassLabel {
  kI1, kI2, kI3, kIII1, kIII2i, kIII2ii, kIII3, kIII4i, kIII4ii
};

const char* limit_kind_name(LimitKind k);
const char* class_label_name(ClassLabel c);

struct LimitStructure {
  LimitKind kind = LimitKind::kPrismaticAnti;
  Family source = Family::kA;
  BiBennett<Rational> coupling;
  std::set<ClassLabel> labels;
  // Prismatic A/B: whether the extra isogonality condition holds.
  bool isogonal_compatible = false;

  bool has(ClassLabel c) const { return labels.count(c) > 0; }
};

// Family A uses mu12, mu23, mu34 and solves for mu14; family B uses mu23 and
// mu34. Throws kTrivial for the self-coupling branch.
LimitStructure prismatic_limit_ab(Family family, LimitKind kind,
                                  const Rational& d1, const Rational& d2,
                                  const MuSet<Rational>& mu);

// The extra isogonality product for family A prismatic limits.
Rational prismatic_isogonal_condition(LimitKind kind, const Rational& d1,
                                      const Rational& d2,
                                      const MuSet<Rational>& mu);

LimitStructure prismatic_limit_c(LimitKind kind, const Rational& d1,
                                 const Rational& d2, const Rational& mu14,
                                 const Rational& mu12, int s, int branch = -1);

// Family A: mu decides (a1, a2). Family B: design plus mu23, mu34.
// Family C: design plus mu14, mu12 and s. The design is rebuilt with k = 0.
LimitStructure pyramidal_limit(Family family, const BennettDesign<Rational>& d,
                               const MuSet<Rational>& mu, int s = 1,
                               int branch = -1);

// Geometric predicates behind each label, evaluated on the coupled pose.
struct LabelCheck {
  ClassLabel label;
  bool holds = false;
  double residual = 0.0;
};

std::vector<LabelCheck> verify_labels(const LimitStructure& ls, double tau,
                                      double tol = 1e-9);

// The octahedron of a pyramidal limit: the two apices and the shared quad.
struct Octahedron {
  Vec3<double> apex, hat_apex;
  SkewQuad<double> quad;
};
Octahedron octahedron(const CoupledPose& cp);

// Residuals of the three bipyramid types; zero means the type applies.
double common_line_residual(const Octahedron& o);
double plane_symmetry_residual(const Octahedron& o);
double voss_residual(const Octahedron& o);

}  // namespace bibennett

#endif  // BIBENNETT_LIMITS_HPP_
