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

// Ribbon meshes of Bennett tubes built from bilinear (hyperbolic paraboloid)
// patches, and OBJ output.

#ifndef BIBENNETT_MESH_HPP_
#define BIBENNETT_MESH_HPP_

#include <array>
#include <string>
#include <vector>

#include "bibennett/families.hpp"

namespace bibennett {

struct MeshGroup {
  std::string name;
  size_t first_face = 0;
  size_t face_count = 0;
};

struct TubeMesh {
  std::vector<Vec3<double>> vertices;
  std::vector<std::array<size_t, 4>> faces;  // 0-based
  std::vector<MeshGroup> groups;

  // Appends another mesh as one new group.
  void append(const TubeMesh& part, const std::string& group);
  // Appends another mesh keeping its groups.
  void merge(const TubeMesh& other);
};

// X(u, v) = (1-u)(1-v) Q0 + u(1-v) Q1 + u v Q2 + (1-u) v Q3 sampled at
// (i/n, j/n). Vertex (i, j) has index j (n+1) + i.
TubeMesh hp_patch(const std::array<Vec3<double>, 4>& quad, int n);

// Residual of the grid against the bilinear surface through the corners.
double hp_residual(const TubeMesh& patch, const std::array<Vec3<double>, 4>& quad,
                   int n);

struct RibbonOptions {
  int n = 4;
  double width = 0.0;  // <= 0 means 0.1 times the mean edge of the quad
};

// One ribbon per link: the patch P_i - w r_i, P_j - w r_j, P_j + w r_j,
// P_i + w r_i between consecutive axes.
TubeMesh bennett_ribbons(const Pose<double>& pose, const SkewQuad<double>& quad,
                         const std::string& prefix, double width, int n);

// Both Bennett tubes of a coupled pose: 8 groups.
TubeMesh coupled_ribbons(const CoupledPose& cp, const RibbonOptions& opt);

double mean_edge(const SkewQuad<double>& q);

// v / g / f records, 12 significant digits, 1-based indices.
std::string to_obj(const TubeMesh& mesh);

// Structural lint: indices in range and finite coordinates.
bool obj_lint(const TubeMesh& mesh);

}  // namespace bibennett

#endif  // BIBENNETT_MESH_HPP_
