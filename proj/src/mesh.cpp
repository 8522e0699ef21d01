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

#include "bibennett/mesh.hpp"

#include <cmath>
#include <cstdio>

#include "bibennett/error.hpp"

namespace bibennett {

void TubeMesh::append(const TubeMesh& part, const std::string& group) {
  size_t offset = vertices.size();
  vertices.insert(vertices.end(), part.vertices.begin(), part.vertices.end());
  MeshGroup g{group, faces.size(), part.faces.size()};
  for (const auto& f : part.faces) {
    faces.push_back({f[0] + offset, f[1] + offset, f[2] + offset, f[3] + offset});
  }
  groups.push_back(g);
}

void TubeMesh::merge(const TubeMesh& other) {
  size_t voff = vertices.size(), foff = faces.size();
  vertices.insert(vertices.end(), other.vertices.begin(), other.vertices.end());
  for (const auto& f : other.faces) {
    faces.push_back({f[0] + voff, f[1] + voff, f[2] + voff, f[3] + voff});
  }
  for (MeshGroup g : other.groups) {
    g.first_face += foff;
    groups.push_back(g);
  }
}

TubeMesh hp_patch(const std::array<Vec3<double>, 4>& q, int n) {
  if (n < 1) throw Error(ErrorKind::kPrecondition, "patch density n must be >= 1");
  TubeMesh m;
  m.vertices.reserve(static_cast<size_t>((n + 1) * (n + 1)));
  for (int j = 0; j <= n; ++j) {
    double v = static_cast<double>(j) / n;
    for (int i = 0; i <= n; ++i) {
      double u = static_cast<double>(i) / n;
      m.vertices.push_back(q[0] * ((1 - u) * (1 - v)) + q[1] * (u * (1 - v)) +
                           q[2] * (u * v) + q[3] * ((1 - u) * v));
    }
  }
  auto idx = [n](int i, int j) { return static_cast<size_t>(j * (n + 1) + i); };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      m.faces.push_back({idx(i, j), idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1)});
    }
  }
  return m;
}

double hp_residual(const TubeMesh& patch, const std::array<Vec3<double>, 4>& q,
                   int n) {
  // Evaluated in the monomial form X = Q0 + u a + v b + u v c.
  Vec3<double> a = q[1] - q[0], b = q[3] - q[0], c = q[0] - q[1] + q[2] - q[3];
  double worst = 0.0;
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      double u = static_cast<double>(i) / n, v = static_cast<double>(j) / n;
      Vec3<double> x = q[0] + a * u + b * v + c * (u * v);
      worst = std::max(worst, norm(x - patch.vertices.at(j * (n + 1) + i)));
    }
  }
  return worst;
}

double mean_edge(const SkewQuad<double>& q) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += norm(q[(i + 1) % 4] - q[i]);
  return s / 4.0;
}

TubeMesh bennett_ribbons(const Pose<double>& pose, const SkewQuad<double>& quad,
                         const std::string& prefix, double width, int n) {
  TubeMesh mesh;
  for (int i = 0; i < 4; ++i) {
    int j = (i + 1) % 4;
    Vec3<double> ri = normalized(pose.r(i)), rj = normalized(pose.r(j));
    std::array<Vec3<double>, 4> q{quad[i] - ri * width, quad[j] - rj * width,
                                  quad[j] + rj * width, quad[i] + ri * width};
    mesh.append(hp_patch(q, n),
                prefix + "_" + axis_name(i) + "_" + axis_name(j));
  }
  return mesh;
}

TubeMesh coupled_ribbons(const CoupledPose& cp, const RibbonOptions& opt) {
  double width = opt.width;
  if (!(width > 0)) {
    width = 0.1 * mean_edge(cp.quad);
    if (!(width > 0)) width = 0.1;
  }
  Pose<double> hat;
  for (int v = 0; v < 4; ++v) hat.axes[v] = cp.hat_axis(v);
  TubeMesh mesh = bennett_ribbons(cp.pose, cp.quad, "B", width, opt.n);
  mesh.merge(bennett_ribbons(hat, cp.quad, "H", width, opt.n));
  return mesh;
}

std::string to_obj(const TubeMesh& mesh) {
  std::string out;
  out += "# bibennett ribbon mesh\n";
  char buf[128];
  for (const auto& v : mesh.vertices) {
    // Adding 0.0 folds -0 into 0 so equal geometry prints equal text.
    std::snprintf(buf, sizeof buf, "v %.12g %.12g %.12g\n", v[0] + 0.0,
                  v[1] + 0.0, v[2] + 0.0);
    out += buf;
  }
  for (const MeshGroup& g : mesh.groups) {
    out += "g " + g.name + "\n";
    for (size_t f = g.first_face; f < g.first_face + g.face_count; ++f) {
      const auto& fc = mesh.faces[f];
      std::snprintf(buf, sizeof buf, "f %zu %zu %zu %zu\n", fc[0] + 1, fc[1] + 1,
                    fc[2] + 1, fc[3] + 1);
      out += buf;
    }
  }
  return out;
}

bool obj_lint(const TubeMesh& mesh) {
  for (const auto& v : mesh.vertices) {
    for (int i = 0; i < 3; ++i)
      if (!std::isfinite(v[i])) return false;
  }
  for (const auto& f : mesh.faces) {
    for (size_t k : f)
      if (k >= mesh.vertices.size()) return false;
  }
  return true;
}

}  // namespace bibennett
