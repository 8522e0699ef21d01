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

#include "bibennett/bennett.hpp"

#include <algorithm>
#include <vector>

namespace bibennett {

const char* axis_name(int i) {
  static const char* kNames[4] = {"14", "12", "23", "34"};
  return kNames[((i % 4) + 4) % 4];
}

const char* planar_case_name(PlanarCase c) {
  switch (c) {
    case PlanarCase::k1a: return "1a";
    case PlanarCase::k1b: return "1b";
    case PlanarCase::k2a: return "2a";
    case PlanarCase::k2b: return "2b";
  }
  return "?";
}

PlanarCase parse_planar_case(const std::string& s) {
  if (s == "1a") return PlanarCase::k1a;
  if (s == "1b") return PlanarCase::k1b;
  if (s == "2a") return PlanarCase::k2a;
  if (s == "2b") return PlanarCase::k2b;
  throw Error(ErrorKind::kParse, "unknown planar case '" + s + "'");
}

std::array<bool, 2> planar_flips(PlanarCase c) {
  switch (c) {
    case PlanarCase::k1a: return {true, true};
    case PlanarCase::k1b: return {true, false};
    case PlanarCase::k2a: return {false, false};
    case PlanarCase::k2b: return {false, true};
  }
  return {false, false};
}

const char* indicatrix_kind_name(IndicatrixReport::Kind k) {
  switch (k) {
    case IndicatrixReport::Kind::kVHedral: return "V-hedral";
    case IndicatrixReport::Kind::kAntiVHedral: return "anti-V-hedral";
    case IndicatrixReport::Kind::kOther: return "other";
  }
  return "?";
}

IndicatrixReport indicatrix(const BennettDesign<double>& d, double tau,
                            double tol) {
  BennettDesign<double> sph = d;
  sph.k = 0.0;
  Pose<double> p = frame(sph, tau);
  IndicatrixReport rep;
  for (int i = 0; i < 4; ++i) {
    double c = dot(p.r(i), p.r(next_axis(i)));
    rep.arcs[i] = std::acos(std::clamp(c, -1.0, 1.0));
  }
  const auto& a = rep.arcs;
  if (std::fabs(a[0] - a[2]) <= tol && std::fabs(a[1] - a[3]) <= tol) {
    rep.kind = IndicatrixReport::Kind::kVHedral;
  } else if (std::fabs(a[0] + a[2] - M_PI) <= tol &&
             std::fabs(a[1] + a[3] - M_PI) <= tol) {
    rep.kind = IndicatrixReport::Kind::kAntiVHedral;
  }
  rep.adjacent_supplementary = std::fabs(a[0] + a[1] - M_PI) <= tol;
  return rep;
}

namespace {

// Coefficients (t^2, t, 1) of the quadric q restricted to the line F + t r,
// together with the 9 rows used to fit q.
std::array<std::array<double, 10>, 3> line_rows(const Axis<double>& ax) {
  const auto& F = ax.F;
  const auto& r = ax.r;
  std::array<std::array<double, 10>, 3> rows{};
  rows[0] = {r[0] * r[0], r[1] * r[1], r[2] * r[2], r[0] * r[1],
             r[0] * r[2], r[1] * r[2], 0, 0, 0, 0};
  rows[1] = {2 * F[0] * r[0],
             2 * F[1] * r[1],
             2 * F[2] * r[2],
             F[0] * r[1] + F[1] * r[0],
             F[0] * r[2] + F[2] * r[0],
             F[1] * r[2] + F[2] * r[1],
             r[0],
             r[1],
             r[2],
             0};
  rows[2] = {F[0] * F[0], F[1] * F[1], F[2] * F[2], F[0] * F[1], F[0] * F[2],
             F[1] * F[2], F[0],        F[1],        F[2],        1};
  return rows;
}

}  // namespace

double regulus_residual(const Pose<double>& p, double tol) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      double s = side_product(p.axes[i], p.axes[j]);
      double scale = 1.0 + norm(p.F(i) - p.F(j));
      if (std::fabs(s) <= tol * scale) {
        throw Error(ErrorKind::kDegenerateQuadric,
                    std::string("axes ") + axis_name(i) + " and " +
                        axis_name(j) +
                        " intersect; the regulus splits into two pencils");
      }
    }
  }
  std::vector<std::array<double, 10>> m;
  for (int i = 0; i < 3; ++i) {
    auto rows = line_rows(p.axes[i]);
    for (auto& row : rows) {
      double n = 0;
      for (double x : row) n = std::max(n, std::fabs(x));
      if (n > 0) {
        for (double& x : row) x /= n;
      }
      m.push_back(row);
    }
  }
  // Row reduction with partial pivoting; one free column expected.
  std::vector<int> pivot_col;
  std::vector<int> free_cols;
  size_t row = 0;
  for (int col = 0; col < 10; ++col) {
    size_t best = row;
    for (size_t r = row; r < m.size(); ++r) {
      if (std::fabs(m[r][col]) > std::fabs(m[best][col])) best = r;
    }
    if (row >= m.size() || std::fabs(m[best][col]) < 1e-10) {
      free_cols.push_back(col);
      continue;
    }
    std::swap(m[best], m[row]);
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row) continue;
      double f = m[r][col] / m[row][col];
      for (int c = 0; c < 10; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (free_cols.size() != 1) {
    throw Error(ErrorKind::kDegenerateQuadric,
                "quadric through three axes is not unique");
  }
  std::array<double, 10> q{};
  q[free_cols[0]] = 1.0;
  for (size_t r = 0; r < pivot_col.size(); ++r) {
    q[pivot_col[r]] = -m[r][free_cols[0]] / m[r][pivot_col[r]];
  }
  double qn = 0;
  for (double x : q) qn += x * x;
  qn = std::sqrt(qn);
  double res = 0;
  for (const auto& row : line_rows(p.axes[3])) {
    double v = 0;
    for (int c = 0; c < 10; ++c) v += row[c] * q[c];
    res = std::max(res, std::fabs(v) / qn);
  }
  return res;
}

}  // namespace bibennett
