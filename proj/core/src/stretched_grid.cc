// Copyright 2026 The Stairnet Authors
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

#include "stairnet/stretched_grid.h"

#include <algorithm>
#include <string>

#include "stairnet/combinatorics.h"
#include "stairnet/errors.h"
#include "stairnet/linear.h"

namespace stairnet {
namespace {

// Consecutive coordinates on axis i differ by the factor K_i^stretch, with
// K_i = 2^(k_i), k_1 = d and k_(i+1) = d + stretch (m-1) k_i.
GridSpec BuildPowerGrid(int d, int m, int stretch, const Limits& limits) {
  if (d < 1) throw PreconditionError("grid dimension must be >= 1");
  if (m < 2) throw PreconditionError("grid side must be >= 2");
  std::vector<BigInt> k(d);
  k[0] = d;
  for (int i = 1; i < d; ++i) k[i] = d + BigInt(stretch * (m - 1)) * k[i - 1];
  BigInt top_bits = BigInt(stretch * (m - 1)) * k[d - 1] + 1;
  if (top_bits > limits.max_grid_bits) {
    throw GuardError("stretched grid d=" + std::to_string(d) +
                     " m=" + std::to_string(m) + " needs " +
                     top_bits.get_str() + "-bit coordinates (cap " +
                     std::to_string(limits.max_grid_bits) + ")");
  }
  GridSpec spec;
  spec.d = d;
  spec.m = m;
  spec.K.resize(d);
  spec.X.assign(d, std::vector<Rational>(m));
  for (int i = 0; i < d; ++i) {
    long ki = k[i].get_si();
    spec.K[i] = Pow2(ki).get_num();
    for (int j = 0; j < m; ++j) spec.X[i][j] = Pow2(ki * stretch * j);
  }
  return spec;
}

void CheckInBounds(const Point& p, const GridSpec& spec) {
  if (p.dim() != spec.d) {
    throw DimensionMismatch("point of dimension " + std::to_string(p.dim()) +
                            " on a grid of dimension " +
                            std::to_string(spec.d));
  }
  if (!spec.InBounds(p)) {
    throw PreconditionError("point " + p.ToString() +
                            " outside the grid bounding box");
  }
}

}  // namespace

AxisBox GridSpec::Bounds() const {
  std::vector<Rational> lo(d, Rational(1)), hi(d);
  for (int i = 0; i < d; ++i) hi[i] = X[i].back();
  return AxisBox(Point(lo), Point(hi));
}

bool GridSpec::InBounds(const Point& p) const {
  if (p.dim() != d) return false;
  for (int i = 0; i < d; ++i) {
    if (p[i] < X[i].front() || p[i] > X[i].back()) return false;
  }
  return true;
}

Point GridSpec::GridPoint(const std::vector<int>& index) const {
  if (static_cast<int>(index.size()) != d) {
    throw DimensionMismatch("grid index of wrong length");
  }
  std::vector<Rational> c(d);
  for (int i = 0; i < d; ++i) {
    if (index[i] < 0 || index[i] >= m) {
      throw PreconditionError("grid index out of range");
    }
    c[i] = X[i][index[i]];
  }
  return Point(c);
}

PointSet GridSpec::AllPoints(const Limits& limits) const {
  BigInt total = 1;
  for (int i = 0; i < d; ++i) total *= m;
  if (total > limits.max_enumeration) {
    throw GuardError("grid has " + total.get_str() + " points");
  }
  PointSet out(d);
  std::vector<int> index(d, 0);
  while (true) {
    out.Add(GridPoint(index));
    int i = 0;
    while (i < d && ++index[i] == m) index[i++] = 0;
    if (i == d) break;
  }
  return out;
}

GridSpec BuildGrid(int d, int m, const Limits& limits) {
  return BuildPowerGrid(d, m, 1, limits);
}

GridSpec SpaciousGrid(int d, int m, const Limits& limits) {
  return BuildPowerGrid(d, m, 2, limits);
}

GridSpec ValidateGrid(std::vector<std::vector<Rational>> x) {
  const int d = static_cast<int>(x.size());
  if (d < 1) throw PreconditionError("grid needs at least one axis");
  const int m = static_cast<int>(x[0].size());
  if (m < 2) throw PreconditionError("grid side must be >= 2");
  GridSpec spec;
  spec.d = d;
  spec.m = m;
  spec.K.resize(d);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(x[i].size()) != m) {
      throw PreconditionError("axis " + std::to_string(i + 1) +
                              " has a different number of coordinates");
    }
    if (x[i][0] != 1) {
      throw PreconditionError("axis " + std::to_string(i + 1) +
                              " does not start at 1");
    }
    Rational k = i == 0 ? Pow2(d) : Pow2(d) * x[i - 1].back();
    if (k.get_den() != 1) {
      throw PreconditionError("K_" + std::to_string(i + 1) +
                              " is not an integer");
    }
    spec.K[i] = k.get_num();
    for (int j = 0; j + 1 < m; ++j) {
      if (k * x[i][j] > x[i][j + 1]) {
        throw PreconditionError(
            "x_" + std::to_string(i + 1) + "," + std::to_string(j + 2) +
            " = " + ShortRational(x[i][j + 1]) + " is below K_" +
            std::to_string(i + 1) + " times its predecessor");
      }
    }
  }
  spec.X = std::move(x);
  return spec;
}

bool FarApart(const Point& p, const Point& q, const GridSpec& spec) {
  CheckInBounds(p, spec);
  CheckInBounds(q, spec);
  for (int i = 0; i < spec.d; ++i) {
    const Rational& lo = std::min(p[i], q[i]);
    const Rational& hi = std::max(p[i], q[i]);
    if (spec.K[i] * lo > hi) return false;
  }
  return true;
}

bool FarApartSets(const PointSet& p, const PointSet& q, const GridSpec& spec) {
  for (const Point& a : p) {
    for (const Point& b : q) {
      if (!FarApart(a, b, spec)) return false;
    }
  }
  return true;
}

Point PiMap(const Point& p, const GridSpec& spec) {
  CheckInBounds(p, spec);
  std::vector<Rational> u(spec.d);
  for (int i = 0; i < spec.d; ++i) {
    const auto& xs = spec.X[i];
    // Largest j <= m-2 with xs[j] <= p_i.
    int j = static_cast<int>(std::upper_bound(xs.begin(), xs.end(), p[i]) -
                             xs.begin()) - 1;
    j = std::min(j, spec.m - 2);
    Rational frac = (p[i] - xs[j]) / (xs[j + 1] - xs[j]);
    u[i] = (frac + j) / (spec.m - 1);
  }
  return Point(u);
}

Point PiInverse(const Point& u, const GridSpec& spec) {
  if (u.dim() != spec.d) throw DimensionMismatch("point/grid dimension");
  std::vector<Rational> p(spec.d);
  for (int i = 0; i < spec.d; ++i) {
    if (sgn(u[i]) < 0 || u[i] > 1) {
      throw PreconditionError("point " + u.ToString() +
                              " outside the unit cube");
    }
    const auto& xs = spec.X[i];
    Rational t = u[i] * (spec.m - 1);
    long j = std::min<long>(Floor(t).get_si(), spec.m - 2);
    p[i] = xs[j] + (t - j) * (xs[j + 1] - xs[j]);
  }
  return Point(p);
}

PointSet PiMap(const PointSet& p, const GridSpec& spec) {
  PointSet out(spec.d);
  for (const Point& a : p) out.Add(PiMap(a, spec));
  return out;
}

PointSet PiInverse(const PointSet& u, const GridSpec& spec) {
  PointSet out(spec.d);
  for (const Point& a : u) out.Add(PiInverse(a, spec));
  return out;
}

std::vector<Point> Diagonal(const GridSpec& spec, int n) {
  if (n < 0 || n > spec.m) {
    throw PreconditionError("diagonal length " + std::to_string(n) +
                            " outside [0, m=" + std::to_string(spec.m) + "]");
  }
  std::vector<Point> out;
  for (int j = 0; j < n; ++j) {
    out.push_back(spec.GridPoint(std::vector<int>(spec.d, j)));
  }
  return out;
}

bool CheckCurvePosition(const std::vector<Point>& points,
                        const Limits& limits) {
  if (points.empty()) throw PreconditionError("no points");
  const int d = points[0].dim();
  const int n = static_cast<int>(points.size());
  if (n < d + 1) {
    throw PreconditionError("curve position check needs at least d+1 = " +
                            std::to_string(d + 1) + " points");
  }
  for (const Point& p : points) CheckSameDim(points[0], p);
  if (Binomial(n, d + 1) > limits.max_enumeration) {
    throw GuardError("too many (d+1)-subsets for the curve position check");
  }
  return !ForEachCombination(n, d + 1, [&](std::span<const int> pick) {
    RationalMatrix m;
    for (int idx : pick) {
      std::vector<Rational> row(points[idx].coords().begin(),
                                points[idx].coords().end());
      row.push_back(1);
      m.push_back(std::move(row));
    }
    return sgn(Determinant(m)) == 0;
  });
}

}  // namespace stairnet
