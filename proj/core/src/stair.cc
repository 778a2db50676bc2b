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

#include "stairnet/stair.h"

#include <algorithm>
#include <set>
#include <string>

#include "stairnet/combinatorics.h"
#include "stairnet/errors.h"
#include "stairnet/linear.h"

namespace stairnet {
namespace {

// Vertices of the path from a to b using coordinates [0, k); coordinates at
// index >= k already agree.
std::vector<Point> PathVertices(const Point& a, const Point& b, int k) {
  if (k == 0) return {a};
  if (a[k - 1] <= b[k - 1]) {
    std::vector<Point> out = {a};
    std::vector<Point> rest = PathVertices(a.With(k - 1, b[k - 1]), b, k - 1);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  std::vector<Point> out = PathVertices(b, a, k);
  std::reverse(out.begin(), out.end());
  return out;
}

void CheckNonempty(const PointSet& s, const char* what) {
  if (s.empty()) throw PreconditionError(std::string(what) + " is empty");
}

void CheckSetDims(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("point sets of dimension " +
                            std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
  }
}

void CheckPointDim(const PointSet& s, const Point& x) {
  if (s.dim() != x.dim()) {
    throw DimensionMismatch("point of dimension " + std::to_string(x.dim()) +
                            " against set of dimension " +
                            std::to_string(s.dim()));
  }
}

}  // namespace

std::vector<Point> StairPath::Vertices() const {
  std::vector<Point> out = {start};
  for (const Segment& s : segments) out.push_back(s.to);
  return out;
}

StairPath MakeStairPath(const Point& a, const Point& b) {
  CheckSameDim(a, b);
  std::vector<Point> verts = PathVertices(a, b, a.dim());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  StairPath path{a, b, {}};
  for (size_t i = 0; i + 1 < verts.size(); ++i) {
    path.segments.push_back({verts[i], verts[i + 1]});
  }
  return path;
}

uint32_t PointTypeMask(const Point& b, const Point& a) {
  CheckSameDim(a, b);
  const int d = a.dim();
  if (d > 31) throw PreconditionError("dimension above 31");
  // s = highest 1-based axis with b_s > a_s, 0 if none.
  int s = 0;
  for (int i = d; i >= 1; --i) {
    if (b[i - 1] > a[i - 1]) {
      s = i;
      break;
    }
  }
  uint32_t mask = s == 0 ? 1u : 0u;
  for (int j = std::max(s, 1); j <= d; ++j) {
    if (b[j - 1] >= a[j - 1]) mask |= 1u << j;
  }
  return mask;
}

std::vector<int> PointTypes(const Point& b, const Point& a) {
  uint32_t mask = PointTypeMask(b, a);
  std::vector<int> out;
  for (int j = 0; j <= a.dim(); ++j) {
    if (mask & (1u << j)) out.push_back(j);
  }
  return out;
}

bool SconvContains(const PointSet& x_set, const Point& x) {
  CheckPointDim(x_set, x);
  const uint32_t full = (1u << (x.dim() + 1)) - 1;
  uint32_t seen = 0;
  for (const Point& b : x_set) {
    seen |= PointTypeMask(b, x);
    if (seen == full) return true;
  }
  return false;
}

bool SconvIntersects(const PointSet& p, const PointSet& q,
                     const Limits& limits) {
  CheckSetDims(p, q);
  CheckNonempty(p, "P");
  CheckNonempty(q, "Q");
  const int d = p.dim();
  for (int i = 0; i < d; ++i) {
    std::set<Rational> values;
    for (const Point& a : p) values.insert(a[i]);
    for (const Point& b : q) {
      if (values.count(b[i])) {
        throw PreconditionError("P and Q share coordinate " +
                                ShortRational(b[i]) + " on axis " +
                                std::to_string(i + 1));
      }
    }
  }
  const int total = static_cast<int>(p.size() + q.size());
  if (total < d + 2) return false;

  std::vector<Point> all = p.points();
  all.insert(all.end(), q.begin(), q.end());
  const int np = static_cast<int>(p.size());
  BigInt candidates = 1;
  for (int i = 0; i < d; ++i) candidates *= d + 2;
  if (Binomial(total, d + 2) * candidates > limits.max_enumeration) {
    throw GuardError("stair hull intersection needs C(" +
                     std::to_string(total) + "," + std::to_string(d + 2) +
                     ") sub-pairs times (d+2)^d candidates, above " +
                     std::to_string(limits.max_enumeration));
  }

  return ForEachCombination(total, d + 2, [&](std::span<const int> pick) {
    PointSet ps(d), qs(d);
    for (int idx : pick) {
      if (idx < np) {
        ps.Add(all[idx]);
      } else {
        qs.Add(all[idx]);
      }
    }
    if (ps.empty() || qs.empty()) return false;
    // Any common point shares all d coordinates with the d+2 chosen points.
    std::vector<std::vector<Rational>> axis(d);
    for (int i = 0; i < d; ++i) {
      for (int idx : pick) axis[i].push_back(all[idx][i]);
      std::sort(axis[i].begin(), axis[i].end());
      axis[i].erase(std::unique(axis[i].begin(), axis[i].end()),
                    axis[i].end());
    }
    std::vector<size_t> digit(d, 0);
    std::vector<Rational> coords(d);
    while (true) {
      for (int i = 0; i < d; ++i) coords[i] = axis[i][digit[i]];
      Point x(coords);
      if (SconvContains(ps, x) && SconvContains(qs, x)) return true;
      int i = 0;
      while (i < d && ++digit[i] == axis[i].size()) digit[i++] = 0;
      if (i == d) return false;
    }
  });
}

bool ConvContains(const PointSet& x_set, const Point& x,
                  const Limits& limits) {
  CheckPointDim(x_set, x);
  CheckNonempty(x_set, "X");
  if (static_cast<int>(x_set.size()) > limits.max_conv_points) {
    throw GuardError("convex hull membership over " +
                     std::to_string(x_set.size()) + " points exceeds cap " +
                     std::to_string(limits.max_conv_points));
  }
  const int d = x.dim();
  // Bounding-box rejection and vertex hit first.
  for (int i = 0; i < d; ++i) {
    bool below = false, above = false;
    for (const Point& p : x_set) {
      below |= p[i] <= x[i];
      above |= p[i] >= x[i];
    }
    if (!below || !above) return false;
  }
  for (const Point& p : x_set) {
    if (p == x) return true;
  }
  std::vector<std::vector<Rational>> columns;
  for (const Point& p : x_set) {
    std::vector<Rational> col(p.coords().begin(), p.coords().end());
    col.push_back(1);
    columns.push_back(std::move(col));
  }
  std::vector<Rational> rhs(x.coords().begin(), x.coords().end());
  rhs.push_back(1);
  return ExactSystem(columns, rhs).FindNonnegative(d + 1).has_value();
}

bool ConvIntersects(const PointSet& p, const PointSet& q,
                    const Limits& limits) {
  CheckSetDims(p, q);
  CheckNonempty(p, "P");
  CheckNonempty(q, "Q");
  if (static_cast<int>(p.size() + q.size()) > limits.max_conv_points) {
    throw GuardError("convex hull intersection over " +
                     std::to_string(p.size() + q.size()) +
                     " points exceeds cap " +
                     std::to_string(limits.max_conv_points));
  }
  const int d = p.dim();
  for (int i = 0; i < d; ++i) {
    Rational pmin = p[0][i], pmax = p[0][i], qmin = q[0][i], qmax = q[0][i];
    for (const Point& a : p) {
      pmin = std::min(pmin, a[i]);
      pmax = std::max(pmax, a[i]);
    }
    for (const Point& b : q) {
      qmin = std::min(qmin, b[i]);
      qmax = std::max(qmax, b[i]);
    }
    if (pmax < qmin || qmax < pmin) return false;
  }
  // Columns (p, 1, 0) and (-q, 0, 1) against right-hand side (0, 1, 1).
  std::vector<std::vector<Rational>> columns;
  for (const Point& a : p) {
    std::vector<Rational> col(a.coords().begin(), a.coords().end());
    col.push_back(1);
    col.push_back(0);
    columns.push_back(std::move(col));
  }
  for (const Point& b : q) {
    std::vector<Rational> col;
    for (const Rational& v : b.coords()) col.push_back(-v);
    col.push_back(0);
    col.push_back(1);
    columns.push_back(std::move(col));
  }
  std::vector<Rational> rhs(d + 2);
  rhs[d] = 1;
  rhs[d + 1] = 1;
  return ExactSystem(columns, rhs).FindNonnegative(d + 2).has_value();
}

}  // namespace stairnet
