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

#ifndef STAIRNET_BOX_UNION_H_
#define STAIRNET_BOX_UNION_H_

#include <cstdint>
#include <vector>

#include "stairnet/exact.h"
#include "stairnet/limits.h"

namespace stairnet {

// Closed axis-parallel box [lo_1, hi_1] x ... x [lo_d, hi_d]; degenerate
// sides (lo_i == hi_i) are allowed.
class AxisBox {
 public:
  AxisBox() = default;  // 0-dimensional placeholder
  AxisBox(Point lo, Point hi);

  int dim() const { return lo_.dim(); }
  const Point& lo() const { return lo_; }
  const Point& hi() const { return hi_; }

  Rational Volume() const;
  bool Contains(const Point& p) const;
  // Whether the closed box contains at least one point of `points`.
  bool HitsAny(const PointSet& points) const;

  friend bool operator==(const AxisBox& a, const AxisBox& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Point lo_;
  Point hi_;
};

// Finite union of closed boxes in a fixed dimension. All set-level queries
// run on the exact decomposition of space into open cells induced by the box
// coordinates, so overlaps never need inclusion-exclusion.
class BoxUnion {
 public:
  explicit BoxUnion(int dim) : dim_(dim) {}
  BoxUnion(int dim, std::vector<AxisBox> boxes);

  int dim() const { return dim_; }
  const std::vector<AxisBox>& boxes() const { return boxes_; }
  bool empty() const { return boxes_.empty(); }

  void Add(AxisBox box);
  bool Contains(const Point& p) const;  // closed membership
  // True iff no point of `points` lies in the union.
  bool AvoidsAll(const PointSet& points) const;

 private:
  int dim_;
  std::vector<AxisBox> boxes_;
};

Rational Volume(const BoxUnion& s, const Limits& limits = Limits());

// Number of points of {0, 1/(m-1), ..., 1}^d lying in s. Requires s within
// the unit cube and m >= 2.
int64_t GridCount(const BoxUnion& s, int m, const Limits& limits = Limits());

// Exact stair-convexity test. Recursively on the last axis: the heights with
// nonempty slices must form an interval, lower slices must be contained in
// higher ones, and every slice must itself be stair-convex.
bool IsStairConvex(const BoxUnion& s, const Limits& limits = Limits());

// {p in s : p + [0, delta]^d is contained in s}, as a box union.
BoxUnion Erode(const BoxUnion& s, const Rational& delta,
               const Limits& limits = Limits());

// Whether a and b describe the same point set.
bool SameSet(const BoxUnion& a, const BoxUnion& b,
             const Limits& limits = Limits());

// The stair-convex hull of a nonempty finite set, as a box union.
BoxUnion StairHull(const PointSet& x, const Limits& limits = Limits());

}  // namespace stairnet

#endif  // STAIRNET_BOX_UNION_H_
