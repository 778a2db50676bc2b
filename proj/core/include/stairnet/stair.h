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

#ifndef STAIRNET_STAIR_H_
#define STAIRNET_STAIR_H_

#include <cstdint>
#include <vector>

#include "stairnet/exact.h"
#include "stairnet/limits.h"

namespace stairnet {

struct Segment {
  Point from;
  Point to;
};

// Axis-parallel monotone path from `start` to `end`: rises in the last
// coordinate first, then recursively in the remaining ones. At most d
// segments, zero-length pieces dropped.
struct StairPath {
  Point start;
  Point end;
  std::vector<Segment> segments;

  // start, the segment endpoints in order (so end last).
  std::vector<Point> Vertices() const;
};

StairPath MakeStairPath(const Point& a, const Point& b);

// Bit j (0 <= j <= d) is set iff b has type j with respect to a: type 0 means
// b <= a coordinatewise; type j >= 1 means b_j >= a_j and b_i <= a_i for all
// i > j (coordinates 1-based).
uint32_t PointTypeMask(const Point& b, const Point& a);
std::vector<int> PointTypes(const Point& b, const Point& a);

// x lies in the stair-convex hull of X iff X holds a point of every type
// 0..d with respect to x.
bool SconvContains(const PointSet& x_set, const Point& x);

// Decides whether the stair-convex hulls of P and Q meet. P and Q must not
// share a coordinate value on any axis (PreconditionError otherwise).
bool SconvIntersects(const PointSet& p, const PointSet& q,
                     const Limits& limits = Limits());

// Ordinary convex hull membership, decided by exact solves over subsets of at
// most d+1 points. |X| is capped by limits.max_conv_points.
bool ConvContains(const PointSet& x_set, const Point& x,
                  const Limits& limits = Limits());

// Whether conv(P) and conv(Q) meet, via exact feasibility of
// sum a_i p_i = sum b_j q_j, sum a_i = sum b_j = 1, a, b >= 0 over supports
// of total size at most d+2.
bool ConvIntersects(const PointSet& p, const PointSet& q,
                    const Limits& limits = Limits());

}  // namespace stairnet

#endif  // STAIRNET_STAIR_H_
