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

#ifndef STAIRNET_STRETCHED_GRID_H_
#define STAIRNET_STRETCHED_GRID_H_

#include <vector>

#include "stairnet/box_union.h"
#include "stairnet/exact.h"
#include "stairnet/limits.h"

namespace stairnet {

// A d-dimensional stretched grid with side m: the product of coordinate lists
// X_1, ..., X_d, each starting at 1 and growing so fast that
// K_i * x_ij <= x_i(j+1), where K_1 = 2^d and K_i = 2^d * x_(i-1)m.
// Indices below are 0-based: X[i][j] is x_(i+1)(j+1).
struct GridSpec {
  int d = 0;
  int m = 0;
  std::vector<BigInt> K;
  std::vector<std::vector<Rational>> X;

  // [1, x_1m] x ... x [1, x_dm].
  AxisBox Bounds() const;
  bool InBounds(const Point& p) const;
  Point GridPoint(const std::vector<int>& index) const;
  // All m^d grid points; guarded by limits.max_enumeration.
  PointSet AllPoints(const Limits& limits = Limits()) const;
};

// Minimal grid x_ij = K_i^(j-1). Refuses grids whose largest coordinate has
// more than limits.max_grid_bits bits.
GridSpec BuildGrid(int d, int m, const Limits& limits = Limits());

// Grid with x_ij = K_i^(2(j-1)): every consecutive ratio is K_i^2, leaving
// room for non-grid points that are far apart from all grid points.
GridSpec SpaciousGrid(int d, int m, const Limits& limits = Limits());

// Checks a user-supplied coordinate table (d lists of m values), derives K
// and returns the spec. Throws PreconditionError on any violated condition.
GridSpec ValidateGrid(std::vector<std::vector<Rational>> x);

// For every axis, K_i * min(p_i, q_i) <= max(p_i, q_i). Both points must lie
// in the bounding box.
bool FarApart(const Point& p, const Point& q, const GridSpec& spec);
bool FarApartSets(const PointSet& p, const PointSet& q, const GridSpec& spec);

// Coordinatewise piecewise-affine bijection from the bounding box onto the
// unit cube sending [x_ij, x_i(j+1)] onto [(j-1)/(m-1), j/(m-1)].
Point PiMap(const Point& p, const GridSpec& spec);
Point PiInverse(const Point& u, const GridSpec& spec);
PointSet PiMap(const PointSet& p, const GridSpec& spec);
PointSet PiInverse(const PointSet& u, const GridSpec& spec);

// The first n diagonal grid points (x_1j, ..., x_dj), in increasing order.
std::vector<Point> Diagonal(const GridSpec& spec, int n);

// True iff no d+1 of the points lie on a common hyperplane, decided by exact
// determinants of all (d+1)-subsets. Needs at least d+1 points.
bool CheckCurvePosition(const std::vector<Point>& points,
                        const Limits& limits = Limits());

}  // namespace stairnet

#endif  // STAIRNET_STRETCHED_GRID_H_
