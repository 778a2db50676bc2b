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

#ifndef STAIRNET_SELECTION_H_
#define STAIRNET_SELECTION_H_

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "stairnet/enclosure.h"
#include "stairnet/exact.h"
#include "stairnet/limits.h"
#include "stairnet/stretched_grid.h"

namespace stairnet {

struct RhoValue {
  Rational rho;            // upper bound on C t / (n^3 ln(n^3 / t))
  bool in_theorem_range;   // n^(5/2) ln n <= t
};

// Density parameter of the thin triangle family. Requires
// 1 <= t <= C(n, 3) and C > 0; the asymptotic range n^(5/2) ln n <= t is
// reported, not enforced, since it is empty for small n.
RhoValue RhoFor(int64_t n, const Rational& t, const Rational& c);

// Triangle with vertices (x_i1, y_j1), (x_i2, y_j2), (x_i3, y_j3) of a planar
// stretched grid; indices are 1-based and strictly increasing.
struct IncreasingTriangle {
  int i1, j1, i2, j2, i3, j3;

  int h12() const { return i2 - i1; }
  int h23() const { return i3 - i2; }
  int v12() const { return j2 - j1; }
  int v23() const { return j3 - j2; }
  std::array<int, 4> Dims() const { return {h12(), h23(), v12(), v23()}; }
};

struct TriangleFamily {
  GridSpec spec;
  Rational rho;
  std::vector<IncreasingTriangle> triangles;
};

// All increasing triangles with ceil(m/3) <= i2, j2 <= floor(2m/3), all four
// dimensions in [1, floor(m/3)], and h12 v23 <= rho m^2.
TriangleFamily GenThinTriangles(const GridSpec& spec, const Rational& rho);

// Whether an increasing triangle satisfies all family constraints (checked
// independently of the generator).
bool SatisfiesFamilyConstraints(const IncreasingTriangle& t, int m,
                                const Rational& rho);

// Closed-triangle containment by orientation signs. The fast path decides
// signs in extended precision with a certified error bound and falls back to
// exact arithmetic when the bound is inconclusive.
bool TriangleContains(const Point& a, const Point& b, const Point& c,
                      const Point& q, bool exact_only = false);

int64_t CountContaining(const Point& q, const TriangleFamily& f,
                        bool exact_only = false);
// Counts per dimension class (h12, h23, v12, v23), including classes with a
// zero count.
std::map<std::array<int, 4>, int64_t> CountContainingByClass(
    const Point& q, const TriangleFamily& f, bool exact_only = false);
// Generic version over explicit vertex triples.
int64_t CountContaining(const Point& q,
                        const std::vector<std::array<Point, 3>>& triangles);

struct ClassCount {
  int64_t count = 0;
  int64_t bound = 0;  // h12 v23 + 8m
};

ClassCount ClassCountBound(const Point& q, const TriangleFamily& f,
                           const std::array<int, 4>& dims);
int64_t ClassBound(const std::array<int, 4>& dims, int m);

struct TypeClasses {
  std::vector<int64_t> sizes;  // n_0, ..., n_d
  bool multiplicity = false;   // some point had several types (q shares a
                               // coordinate with X)
};

TypeClasses TypeClassSizes(const Point& q, const PointSet& x);

// Number of affinely independent (d+1)-subsets of X whose convex hull
// contains q; with only_far_apart, only subsets whose vertices are all far
// apart from q in the given grid.
int64_t CountSimplicesContaining(const Point& q, const PointSet& x,
                                 bool only_far_apart, const GridSpec& spec,
                                 const Limits& limits = Limits());

// Seeded probes that share no coordinate with the grid. Each coordinate
// picks a gap (x_ij, x_i(j+1)) uniformly, then a scale 2^e within the gap
// uniformly over the available binary orders of magnitude, then a 32-bit
// dyadic offset inside that scale.
std::vector<Point> SampleProbes(const GridSpec& spec, int count,
                                uint64_t seed);

}  // namespace stairnet

#endif  // STAIRNET_SELECTION_H_
