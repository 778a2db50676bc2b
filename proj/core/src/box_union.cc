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

#include "stairnet/box_union.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "cell_grid.h"
#include "stairnet/errors.h"
#include "stairnet/stair.h"

namespace stairnet {
namespace {

bool StairConvexCells(const uint8_t* cells, const std::vector<int>& extent,
                      int k) {
  if (k == 0) return true;
  int64_t slice = 1;
  for (int i = 0; i < k - 1; ++i) slice *= extent[i];
  const int layers = extent[k - 1];
  auto nonempty = [&](int e) {
    const uint8_t* s = cells + e * slice;
    return std::any_of(s, s + slice, [](uint8_t v) { return v != 0; });
  };
  int first = -1, last = -1;
  for (int e = 0; e < layers; ++e) {
    if (nonempty(e)) {
      if (first < 0) first = e;
      last = e;
    }
  }
  if (first < 0) return true;
  for (int e = first; e <= last; ++e) {
    const uint8_t* cur = cells + e * slice;
    if (e < last) {
      const uint8_t* up = cur + slice;
      for (int64_t c = 0; c < slice; ++c) {
        if (cur[c] && !up[c]) return false;  // gap or non-monotone slice
      }
    }
    bool same_as_prev =
        e > first && std::equal(cur, cur + slice, cur - slice);
    if (!same_as_prev && !StairConvexCells(cur, extent, k - 1)) return false;
  }
  return true;
}

void CheckDim(int expected, int got) {
  if (expected != got) {
    throw DimensionMismatch("dimension " + std::to_string(got) +
                            " where " + std::to_string(expected) +
                            " expected");
  }
}

}  // namespace

AxisBox::AxisBox(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  CheckSameDim(lo_, hi_);
  for (int i = 0; i < lo_.dim(); ++i) {
    if (lo_[i] > hi_[i]) {
      throw PreconditionError("box with lo > hi on axis " +
                              std::to_string(i + 1));
    }
  }
}

Rational AxisBox::Volume() const {
  Rational v = 1;
  for (int i = 0; i < dim(); ++i) v *= hi_[i] - lo_[i];
  return v;
}

bool AxisBox::Contains(const Point& p) const {
  CheckSameDim(lo_, p);
  for (int i = 0; i < dim(); ++i) {
    if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
  }
  return true;
}

bool AxisBox::HitsAny(const PointSet& points) const {
  for (const Point& p : points) {
    if (Contains(p)) return true;
  }
  return false;
}

BoxUnion::BoxUnion(int dim, std::vector<AxisBox> boxes) : dim_(dim) {
  for (AxisBox& b : boxes) Add(std::move(b));
}

void BoxUnion::Add(AxisBox box) {
  CheckDim(dim_, box.dim());
  boxes_.push_back(std::move(box));
}

bool BoxUnion::Contains(const Point& p) const {
  CheckDim(dim_, p.dim());
  for (const AxisBox& b : boxes_) {
    if (b.Contains(p)) return true;
  }
  return false;
}

bool BoxUnion::AvoidsAll(const PointSet& points) const {
  for (const Point& p : points) {
    if (Contains(p)) return false;
  }
  return true;
}

Rational Volume(const BoxUnion& s, const Limits& limits) {
  CellGrid grid(CellGrid::BreakpointsOf(s.dim(), {&s}), limits);
  grid.Fill(s);
  Rational total = 0;
  if (grid.size() == 0) return total;
  const int d = s.dim();
  std::vector<int> index(d, 0);
  int64_t flat = 0;
  do {
    if (grid.covered()[flat]) {
      bool open = true;
      for (int i = 0; i < d && open; ++i) open = index[i] % 2 == 1;
      if (open) {
        Rational v = 1;
        for (int i = 0; i < d; ++i) v *= grid.Length(i, index[i]);
        total += v;
      }
    }
    ++flat;
  } while (grid.Next(index));
  return total;
}

int64_t GridCount(const BoxUnion& s, int m, const Limits& limits) {
  if (m < 2) throw PreconditionError("grid count needs m >= 2");
  const int d = s.dim();
  for (const AxisBox& b : s.boxes()) {
    for (int i = 0; i < d; ++i) {
      if (sgn(b.lo()[i]) < 0 || b.hi()[i] > 1) {
        throw PreconditionError("box union leaves the unit cube");
      }
    }
  }
  if (d * std::log2(static_cast<double>(m)) > 62) {
    throw GuardError("grid point count overflows 64 bits");
  }
  CellGrid grid(CellGrid::BreakpointsOf(d, {&s}), limits);
  grid.Fill(s);
  if (grid.size() == 0) return 0;
  std::vector<std::vector<int64_t>> hist(d);
  for (int i = 0; i < d; ++i) {
    hist[i].assign(grid.extent()[i], 0);
    for (int k = 0; k < m; ++k) {
      int e = grid.Locate(i, MakeRational(k, m - 1));
      if (e >= 0) ++hist[i][e];
    }
  }
  int64_t count = 0;
  std::vector<int> index(d, 0);
  int64_t flat = 0;
  do {
    if (grid.covered()[flat]) {
      int64_t c = 1;
      for (int i = 0; i < d && c; ++i) c *= hist[i][index[i]];
      count += c;
    }
    ++flat;
  } while (grid.Next(index));
  return count;
}

bool IsStairConvex(const BoxUnion& s, const Limits& limits) {
  CellGrid grid(CellGrid::BreakpointsOf(s.dim(), {&s}), limits);
  grid.Fill(s);
  if (grid.size() == 0) return true;
  return StairConvexCells(grid.covered().data(), grid.extent(), s.dim());
}

BoxUnion Erode(const BoxUnion& s, const Rational& delta,
               const Limits& limits) {
  if (sgn(delta) <= 0) throw PreconditionError("erosion needs delta > 0");
  const int d = s.dim();
  CellGrid original(CellGrid::BreakpointsOf(d, {&s}), limits);
  original.Fill(s);
  if (original.size() == 0) return BoxUnion(d);
  original.BuildPrefix();

  // On the refined decomposition, p + [0, delta] meets a constant range of
  // original elements within each refined element.
  std::vector<std::vector<Rational>> refined(d);
  for (int i = 0; i < d; ++i) {
    for (const Rational& c : original.breaks(i)) {
      refined[i].push_back(c);
      refined[i].push_back(c - delta);
    }
    std::sort(refined[i].begin(), refined[i].end());
    refined[i].erase(std::unique(refined[i].begin(), refined[i].end()),
                     refined[i].end());
  }
  CellGrid out(refined, limits);
  std::vector<std::vector<int>> first(d), last(d);
  for (int i = 0; i < d; ++i) {
    for (int e = 0; e < out.extent()[i]; ++e) {
      Rational r = out.Representative(i, e);
      first[i].push_back(original.Locate(i, r));
      last[i].push_back(original.Locate(i, r + delta));
    }
  }
  std::vector<int> index(d, 0), lo(d), hi(d);
  int64_t flat = 0;
  do {
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      lo[i] = first[i][index[i]];
      hi[i] = last[i][index[i]];
      ok = lo[i] >= 0 && hi[i] >= 0;
    }
    out.covered()[flat] = ok && original.RangeCovered(lo, hi);
    ++flat;
  } while (out.Next(index));
  out.BuildPrefix();
  return out.ToBoxUnion();
}

bool SameSet(const BoxUnion& a, const BoxUnion& b, const Limits& limits) {
  CheckDim(a.dim(), b.dim());
  CellGrid grid(CellGrid::BreakpointsOf(a.dim(), {&a, &b}), limits);
  CellGrid other(CellGrid::BreakpointsOf(a.dim(), {&a, &b}), limits);
  grid.Fill(a);
  other.Fill(b);
  return grid.covered() == other.covered();
}

BoxUnion StairHull(const PointSet& x, const Limits& limits) {
  if (x.empty()) throw PreconditionError("stair hull of an empty set");
  const int d = x.dim();
  std::vector<std::vector<Rational>> breaks(d);
  for (const Point& p : x) {
    for (int i = 0; i < d; ++i) breaks[i].push_back(p[i]);
  }
  for (auto& axis : breaks) {
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
  }
  CellGrid grid(breaks, limits);
  // Membership is constant on cells since types only compare coordinates.
  std::vector<int> index(d, 0);
  std::vector<Rational> rep(d);
  int64_t flat = 0;
  do {
    for (int i = 0; i < d; ++i) rep[i] = grid.Representative(i, index[i]);
    grid.covered()[flat] = SconvContains(x, Point(rep));
    ++flat;
  } while (grid.Next(index));
  grid.BuildPrefix();
  return grid.ToBoxUnion();
}

}  // namespace stairnet
