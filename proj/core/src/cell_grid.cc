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

#include "cell_grid.h"

#include <algorithm>
#include <string>

#include "stairnet/errors.h"

namespace stairnet {

CellGrid::CellGrid(std::vector<std::vector<Rational>> breaks,
                   const Limits& limits)
    : breaks_(std::move(breaks)) {
  const int d = static_cast<int>(breaks_.size());
  extent_.resize(d);
  stride_.resize(d);
  int64_t size = 1;
  for (int i = 0; i < d; ++i) {
    extent_[i] = breaks_[i].empty() ? 0 : 2 * breaks_[i].size() - 1;
    stride_[i] = size;
    if (extent_[i] == 0) {
      size = 0;
    } else if (size > limits.max_cells / extent_[i]) {
      throw GuardError("cell decomposition exceeds " +
                       std::to_string(limits.max_cells) + " cells");
    } else {
      size *= extent_[i];
    }
  }
  size_ = size;
  covered_.assign(size_, 0);
}

std::vector<std::vector<Rational>> CellGrid::BreakpointsOf(
    int dim, const std::vector<const BoxUnion*>& unions) {
  std::vector<std::vector<Rational>> breaks(dim);
  for (const BoxUnion* s : unions) {
    for (const AxisBox& b : s->boxes()) {
      for (int i = 0; i < dim; ++i) {
        breaks[i].push_back(b.lo()[i]);
        breaks[i].push_back(b.hi()[i]);
      }
    }
  }
  for (auto& axis : breaks) {
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
  }
  return breaks;
}

int CellGrid::Locate(int axis, const Rational& x) const {
  const auto& c = breaks_[axis];
  if (c.empty() || x < c.front() || x > c.back()) return -1;
  auto it = std::lower_bound(c.begin(), c.end(), x);
  int t = static_cast<int>(it - c.begin());
  return *it == x ? 2 * t : 2 * t - 1;
}

Rational CellGrid::Representative(int axis, int element) const {
  const auto& c = breaks_[axis];
  if (element % 2 == 0) return c[element / 2];
  return (c[element / 2] + c[element / 2 + 1]) / 2;
}

Rational CellGrid::Length(int axis, int element) const {
  if (element % 2 == 0) return 0;
  const auto& c = breaks_[axis];
  return c[element / 2 + 1] - c[element / 2];
}

bool CellGrid::Next(std::vector<int>& index) const {
  for (int i = 0; i < dim(); ++i) {
    if (++index[i] < extent_[i]) return true;
    index[i] = 0;
  }
  return false;
}

void CellGrid::Fill(const BoxUnion& s) {
  if (size_ == 0) return;
  const int d = dim();
  // d-dimensional difference array, then prefix sums along every axis.
  std::vector<int32_t> diff(size_, 0);
  std::vector<int> lo(d), hi(d);
  for (const AxisBox& b : s.boxes()) {
    bool inside = true;
    for (int i = 0; i < d; ++i) {
      lo[i] = Locate(i, b.lo()[i]);
      hi[i] = Locate(i, b.hi()[i]);
      inside &= lo[i] >= 0 && hi[i] >= 0;
    }
    if (!inside) throw PreconditionError("box outside cell decomposition");
    for (uint32_t mask = 0; mask < (1u << d); ++mask) {
      int64_t idx = 0;
      int sign = 1;
      bool skip = false;
      for (int i = 0; i < d; ++i) {
        int e = lo[i];
        if (mask & (1u << i)) {
          e = hi[i] + 1;
          sign = -sign;
          if (e >= extent_[i]) {
            skip = true;
            break;
          }
        }
        idx += e * stride_[i];
      }
      if (!skip) diff[idx] += sign;
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int64_t idx = 0; idx < size_; ++idx) {
      if ((idx / stride_[i]) % extent_[i] != 0) diff[idx] += diff[idx - stride_[i]];
    }
  }
  for (int64_t idx = 0; idx < size_; ++idx) {
    covered_[idx] = covered_[idx] || diff[idx] > 0;
  }
}

void CellGrid::BuildPrefix() {
  uncovered_prefix_.assign(size_, 0);
  for (int64_t idx = 0; idx < size_; ++idx) {
    uncovered_prefix_[idx] = covered_[idx] ? 0 : 1;
  }
  for (int i = 0; i < dim(); ++i) {
    for (int64_t idx = 0; idx < size_; ++idx) {
      if ((idx / stride_[i]) % extent_[i] != 0) {
        uncovered_prefix_[idx] += uncovered_prefix_[idx - stride_[i]];
      }
    }
  }
}

bool CellGrid::RangeCovered(const std::vector<int>& lo,
                            const std::vector<int>& hi) const {
  const int d = dim();
  int64_t total = 0;
  for (uint32_t mask = 0; mask < (1u << d); ++mask) {
    int64_t idx = 0;
    int sign = 1;
    bool zero = false;
    for (int i = 0; i < d; ++i) {
      int e = hi[i];
      if (mask & (1u << i)) {
        e = lo[i] - 1;
        sign = -sign;
        if (e < 0) {
          zero = true;
          break;
        }
      }
      idx += e * stride_[i];
    }
    if (!zero) total += sign * uncovered_prefix_[idx];
  }
  return total == 0;
}

BoxUnion CellGrid::ToBoxUnion() const {
  const int d = dim();
  BoxUnion out(d);
  if (size_ == 0) return out;
  std::vector<uint8_t> explained(size_, 0);
  std::vector<int> index(d, 0), lo(d), hi(d);
  int64_t flat = 0;
  do {
    if (covered_[flat] && !explained[flat]) {
      for (int i = 0; i < d; ++i) {
        lo[i] = index[i] % 2 == 0 ? index[i] : index[i] - 1;
        hi[i] = index[i] % 2 == 0 ? index[i] : index[i] + 1;
      }
      if (!RangeCovered(lo, hi)) {
        throw PreconditionError("covered cell set is not closed");
      }
      for (int i = 0; i < d; ++i) {
        while (hi[i] + 2 < extent_[i]) {
          std::vector<int> l2 = lo, h2 = hi;
          l2[i] = hi[i] + 1;
          h2[i] = hi[i] + 2;
          if (!RangeCovered(l2, h2)) break;
          hi[i] += 2;
        }
        while (lo[i] - 2 >= 0) {
          std::vector<int> l2 = lo, h2 = hi;
          l2[i] = lo[i] - 2;
          h2[i] = lo[i] - 1;
          if (!RangeCovered(l2, h2)) break;
          lo[i] -= 2;
        }
      }
      std::vector<Rational> blo(d), bhi(d);
      for (int i = 0; i < d; ++i) {
        blo[i] = breaks_[i][lo[i] / 2];
        bhi[i] = breaks_[i][hi[i] / 2];
      }
      out.Add(AxisBox(Point(blo), Point(bhi)));
      std::vector<int> cur = lo;
      while (true) {
        int64_t idx = 0;
        for (int i = 0; i < d; ++i) idx += cur[i] * stride_[i];
        explained[idx] = 1;
        int i = 0;
        while (i < d && ++cur[i] > hi[i]) {
          cur[i] = lo[i];
          ++i;
        }
        if (i == d) break;
      }
    }
    ++flat;
  } while (Next(index));
  return out;
}

}  // namespace stairnet
