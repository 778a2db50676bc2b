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

#ifndef STAIRNET_CELL_GRID_H_
#define STAIRNET_CELL_GRID_H_

#include <cstdint>
#include <vector>

#include "stairnet/box_union.h"
#include "stairnet/exact.h"
#include "stairnet/limits.h"

namespace stairnet {

// Decomposition of R^d induced by sorted breakpoints per axis. With K
// breakpoints c_0 < ... < c_{K-1} on an axis there are 2K-1 elements: even
// element 2t is the point c_t, odd element 2t+1 the open interval
// (c_t, c_{t+1}). A cell is a product of elements; axis 0 varies fastest in
// the flat index.
class CellGrid {
 public:
  CellGrid(std::vector<std::vector<Rational>> breaks, const Limits& limits);

  // Sorted, deduplicated box coordinates of all given unions.
  static std::vector<std::vector<Rational>> BreakpointsOf(
      int dim, const std::vector<const BoxUnion*>& unions);

  int dim() const { return static_cast<int>(extent_.size()); }
  int64_t size() const { return size_; }
  const std::vector<int>& extent() const { return extent_; }
  int64_t stride(int axis) const { return stride_[axis]; }
  const std::vector<Rational>& breaks(int axis) const { return breaks_[axis]; }

  // Element containing x on the axis, or -1 outside [c_0, c_{K-1}].
  int Locate(int axis, const Rational& x) const;
  // A point inside the element (the midpoint for open intervals).
  Rational Representative(int axis, int element) const;
  // Length of the element (0 for points).
  Rational Length(int axis, int element) const;

  std::vector<uint8_t>& covered() { return covered_; }
  const std::vector<uint8_t>& covered() const { return covered_; }

  // Marks every cell inside some box of s.
  void Fill(const BoxUnion& s);

  // Must be called after `covered` is final and before RangeCovered or
  // ToBoxUnion.
  void BuildPrefix();
  // Whether every cell with lo <= element <= hi (per axis) is covered.
  bool RangeCovered(const std::vector<int>& lo,
                    const std::vector<int>& hi) const;

  // Boxes whose union is exactly the set of covered cells. Requires the
  // covered set to be closed.
  BoxUnion ToBoxUnion() const;

  // Advances a multi-index in flat order; false after the last cell.
  bool Next(std::vector<int>& index) const;

 private:
  std::vector<std::vector<Rational>> breaks_;
  std::vector<int> extent_;
  std::vector<int64_t> stride_;
  int64_t size_;
  std::vector<uint8_t> covered_;
  std::vector<int64_t> uncovered_prefix_;
};

}  // namespace stairnet

#endif  // STAIRNET_CELL_GRID_H_
