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

#ifndef STAIRNET_LINEAR_H_
#define STAIRNET_LINEAR_H_

#include <optional>
#include <span>
#include <vector>

#include "stairnet/exact.h"

namespace stairnet {

using RationalMatrix = std::vector<std::vector<Rational>>;  // row major

Rational Determinant(const RationalMatrix& square);

// Linear system A x = b given column by column. Rows are rescaled to integers
// once on construction; queries on column subsets then run fraction-free
// (Bareiss) elimination over BigInt.
class ExactSystem {
 public:
  ExactSystem(const std::vector<std::vector<Rational>>& columns,
              std::span<const Rational> rhs);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // Unique solution restricted to the given columns, or nullopt when those
  // columns are linearly dependent or the restricted system is inconsistent.
  std::optional<std::vector<Rational>> SolveColumns(
      std::span<const int> cols) const;

  // A solution x >= 0 with at most `max_support` nonzeros, searched over all
  // column subsets of that size or less (basic feasible solutions). Returns
  // the full-length vector. Complete: if any x >= 0 solves the system, one
  // with linearly independent support exists and is found, provided
  // max_support >= rank.
  std::optional<std::vector<Rational>> FindNonnegative(int max_support) const;

 private:
  int rows_;
  int cols_;
  std::vector<std::vector<BigInt>> a_;  // rows_ x cols_
  std::vector<BigInt> b_;
};

}  // namespace stairnet

#endif  // STAIRNET_LINEAR_H_
