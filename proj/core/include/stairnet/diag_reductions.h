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

#ifndef STAIRNET_DIAG_REDUCTIONS_H_
#define STAIRNET_DIAG_REDUCTIONS_H_

#include <optional>
#include <vector>

#include "stairnet/chains.h"
#include "stairnet/exact.h"
#include "stairnet/limits.h"

namespace stairnet {

// Consecutive index ranges [begin, end) of the diagonal.
struct Block {
  int begin = 0;
  int end = 0;
};

// ell blocks of floor((n - 2(ell-1)) / ell) points (leftover points go to the
// last block) with an adjacent pair of diagonal points between every two
// consecutive blocks.
struct SeparatedBlocks {
  std::vector<Block> blocks;
  std::vector<Block> separators;  // each of size 2; separators[a-1] is Y_a
};

SeparatedBlocks PartitionWithSeparators(int n, int ell);

struct DiagNet {
  PointSet net{1};
  SeparatedBlocks layout;
  int chain_size = 0;  // chains on the ell-1 separators that Z must stab
};

// Converts a family of d-tuples of separator indices (1-based, in
// [1, ell-1]) stabbing every (ceil(ell/r) - 1)-chain into a point set:
// coordinate i of the image of z is the mean of coordinate i of the two
// points of separator Y_(z_i). The diagonal must be long enough that every
// ceil(n/r)-subset meets ceil(ell/r) distinct blocks despite the separator
// points and the rounding of block sizes; PreconditionError otherwise.
DiagNet DiagNetFromStabbing(const std::vector<Point>& diagonal,
                            const Rational& r, int ell, const StabFamily& z);

struct NetStabbing {
  StabFamily family;   // one d-tuple of separators per net point
  std::vector<Block> blocks;         // the 4 d ell blocks
  std::vector<bool> bad;             // per diagonal point
  std::vector<int> good_blocks;      // indices into blocks, first 2 d ell
  std::vector<bool> clamped;         // per net point: left the diagonal range
  std::vector<bool> degenerate;      // per net point: tuple not increasing
};

// Maps a net for the diagonal to separator tuples: marks the two diagonal
// points surrounding every net point in every coordinate as bad, splits the
// diagonal into 4 d ell blocks, keeps the first 2 d ell blocks without bad
// points, and assigns to a net point the tuple whose i-th entry counts the
// good blocks lying below it in coordinate i. ell = |N|.
NetStabbing NetToStabbing(const std::vector<Point>& diagonal,
                          const PointSet& net, const Rational& r);

// ell >= z^(d)_k(ell) with k = ceil(4 d ell / r). nullopt when the stabbing
// number is undefined (no family exists).
std::optional<bool> NetSizeInequalityHolds(int ell, int d, const Rational& r,
                                           const Limits& limits = Limits());

}  // namespace stairnet

#endif  // STAIRNET_DIAG_REDUCTIONS_H_
