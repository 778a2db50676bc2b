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

#include "stairnet/diag_reductions.h"

#include <algorithm>
#include <string>

#include "stairnet/errors.h"

namespace stairnet {
namespace {

void CheckDiagonal(const std::vector<Point>& diagonal) {
  for (size_t i = 1; i < diagonal.size(); ++i) {
    CheckSameDim(diagonal[0], diagonal[i]);
    for (int c = 0; c < diagonal[i].dim(); ++c) {
      if (diagonal[i][c] <= diagonal[i - 1][c]) {
        throw PreconditionError("diagonal points must increase in every "
                                "coordinate");
      }
    }
  }
}

}  // namespace

SeparatedBlocks PartitionWithSeparators(int n, int ell) {
  if (ell < 1) throw PreconditionError("need at least one block");
  const int free = n - 2 * (ell - 1);
  const int size = free > 0 ? free / ell : 0;
  if (size < 1) {
    throw PreconditionError("cannot fit " + std::to_string(ell) +
                            " blocks and separator pairs into " +
                            std::to_string(n) + " points");
  }
  SeparatedBlocks out;
  int pos = 0;
  for (int b = 0; b < ell; ++b) {
    int len = b + 1 == ell ? free - size * (ell - 1) : size;
    out.blocks.push_back({pos, pos + len});
    pos += len;
    if (b + 1 < ell) {
      out.separators.push_back({pos, pos + 2});
      pos += 2;
    }
  }
  return out;
}

DiagNet DiagNetFromStabbing(const std::vector<Point>& diagonal,
                            const Rational& r, int ell, const StabFamily& z) {
  if (diagonal.empty()) throw PreconditionError("empty diagonal");
  CheckDiagonal(diagonal);
  if (sgn(r) <= 0) throw PreconditionError("r must be positive");
  const int d = diagonal[0].dim();
  const int k = static_cast<int>(Ceil(Rational(ell) / r).get_si()) - 1;
  if (k < 1) {
    throw PreconditionError("chain size ceil(ell/r) - 1 = " +
                            std::to_string(k) + " is not positive");
  }
  DiagNet out;
  out.chain_size = k;
  const int n = static_cast<int>(diagonal.size());
  out.layout = PartitionWithSeparators(n, ell);
  // Every subset of ceil(n/r) points must reach k+1 blocks. The fullest
  // subset touching only k blocks takes all separators, the last (largest)
  // block and k-1 regular blocks.
  const BigInt threshold = Ceil(Rational(n) / r);
  const Block& last = out.layout.blocks.back();
  const int fullest = 2 * (ell - 1) + (last.end - last.begin) +
                      (k - 1) * (out.layout.blocks[0].end -
                                 out.layout.blocks[0].begin);
  if (threshold <= fullest) {
    throw PreconditionError(
        "diagonal of " + std::to_string(n) + " points is too short: a " +
        threshold.get_str() + "-subset can meet only " + std::to_string(k) +
        " of the " + std::to_string(ell) + " blocks");
  }
  if (z.j != d) throw PreconditionError("stabbing tuples must have d entries");
  if (z.n != ell - 1) {
    throw PreconditionError("stabbing family must live on the ell-1 "
                            "separators");
  }
  for (const StabTuple& t : z.tuples) {
    if (static_cast<int>(t.size()) != d) {
      throw PreconditionError("stabbing tuple of wrong length");
    }
    for (size_t i = 0; i < t.size(); ++i) {
      if (t[i] < 1 || t[i] > ell - 1 || (i > 0 && t[i] <= t[i - 1])) {
        throw PreconditionError("stabbing tuple entries must increase "
                                "within [1, ell-1]");
      }
    }
  }
  if (!z.StabsAllChains(k)) {
    throw PreconditionError("family does not stab every " +
                            std::to_string(k) + "-chain on " +
                            std::to_string(ell - 1) + " separators");
  }
  out.net = PointSet(d);
  for (const StabTuple& t : z.tuples) {
    std::vector<Rational> c(d);
    for (int i = 0; i < d; ++i) {
      const Block& y = out.layout.separators[t[i] - 1];
      c[i] = (diagonal[y.begin][i] + diagonal[y.begin + 1][i]) / 2;
    }
    out.net.Add(Point(c));
  }
  return out;
}

NetStabbing NetToStabbing(const std::vector<Point>& diagonal,
                          const PointSet& net, const Rational& r) {
  if (diagonal.empty()) throw PreconditionError("empty diagonal");
  CheckDiagonal(diagonal);
  if (net.empty()) throw PreconditionError("empty net");
  if (sgn(r) <= 0) throw PreconditionError("r must be positive");
  const int n = static_cast<int>(diagonal.size());
  const int d = diagonal[0].dim();
  if (net.dim() != d) throw DimensionMismatch("net/diagonal dimension");
  const int ell = static_cast<int>(net.size());
  const int nblocks = 4 * d * ell;
  const int good_needed = 2 * d * ell;
  if (n < nblocks) {
    throw PreconditionError("diagonal of " + std::to_string(n) +
                            " points cannot hold 4 d ell = " +
                            std::to_string(nblocks) + " blocks");
  }
  NetStabbing out;
  out.family.j = d;
  out.family.n = good_needed - 1;
  out.bad.assign(n, false);
  out.clamped.assign(ell, false);
  out.degenerate.assign(ell, false);
  for (int p = 0; p < ell; ++p) {
    const Point& x = net[p];
    for (int c = 0; c < d; ++c) {
      // Last point with coordinate <= x_c and first with coordinate >= x_c.
      int below = -1, above = n;
      for (int i = 0; i < n; ++i) {
        if (diagonal[i][c] <= x[c]) below = i;
      }
      for (int i = n - 1; i >= 0; --i) {
        if (diagonal[i][c] >= x[c]) above = i;
      }
      if (below < 0 || above >= n) out.clamped[p] = true;
      if (below >= 0) out.bad[below] = true;
      if (above < n) out.bad[above] = true;
    }
  }
  const int size = n / nblocks;
  for (int b = 0; b < nblocks; ++b) {
    int end = b + 1 == nblocks ? n : (b + 1) * size;
    out.blocks.push_back({b * size, end});
  }
  for (int b = 0; b < nblocks; ++b) {
    if (static_cast<int>(out.good_blocks.size()) == good_needed) break;
    bool good = true;
    for (int i = out.blocks[b].begin; i < out.blocks[b].end; ++i) {
      good &= !out.bad[i];
    }
    if (good) out.good_blocks.push_back(b);
  }
  if (static_cast<int>(out.good_blocks.size()) < good_needed) {
    throw PreconditionError("only " + std::to_string(out.good_blocks.size()) +
                            " good blocks, " + std::to_string(good_needed) +
                            " needed");
  }
  for (int p = 0; p < ell; ++p) {
    StabTuple t(d);
    for (int c = 0; c < d; ++c) {
      int count = 0;
      for (int g : out.good_blocks) {
        if (diagonal[out.blocks[g].end - 1][c] < net[p][c]) ++count;
      }
      // Separator Y_a sits between good blocks a and a+1.
      if (count < 1 || count > good_needed - 1) {
        out.clamped[p] = true;
        count = std::clamp(count, 1, good_needed - 1);
      }
      t[c] = count;
      if (c > 0 && t[c] <= t[c - 1]) out.degenerate[p] = true;
    }
    out.family.tuples.push_back(std::move(t));
  }
  return out;
}

std::optional<bool> NetSizeInequalityHolds(int ell, int d, const Rational& r,
                                           const Limits& limits) {
  if (ell < 1 || d < 1) throw PreconditionError("need ell, d >= 1");
  if (sgn(r) <= 0) throw PreconditionError("r must be positive");
  const int k = static_cast<int>(Ceil(Rational(4 * d * ell) / r).get_si());
  auto z = MinStabbing(d, std::max(k, 1), ell, limits);
  if (!z) return std::nullopt;
  return ell >= static_cast<int>(z->tuples.size());
}

}  // namespace stairnet
