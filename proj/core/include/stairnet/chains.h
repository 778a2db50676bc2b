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

#ifndef STAIRNET_CHAINS_H_
#define STAIRNET_CHAINS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stairnet/enclosure.h"
#include "stairnet/exact.h"
#include "stairnet/limits.h"

namespace stairnet {

// A_1(n) = 2n, A_k(0) = 1, A_k(n) = A_(k-1)(A_k(n-1)). Throws GuardError
// when the result would exceed limits.max_ackermann_bits bits.
BigInt AckermannA(int k, const BigInt& n, const Limits& limits = Limits());
// A(n) = A_n(3): 6, 8, 16, 65536, ...
BigInt Ackermann(int n, const Limits& limits = Limits());

// alpha_1(x) = ceil(x/2); for k >= 2, alpha_k(x) = 0 if x <= 1 and
// 1 + alpha_k(alpha_(k-1)(x)) otherwise. x >= 0.
int64_t AlphaK(int k, const Rational& x);
// min { k : alpha_k(x) <= 3 }.
int Alpha(const Rational& x);

struct BetaValue {
  int alpha = 0;
  int t = 0;                // floor(d/2) - 1
  Rational coefficient;     // alpha^t / t!
  bool has_log = false;     // odd d: times log2(alpha)
  Interval value;           // exact (lo == hi) unless log2(alpha) is irrational
};

// (1/t!) alpha(r)^t for even d, times log2 alpha(r) for odd d; d >= 3,
// r >= 1.
BetaValue BetaD(int d, const Rational& r);

// alpha_(alpha(x)-3)(x) > A(alpha(x)-2); requires alpha(x) >= 4.
bool CheckLemma10(const Rational& x, const Limits& limits = Limits());

// Breakpoints a_1 <= a_2 < a_3 < ... < a_(k+1) describing the intervals
// [a_1, a_2], [a_2 + 1, a_3], ..., [a_k + 1, a_(k+1)].
struct IntervalChain {
  std::vector<int> breaks;

  int size() const { return static_cast<int>(breaks.size()) - 1; }
  int Lo(int i) const { return i == 0 ? breaks[0] : breaks[i] + 1; }
  int Hi(int i) const { return breaks[i + 1]; }
  std::string ToString() const;
};

// All k-chains within [1, n], in lexicographic order of breakpoints.
std::vector<IntervalChain> EnumerateChains(int k, int n);

using StabTuple = std::vector<int>;

// Whether every entry of z lies in a chain interval and no two entries share
// an interval.
bool Stabs(const StabTuple& z, const IntervalChain& c);

struct StabFamily {
  int j = 0;
  int n = 0;
  std::vector<StabTuple> tuples;

  // Whether the family stabs every k-chain in [1, n].
  bool StabsAllChains(int k) const;
};

// Exact z^(j)_k(n): the minimum number of increasing j-tuples in [1, n]
// stabbing every k-chain in [1, n], with an optimal family. nullopt when no
// family exists (j > k, so no tuple fits into distinct intervals).
// Branch and bound on the set-cover instance; C(n, j) is capped by
// limits.max_stab_tuples.
std::optional<StabFamily> MinStabbing(int j, int k, int n,
                                      const Limits& limits = Limits());

// Exact values of the interval-chain thresholds for triples: Q_3(m) = 2m+1
// and P_3(m) = 2m, m >= 3.
int64_t Q3(int64_t m);
int64_t P3(int64_t m);
// Asymptotic form of Q_j / P_j for j >= 4; their constants are unknown, so
// only a textual description is available.
std::string IntervalChainThresholdForm(int j);

}  // namespace stairnet

#endif  // STAIRNET_CHAINS_H_
