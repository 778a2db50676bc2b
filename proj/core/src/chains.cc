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

#include "stairnet/chains.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "stairnet/combinatorics.h"
#include "stairnet/errors.h"

namespace stairnet {
namespace {

BigInt AlphaImpl(int k, const Rational& x) {
  if (k == 1) return Ceil(x / 2);
  if (x <= 1) return 0;
  if (x <= 2) return 1;
  if (x <= 4) return 2;
  BigInt count = 0;
  Rational cur = x;
  while (cur > 1) {
    cur = Rational(AlphaImpl(k - 1, cur));
    ++count;
  }
  return count;
}

void CheckNonnegative(const Rational& x) {
  if (sgn(x) < 0) throw PreconditionError("inverse Ackermann of a negative value");
}

// Fixed-width bitset over chains.
class ChainSet {
 public:
  explicit ChainSet(size_t bits) : words_((bits + 63) / 64, 0) {}
  void Set(size_t i) { words_[i / 64] |= uint64_t{1} << (i % 64); }
  bool Test(size_t i) const { return words_[i / 64] >> (i % 64) & 1; }
  bool None() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](uint64_t w) { return w == 0; });
  }
  int Count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }
  int CountAnd(const ChainSet& o) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i) {
      c += __builtin_popcountll(words_[i] & o.words_[i]);
    }
    return c;
  }
  bool SubsetOf(const ChainSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  ChainSet Minus(const ChainSet& o) const {
    ChainSet r = *this;
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits) {
        fn(w * 64 + __builtin_ctzll(bits));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::vector<uint64_t> words_;
};

}  // namespace

BigInt AckermannA(int k, const BigInt& n, const Limits& limits) {
  if (k < 1) throw PreconditionError("Ackermann level must be >= 1");
  if (n < 0) throw PreconditionError("Ackermann argument must be >= 0");
  if (k == 1) {
    if (BitLength(n) + 1 > static_cast<size_t>(limits.max_ackermann_bits)) {
      throw GuardError("A_1(n) exceeds the bit cap");
    }
    return 2 * n;
  }
  // A_k(n) >= 2^n for k >= 2.
  if (n >= limits.max_ackermann_bits) {
    std::string arg = BitLength(n) <= 64
                          ? n.get_str()
                          : "<" + std::to_string(BitLength(n)) + "-bit value>";
    throw GuardError("A_" + std::to_string(k) + "(" + arg + ") exceeds " +
                     std::to_string(limits.max_ackermann_bits) + " bits");
  }
  if (k == 2) return Pow2(n.get_si()).get_num();
  BigInt v = 1;
  for (long i = 0; i < n.get_si(); ++i) v = AckermannA(k - 1, v, limits);
  return v;
}

BigInt Ackermann(int n, const Limits& limits) {
  if (n < 1) throw PreconditionError("Ackermann index must be >= 1");
  return AckermannA(n, 3, limits);
}

int64_t AlphaK(int k, const Rational& x) {
  if (k < 1) throw PreconditionError("hierarchy level must be >= 1");
  CheckNonnegative(x);
  BigInt v = AlphaImpl(k, x);
  if (!v.fits_slong_p()) throw GuardError("alpha_k value exceeds 64 bits");
  return v.get_si();
}

int Alpha(const Rational& x) {
  CheckNonnegative(x);
  for (int k = 1;; ++k) {
    if (AlphaImpl(k, x) <= 3) return k;
  }
}

BetaValue BetaD(int d, const Rational& r) {
  if (d < 3) throw PreconditionError("beta_d needs d >= 3");
  if (r < 1) throw PreconditionError("beta_d needs r >= 1");
  BetaValue out;
  out.alpha = Alpha(r);
  out.t = d / 2 - 1;
  BigInt power = 1, fact = 1;
  for (int i = 1; i <= out.t; ++i) {
    power *= out.alpha;
    fact *= i;
  }
  out.coefficient = MakeRational(power, fact);
  out.has_log = d % 2 == 1;
  if (!out.has_log) {
    out.value = {out.coefficient, out.coefficient};
  } else {
    Interval lg = EncloseLog2(Rational(out.alpha), Pow2(-40));
    out.value = {out.coefficient * lg.lo, out.coefficient * lg.hi};
  }
  return out;
}

bool CheckLemma10(const Rational& x, const Limits& limits) {
  const int a = Alpha(x);
  if (a < 4) {
    throw PreconditionError("alpha(" + ShortRational(x) + ") = " +
                            std::to_string(a) + " < 4");
  }
  return AlphaImpl(a - 3, x) > Ackermann(a - 2, limits);
}

std::string IntervalChain::ToString() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) out << "[" << Lo(i) << "," << Hi(i) << "]";
  return out.str();
}

std::vector<IntervalChain> EnumerateChains(int k, int n) {
  if (k < 1) throw PreconditionError("chain size must be >= 1");
  std::vector<IntervalChain> out;
  if (n < k) return out;
  std::vector<int> b(k + 1);
  // a_1 <= a_2, then strictly increasing up to n.
  std::function<void(int)> rec = [&](int pos) {
    if (pos == k + 1) {
      out.push_back({b});
      return;
    }
    int lo = pos == 0 ? 1 : pos == 1 ? b[0] : b[pos - 1] + 1;
    // Leave room for the remaining strictly increasing breakpoints.
    int hi = pos == 0 ? n - k + 1 : n - (k - pos);
    for (int v = lo; v <= hi; ++v) {
      b[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

bool Stabs(const StabTuple& z, const IntervalChain& c) {
  int last = -1;
  for (int p : z) {
    if (p < c.Lo(0) || p > c.Hi(c.size() - 1)) return false;
    // Interval index of p: first i with Hi(i) >= p.
    int idx = static_cast<int>(
        std::lower_bound(c.breaks.begin() + 1, c.breaks.end(), p) -
        (c.breaks.begin() + 1));
    if (idx <= last) return false;
    last = idx;
  }
  return true;
}

bool StabFamily::StabsAllChains(int k) const {
  for (const IntervalChain& c : EnumerateChains(k, n)) {
    bool hit = std::any_of(tuples.begin(), tuples.end(),
                           [&](const StabTuple& z) { return Stabs(z, c); });
    if (!hit) return false;
  }
  return true;
}

std::optional<StabFamily> MinStabbing(int j, int k, int n,
                                      const Limits& limits) {
  if (j < 1 || k < 1 || n < 0) {
    throw PreconditionError("min stabbing needs j, k >= 1 and n >= 0");
  }
  StabFamily best{j, n, {}};
  const std::vector<IntervalChain> all_chains = EnumerateChains(k, n);
  if (all_chains.empty()) return best;
  if (j > k) return std::nullopt;
  if (Binomial(n, j) > limits.max_stab_tuples) {
    throw GuardError("C(" + std::to_string(n) + "," + std::to_string(j) +
                     ") stabbing tuples exceed cap " +
                     std::to_string(limits.max_stab_tuples));
  }
  if (Binomial(n, j) * all_chains.size() > limits.max_enumeration) {
    throw GuardError("stabbing instance too large");
  }

  // Only chains whose outer intervals are single points matter: shrinking
  // the first or last interval of a chain can only make it harder to stab,
  // and inner boundaries cannot move without breaking contiguity.
  std::vector<IntervalChain> hard;
  for (const IntervalChain& c : all_chains) {
    if (c.Lo(0) == c.Hi(0) && c.Lo(k - 1) == c.Hi(k - 1)) hard.push_back(c);
  }
  const std::vector<IntervalChain>& chains = hard;

  // Coverage of every tuple; drop tuples dominated by another.
  std::vector<StabTuple> tuples;
  std::vector<ChainSet> cover;
  ForEachCombination(n, j, [&](std::span<const int> pick) {
    StabTuple z(pick.begin(), pick.end());
    for (int& v : z) ++v;
    ChainSet s(chains.size());
    for (size_t c = 0; c < chains.size(); ++c) {
      if (Stabs(z, chains[c])) s.Set(c);
    }
    tuples.push_back(std::move(z));
    cover.push_back(std::move(s));
    return false;
  });
  std::vector<int> order(tuples.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return cover[a].Count() > cover[b].Count();
  });
  std::vector<int> kept;
  for (int t : order) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](int u) {
      return cover[t].SubsetOf(cover[u]);
    });
    if (!dominated) kept.push_back(t);
  }
  std::vector<std::vector<int>> stabbers(chains.size());
  for (int t : kept) cover[t].ForEach([&](size_t c) { stabbers[c].push_back(t); });

  ChainSet all(chains.size());
  for (size_t c = 0; c < chains.size(); ++c) all.Set(c);

  // Greedy upper bound.
  std::vector<int> incumbent;
  {
    ChainSet left = all;
    while (!left.None()) {
      int pick = *std::max_element(kept.begin(), kept.end(), [&](int a, int b) {
        return cover[a].CountAnd(left) < cover[b].CountAnd(left);
      });
      incumbent.push_back(pick);
      left = left.Minus(cover[pick]);
    }
  }

  std::vector<int> chosen;
  std::vector<int> mark(tuples.size(), 0);
  int stamp = 0;
  std::function<void(const ChainSet&)> search = [&](const ChainSet& left) {
    if (left.None()) {
      incumbent = chosen;
      return;
    }
    const int remaining = left.Count();
    int max_cover = 0;
    for (int t : kept) max_cover = std::max(max_cover, cover[t].CountAnd(left));
    int lower = (remaining + max_cover - 1) / max_cover;
    // Chains with pairwise disjoint stabber sets need one tuple each.
    ++stamp;
    int packed = 0;
    left.ForEach([&](size_t c) {
      for (int t : stabbers[c]) {
        if (mark[t] == stamp) return;
      }
      ++packed;
      for (int t : stabbers[c]) mark[t] = stamp;
    });
    lower = std::max(lower, packed);
    if (chosen.size() + lower >= incumbent.size()) return;
    size_t branch = 0;
    size_t fewest = SIZE_MAX;
    left.ForEach([&](size_t c) {
      if (stabbers[c].size() < fewest) {
        fewest = stabbers[c].size();
        branch = c;
      }
    });
    std::vector<int> options = stabbers[branch];
    std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
      return cover[a].CountAnd(left) > cover[b].CountAnd(left);
    });
    for (int t : options) {
      chosen.push_back(t);
      search(left.Minus(cover[t]));
      chosen.pop_back();
      if (chosen.size() + lower >= incumbent.size()) return;
    }
  };
  search(all);

  for (int t : incumbent) best.tuples.push_back(tuples[t]);
  std::sort(best.tuples.begin(), best.tuples.end());
  return best;
}

int64_t Q3(int64_t m) {
  if (m < 3) throw PreconditionError("Q_3(m) needs m >= 3");
  return 2 * m + 1;
}

int64_t P3(int64_t m) {
  if (m < 3) throw PreconditionError("P_3(m) needs m >= 3");
  return 2 * m;
}

std::string IntervalChainThresholdForm(int j) {
  if (j < 3) throw PreconditionError("thresholds are defined for j >= 3");
  if (j == 3) return "Q_3(m) = 2m+1, P_3(m) = 2m";
  if (j == 4) return "Q_4(m) = Omega(2^m), P_4(m) = O(2^m)";
  const int t = j / 2 - 1;
  const std::string ts = std::to_string(t);
  if (j % 2 == 0) {
    return "t = " + ts + ": Q_" + std::to_string(j) +
           "(m) >= 2^((1/t!) m^t - O(m^(t-1))), P_" + std::to_string(j) +
           "(m) <= 2^((1/t!) m^t + O(m^(t-1)))";
  }
  return "t = " + ts + ": Q_" + std::to_string(j) +
         "(m) >= 2^((1/t!) m^t log2 m - O(m^t)), P_" + std::to_string(j) +
         "(m) <= 2^((1/t!) m^t log2 m + O(m^t))";
}

}  // namespace stairnet
