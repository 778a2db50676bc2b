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

#include "stairnet/stair_nets.h"

#include <algorithm>
#include <climits>
#include <functional>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <string>

#include "stairnet/combinatorics.h"
#include "stairnet/errors.h"
#include "stairnet/parallel.h"
#include "stairnet/stair.h"

namespace stairnet {
namespace {

void CheckInUnitCube(const PointSet& net) {
  for (const Point& p : net) {
    for (int i = 0; i < p.dim(); ++i) {
      if (sgn(p[i]) < 0 || p[i] > 1) {
        throw PreconditionError("point " + p.ToString() +
                                " outside the unit cube");
      }
    }
  }
}

// Largest t with 2^-t >= diff, for diff > 0, clamped to [0, cap].
int SideExponentCap(const Rational& diff, int cap) {
  if (diff > MakeRational(1, 2)) return 0;
  int t = static_cast<int>(BitLength(diff.get_den())) -
          static_cast<int>(BitLength(diff.get_num()));
  t = std::clamp(t, 0, cap + 1);
  while (t > 0 && Pow2(-t) < diff) --t;
  while (t <= cap && Pow2(-(t + 1)) >= diff) ++t;
  return std::min(t, cap);
}

struct BoxResult {
  Rational volume = -1;
  std::vector<Rational> lo, hi;
};

// Largest empty box in the unit cube spanned by the last `dims` coordinates
// of each point (coordinates [axis, axis + dims)).
BoxResult LargestEmpty(const std::vector<const Point*>& pts, int axis,
                       int dims);

BoxResult LargestEmpty1(const std::vector<const Point*>& pts, int axis) {
  std::vector<Rational> c = {0, 1};
  for (const Point* p : pts) c.push_back((*p)[axis]);
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  BoxResult best;
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    Rational gap = c[i + 1] - c[i];
    if (gap > best.volume) best = {gap, {c[i]}, {c[i + 1]}};
  }
  return best;
}

// Sweep over left boundaries; for each, extend the right boundary point by
// point and keep the largest free vertical gap among the points strictly
// between the two boundaries.
BoxResult LargestEmpty2(const std::vector<const Point*>& pts, int axis) {
  std::vector<std::pair<Rational, Rational>> xy;
  for (const Point* p : pts) xy.emplace_back((*p)[axis], (*p)[axis + 1]);
  std::sort(xy.begin(), xy.end());
  std::vector<Rational> lefts = {0};
  for (const auto& [x, y] : xy) {
    if (x < 1) lefts.push_back(x);
  }
  lefts.erase(std::unique(lefts.begin(), lefts.end()), lefts.end());

  BoxResult best;
  for (const Rational& left : lefts) {
    if (1 - left <= best.volume) continue;
    std::set<Rational> ys = {0, 1};
    std::multiset<Rational> gaps = {1};
    auto idx = std::upper_bound(
        xy.begin(), xy.end(), left,
        [](const Rational& v, const auto& e) { return v < e.first; });
    while (true) {
      Rational right = idx == xy.end() ? Rational(1) : idx->first;
      Rational width = right - left;
      if (width * *gaps.rbegin() > best.volume) {
        const Rational& g = *gaps.rbegin();
        for (auto it = ys.begin(); std::next(it) != ys.end(); ++it) {
          if (*std::next(it) - *it == g) {
            best = {width * g, {left, *it}, {right, *std::next(it)}};
            break;
          }
        }
      }
      if (idx == xy.end()) break;
      for (; idx != xy.end() && idx->first == right; ++idx) {
        auto [it, fresh] = ys.insert(idx->second);
        if (!fresh || it == ys.begin() || std::next(it) == ys.end()) continue;
        const Rational& lo = *std::prev(it);
        const Rational& hi = *std::next(it);
        gaps.erase(gaps.find(hi - lo));
        gaps.insert(*it - lo);
        gaps.insert(hi - *it);
      }
    }
  }
  return best;
}

BoxResult LargestEmpty(const std::vector<const Point*>& pts, int axis,
                       int dims) {
  if (dims == 1) return LargestEmpty1(pts, axis);
  if (dims == 2) return LargestEmpty2(pts, axis);
  std::vector<const Point*> sorted = pts;
  std::sort(sorted.begin(), sorted.end(), [axis](const Point* a, const Point* b) {
    return (*a)[axis] < (*b)[axis];
  });
  std::vector<Rational> cands = {0, 1};
  for (const Point* p : pts) cands.push_back((*p)[axis]);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  BoxResult best;
  for (size_t a = 0; a < cands.size(); ++a) {
    for (size_t b = a + 1; b < cands.size(); ++b) {
      Rational width = cands[b] - cands[a];
      if (width <= best.volume) continue;
      std::vector<const Point*> inside;
      for (const Point* p : sorted) {
        if ((*p)[axis] > cands[a] && (*p)[axis] < cands[b]) inside.push_back(p);
      }
      BoxResult sub = LargestEmpty(inside, axis + 1, dims - 1);
      Rational vol = width * sub.volume;
      if (vol > best.volume) {
        best.volume = vol;
        best.lo = {cands[a]};
        best.hi = {cands[b]};
        best.lo.insert(best.lo.end(), sub.lo.begin(), sub.lo.end());
        best.hi.insert(best.hi.end(), sub.hi.begin(), sub.hi.end());
      }
    }
  }
  return best;
}

std::vector<uint64_t> FirstPrimes(int count) {
  std::vector<uint64_t> primes;
  for (uint64_t c = 2; static_cast<int>(primes.size()) < count; ++c) {
    bool prime = true;
    for (uint64_t p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

}  // namespace

int ChooseK(int64_t n, int d) {
  if (n < 1) throw PreconditionError("net size must be >= 1");
  if (d < 1) throw PreconditionError("dimension must be >= 1");
  int ceil_log = 0;
  while ((int64_t{1} << ceil_log) < n) ++ceil_log;
  return d + 1 + ceil_log;
}

std::vector<BoxType> BoxTypes(int k, int d) {
  if (d < 1) throw PreconditionError("dimension must be >= 1");
  if (k < d) {
    throw PreconditionError("box types need k >= d (k=" + std::to_string(k) +
                            ", d=" + std::to_string(d) + ")");
  }
  std::vector<BoxType> out;
  BoxType t(d);
  std::function<void(int, int)> rec = [&](int axis, int remaining) {
    if (axis == d - 1) {
      t[axis] = remaining;
      out.push_back(t);
      return;
    }
    for (int v = 1; v <= remaining - (d - 1 - axis); ++v) {
      t[axis] = v;
      rec(axis + 1, remaining - v);
    }
  };
  rec(0, k);
  return out;
}

bool InAnchorRegion(const Point& p) {
  for (int i = 0; i < p.dim(); ++i) {
    if (p[i] < MakeRational(1, 2) || p[i] > 1) return false;
  }
  return true;
}

AxisBox NormalBox(const BoxType& t, const Point& anchor) {
  if (static_cast<int>(t.size()) != anchor.dim()) {
    throw DimensionMismatch("box type length differs from anchor dimension");
  }
  if (!InAnchorRegion(anchor)) {
    throw PreconditionError("anchor " + anchor.ToString() +
                            " outside [1/2, 1]^d");
  }
  std::vector<Rational> lo(anchor.dim());
  for (int i = 0; i < anchor.dim(); ++i) {
    if (t[i] < 1) throw PreconditionError("box type entries must be >= 1");
    lo[i] = anchor[i] - Pow2(-t[i]);
  }
  return AxisBox(Point(lo), anchor);
}

AxisBox LowerSubbox(const AxisBox& box) {
  std::vector<Rational> hi(box.dim());
  for (int i = 0; i < box.dim(); ++i) {
    hi[i] = box.lo()[i] + (box.hi()[i] - box.lo()[i]) / 2;
  }
  return AxisBox(box.lo(), Point(hi));
}

std::vector<bool> EmptyFanBoxes(const PointSet& net, const Point& anchor,
                                int k) {
  const int d = anchor.dim();
  if (net.dim() != d) throw DimensionMismatch("net/anchor dimension");
  if (!InAnchorRegion(anchor)) {
    throw PreconditionError("anchor " + anchor.ToString() +
                            " outside [1/2, 1]^d");
  }
  const std::vector<BoxType> types = BoxTypes(k, d);
  // x lies in B_t(p) iff x <= p and t_i <= cap_i(x) on every axis.
  std::vector<std::vector<int>> caps;
  for (const Point& x : net) {
    std::vector<int> cap(d);
    bool below = true;
    for (int i = 0; i < d && below; ++i) {
      Rational diff = anchor[i] - x[i];
      if (sgn(diff) < 0) {
        below = false;
      } else {
        cap[i] = sgn(diff) == 0 ? k : SideExponentCap(diff, k);
        below = cap[i] >= 1;
      }
    }
    if (below) caps.push_back(std::move(cap));
  }
  std::vector<bool> empty(types.size(), true);
  for (size_t ti = 0; ti < types.size(); ++ti) {
    for (const auto& cap : caps) {
      bool inside = true;
      for (int i = 0; i < d && inside; ++i) inside = types[ti][i] <= cap[i];
      if (inside) {
        empty[ti] = false;
        break;
      }
    }
  }
  return empty;
}

BoxUnion FanUnion(const std::vector<BoxType>& types, const Point& anchor) {
  BoxUnion out(anchor.dim());
  for (const BoxType& t : types) out.Add(NormalBox(t, anchor));
  return out;
}

Refutation RefuteNet(const PointSet& net, const RefuteOptions& opts) {
  if (net.empty()) throw PreconditionError("net is empty");
  if (opts.trials < 1) throw PreconditionError("trials must be >= 1");
  CheckInUnitCube(net);
  const int d = net.dim();
  const int k = ChooseK(static_cast<int64_t>(net.size()), d);
  const std::vector<BoxType> types = BoxTypes(k, d);

  std::mt19937_64 gen(opts.seed);
  const Rational half = MakeRational(1, 2);
  const Rational unit = Pow2(-65);
  std::vector<Point> anchors;
  for (int t = 0; t < opts.trials; ++t) {
    std::vector<Rational> c(d);
    for (int i = 0; i < d; ++i) {
      c[i] = half + Rational(BigInt(std::to_string(gen()))) * unit;
    }
    anchors.emplace_back(c);
  }
  std::vector<int64_t> counts(anchors.size());
  ParallelFor(static_cast<int64_t>(anchors.size()), opts.jobs,
              [&](int64_t i) {
                auto empty = EmptyFanBoxes(net, anchors[i], k);
                counts[i] = std::count(empty.begin(), empty.end(), true);
              });
  size_t best = 0;
  for (size_t i = 1; i < anchors.size(); ++i) {
    if (counts[i] > counts[best] ||
        (counts[i] == counts[best] && anchors[i] < anchors[best])) {
      best = i;
    }
  }
  Refutation out;
  out.k = k;
  out.types = static_cast<int64_t>(types.size());
  out.best_count = counts[best];
  out.anchor = anchors[best];
  out.success = 4 * out.best_count >= out.types;
  std::vector<BoxType> chosen;
  auto empty = EmptyFanBoxes(net, out.anchor, k);
  for (size_t i = 0; i < types.size(); ++i) {
    if (empty[i]) chosen.push_back(types[i]);
  }
  out.witness = FanUnion(chosen, out.anchor);
  out.vol_lb = Rational(out.best_count) * Pow2(-d - k);
  return out;
}

Rational RadicalInverse(uint64_t i, uint64_t base) {
  if (base < 2) throw PreconditionError("radical inverse base must be >= 2");
  BigInt num = 0, den = 1;
  while (i > 0) {
    num = num * base + (i % base);
    den *= base;
    i /= base;
  }
  return MakeRational(num, den);
}

PointSet Hammersley(int64_t s, int d) {
  if (s < 1) throw PreconditionError("Hammersley size must be >= 1");
  if (d < 1) throw PreconditionError("dimension must be >= 1");
  const std::vector<uint64_t> primes = FirstPrimes(d - 1);
  std::vector<Point> pts;
  pts.reserve(s);
  for (int64_t i = 0; i < s; ++i) {
    std::vector<Rational> c(d);
    c[0] = MakeRational(i, s);
    for (int j = 1; j < d; ++j) c[j] = RadicalInverse(i, primes[j - 1]);
    pts.emplace_back(std::move(c));
  }
  return PointSet(d, std::move(pts));
}

EmptyBox LargestEmptyBox(const PointSet& net, const Limits& limits) {
  CheckInUnitCube(net);
  const int d = net.dim();
  const int64_t n = static_cast<int64_t>(net.size());
  if (n * d > limits.max_empty_box_points) {
    throw GuardError("largest empty box over " + std::to_string(n) +
                     " points in dimension " + std::to_string(d) +
                     " exceeds budget " +
                     std::to_string(limits.max_empty_box_points));
  }
  if (d >= 3) {
    // Pairs of boundaries on the first d-2 axes, then a 2D sweep.
    BigInt work = 1;
    for (int i = 0; i < d - 2; ++i) work *= BigInt(n + 2) * (n + 2);
    work *= BigInt(n + 2) * (n + 2);
    if (work > limits.max_enumeration) {
      throw GuardError("largest empty box search needs about " +
                       work.get_str() + " steps");
    }
  }
  std::vector<const Point*> pts;
  for (const Point& p : net) pts.push_back(&p);
  BoxResult r = LargestEmpty(pts, 0, d);
  return {AxisBox(Point(r.lo), Point(r.hi)), r.volume};
}

bool AtMostInverseE(const Rational& v) {
  Rational width = Pow2(-16);
  for (int round = 0; round < 64; ++round, width *= Pow2(-16)) {
    Interval e = EncloseE(width);
    if (v * e.hi <= 1) return true;
    if (v * e.lo > 1) return false;
  }
  throw GuardError("could not compare v with 1/e");
}

Rational StairVolumeBound(const Rational& v, int d) {
  if (d < 1) throw PreconditionError("dimension must be >= 1");
  if (sgn(v) <= 0) throw PreconditionError("v must be positive");
  if (!AtMostInverseE(v)) {
    throw PreconditionError("v = " + ShortRational(v) +
                            " exceeds 1/e; the volume bound does not apply");
  }
  const Rational target = Pow2(-21);
  Rational width = Pow2(-24);
  for (int round = 0; round < 32; ++round, width *= Pow2(-8)) {
    Interval e = EncloseE(width);
    Interval lo_hi = {e.lo * v, e.hi * v};
    if (d > 1) {
      Interval ln = EncloseLn(1 / v, width);
      for (int i = 1; i < d; ++i) {
        lo_hi.lo *= ln.lo;
        lo_hi.hi *= ln.hi;
      }
    }
    if (lo_hi.Width() <= target) {
      return RoundOutward(lo_hi, 40).hi;
    }
  }
  throw GuardError("volume bound enclosure did not converge");
}

CertifyOutcome CertifyStairNet(const PointSet& net, const Rational& eps,
                               const Limits& limits) {
  CertifyOutcome out;
  if (net.empty()) {
    out.v = 1;
    out.failure = "empty net: the whole cube is an empty box";
    return out;
  }
  EmptyBox box = LargestEmptyBox(net, limits);
  out.v = box.volume;
  if (!AtMostInverseE(box.volume)) {
    out.failure = "largest empty box volume " + ShortRational(box.volume) +
                  " exceeds 1/e";
    return out;
  }
  Rational bound = StairVolumeBound(box.volume, net.dim());
  out.bound = bound;
  if (bound >= eps) {
    out.failure = "volume bound " + ShortRational(bound) +
                  " is not below eps " + ShortRational(eps);
    return out;
  }
  out.certificate = NetCertificate{net, eps, box.volume, box.box, bound};
  return out;
}

BuildOutcome BuildStairNet(const Rational& r, int d, const Limits& limits) {
  if (r < 1) throw PreconditionError("r must be >= 1");
  const Rational eps = 1 / r;
  int64_t s = Ceil(r).get_si();
  BuildOutcome out;
  for (int it = 0; it < limits.max_build_iterations; ++it, s *= 2) {
    out.sizes_tried.push_back(s);
    PointSet net = Hammersley(s, d);
    CertifyOutcome c = CertifyStairNet(net, eps, limits);
    if (c.certificate) {
      out.certificate = std::move(*c.certificate);
      return out;
    }
  }
  throw GuardError("no certified net after " +
                   std::to_string(limits.max_build_iterations) +
                   " doublings (last size " + std::to_string(s / 2) + ")");
}

Rational TransferredEpsilon(const Rational& eps, int64_t net_size, int d,
                            int m) {
  if (m < 2) throw PreconditionError("grid side must be >= 2");
  return eps + MakeRational(BigInt(2 * d) * (net_size + 1), m);
}

Transfer TransferToWeakNet(const PointSet& net, const Rational& eps,
                           const GridSpec& spec) {
  if (net.dim() != spec.d) throw DimensionMismatch("net/grid dimension");
  return {PiInverse(net, spec),
          TransferredEpsilon(eps, net.size(), spec.d, spec.m)};
}

Transfer TransferFromWeakNet(const PointSet& net, const Rational& eps,
                             const GridSpec& spec) {
  if (net.dim() != spec.d) throw DimensionMismatch("net/grid dimension");
  return {PiMap(net, spec),
          TransferredEpsilon(eps, net.size(), spec.d, spec.m)};
}

WeakNetCheck CheckWeakNetThreshold(const PointSet& x, const PointSet& net,
                                   int threshold, const Limits& limits) {
  if (x.dim() != net.dim()) throw DimensionMismatch("X/net dimension");
  const int n = static_cast<int>(x.size());
  if (n > std::min(limits.max_weak_net_points, 64)) {
    throw GuardError("weak-net check over " + std::to_string(n) +
                     " points exceeds cap " +
                     std::to_string(std::min(limits.max_weak_net_points, 64)));
  }
  if (threshold < 1) throw PreconditionError("threshold must be >= 1");
  WeakNetCheck out;
  out.threshold = threshold;
  if (threshold > n) return out;
  const int d = x.dim();

  // Minimal subsets (as bitmasks) of X whose hull contains some net point.
  std::vector<uint64_t> masks;
  auto covered_by_smaller = [&](uint64_t m) {
    return std::any_of(masks.begin(), masks.end(),
                       [m](uint64_t s) { return (s & ~m) == 0; });
  };
  for (int size = 1; size <= std::min(d + 1, threshold); ++size) {
    ForEachCombination(n, size, [&](std::span<const int> pick) {
      uint64_t m = 0;
      for (int i : pick) m |= uint64_t{1} << i;
      if (covered_by_smaller(m)) return false;
      PointSet sub = x.Subset(pick);
      for (const Point& y : net) {
        if (ConvContains(sub, y, limits)) {
          masks.push_back(m);
          break;
        }
      }
      return false;
    });
  }
  std::vector<std::vector<uint64_t>> by_top(n);
  for (uint64_t m : masks) by_top[63 - __builtin_clzll(m)].push_back(m);

  // Search for a threshold-size subset containing no mask.
  std::vector<int> chosen;
  std::function<bool(int, uint64_t)> search = [&](int pos,
                                                  uint64_t set) -> bool {
    if (static_cast<int>(chosen.size()) == threshold) return true;
    if (n - pos < threshold - static_cast<int>(chosen.size())) return false;
    uint64_t with = set | (uint64_t{1} << pos);
    bool completes = std::any_of(by_top[pos].begin(), by_top[pos].end(),
                                 [with](uint64_t m) { return (m & ~with) == 0; });
    if (!completes) {
      chosen.push_back(pos);
      if (search(pos + 1, with)) return true;
      chosen.pop_back();
    }
    return search(pos + 1, set);
  };
  if (search(0, 0)) {
    out.is_net = false;
    out.missed = chosen;
  }
  return out;
}

WeakNetCheck CheckWeakNet(const PointSet& x, const PointSet& net,
                          const Rational& r, const Limits& limits) {
  if (r < 1) throw PreconditionError("r must be >= 1");
  int threshold = static_cast<int>(Ceil(Rational(BigInt(x.size())) / r).get_si());
  return CheckWeakNetThreshold(x, net, std::max(threshold, 1), limits);
}

bool BruteForceWeakNetCheck(const PointSet& x, const PointSet& net,
                            const Rational& r, const Limits& limits) {
  return CheckWeakNet(x, net, r, limits).is_net;
}

}  // namespace stairnet
