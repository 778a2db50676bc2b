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

#ifndef STAIRNET_STAIR_NETS_H_
#define STAIRNET_STAIR_NETS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stairnet/box_union.h"
#include "stairnet/enclosure.h"
#include "stairnet/exact.h"
#include "stairnet/limits.h"
#include "stairnet/stretched_grid.h"

namespace stairnet {

// The integer k with 2^(d+1) n <= 2^k < 2^(d+2) n.
int ChooseK(int64_t n, int d);

// A composition t of k into d positive parts; the box B_t(p) has side
// 2^-t_i on axis i.
using BoxType = std::vector<int>;

// All compositions of k into d positive parts, lexicographically ordered.
// There are C(k-1, d-1) of them.
std::vector<BoxType> BoxTypes(int k, int d);

// [p_1 - 2^-t_1, p_1] x ... x [p_d - 2^-t_d, p_d] for an anchor p in
// [1/2, 1]^d.
AxisBox NormalBox(const BoxType& t, const Point& anchor);
// The box with the same lower corner and half the side lengths.
AxisBox LowerSubbox(const AxisBox& box);
bool InAnchorRegion(const Point& p);

// Which fan boxes B_t(p), t in BoxTypes(k, d), contain no point of N (closed
// boxes, so boundary points count as hits).
std::vector<bool> EmptyFanBoxes(const PointSet& net, const Point& anchor,
                                int k);

// Union of the normal boxes anchored at p selected by `types`.
BoxUnion FanUnion(const std::vector<BoxType>& types, const Point& anchor);

struct RefuteOptions {
  int trials = 200;
  uint64_t seed = 0;
  int jobs = 1;
};

struct Refutation {
  bool success = false;   // best_count >= T/4
  int k = 0;
  int64_t types = 0;      // T
  int64_t best_count = 0;
  Point anchor;           // the best anchor found
  BoxUnion witness{1};    // union of the empty boxes at the best anchor
  Rational vol_lb;        // best_count * 2^(-d-k)
};

// Samples anchors in [1/2, 1)^d as dyadic rationals with 64 fractional bits
// from a seeded generator, counts empty fan boxes at each, and keeps the
// anchor with most empty boxes (ties: lexicographically smallest anchor).
// The output does not depend on opts.jobs.
Refutation RefuteNet(const PointSet& net, const RefuteOptions& opts);

// {(i/s, phi_2(i), phi_3(i), ...) : 0 <= i < s} with radical inverses in the
// first d-1 prime bases.
PointSet Hammersley(int64_t s, int d);
Rational RadicalInverse(uint64_t i, uint64_t base);

struct EmptyBox {
  AxisBox box;
  Rational volume;
};

// A maximum-volume box in the unit cube whose interior avoids N. Boundaries
// are drawn from {0, 1} and the point coordinates.
EmptyBox LargestEmptyBox(const PointSet& net, const Limits& limits = Limits());

// Whether v <= 1/e, decided exactly.
bool AtMostInverseE(const Rational& v);

// Rational upper bound, within 2^-20 of the true value, on
// e v ln^(d-1)(1/v), for 0 < v <= 1/e.
Rational StairVolumeBound(const Rational& v, int d);

struct NetCertificate {
  PointSet net{1};
  Rational epsilon;
  Rational v;       // largest empty box volume
  AxisBox box;      // a box attaining v
  Rational bound;   // certified upper bound on e v ln^(d-1)(1/v), < epsilon
};

struct CertifyOutcome {
  std::optional<NetCertificate> certificate;
  Rational v;
  std::optional<Rational> bound;
  std::string failure;  // empty on success
};

// Proves that every stair-convex subset of the unit cube avoiding N has
// volume below eps, when the empty-box bound allows it. Failure does not mean
// N is not a net.
CertifyOutcome CertifyStairNet(const PointSet& net, const Rational& eps,
                               const Limits& limits = Limits());

struct BuildOutcome {
  NetCertificate certificate;
  std::vector<int64_t> sizes_tried;
};

// Doubles s from ceil(r) until Hammersley(s, d) certifies as a 1/r-net.
BuildOutcome BuildStairNet(const Rational& r, int d,
                           const Limits& limits = Limits());

struct Transfer {
  PointSet net{1};
  Rational epsilon;
};

// eps + 2d(|N| + 1)/m.
Rational TransferredEpsilon(const Rational& eps, int64_t net_size, int d,
                            int m);
// Unit-cube stair-convex net to stretched-grid weak net, via the inverse map.
Transfer TransferToWeakNet(const PointSet& net, const Rational& eps,
                           const GridSpec& spec);
// Stretched-grid weak net (points in the bounding box) to unit-cube net.
Transfer TransferFromWeakNet(const PointSet& net, const Rational& eps,
                             const GridSpec& spec);

struct WeakNetCheck {
  bool is_net = true;
  int threshold = 0;
  // A threshold-size subset of X whose hull avoids N, when not a net.
  std::vector<int> missed;
};

// Exhaustive: N is a weak net for X at the given threshold iff every
// threshold-size subset S of X has a net point in conv(S). A threshold above
// |X| is vacuous.
WeakNetCheck CheckWeakNetThreshold(const PointSet& x, const PointSet& net,
                                   int threshold,
                                   const Limits& limits = Limits());
// Threshold ceil(|X| / r), r >= 1.
WeakNetCheck CheckWeakNet(const PointSet& x, const PointSet& net,
                          const Rational& r, const Limits& limits = Limits());
bool BruteForceWeakNetCheck(const PointSet& x, const PointSet& net,
                            const Rational& r,
                            const Limits& limits = Limits());

}  // namespace stairnet

#endif  // STAIRNET_STAIR_NETS_H_
