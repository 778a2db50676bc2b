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

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "stairnet/box_union.h"
#include "stairnet/combinatorics.h"
#include "stairnet/errors.h"
#include "stairnet/stair.h"
#include "stairnet/stretched_grid.h"

namespace stairnet {
namespace {

Rational R(long n, long d = 1) { return MakeRational(n, d); }
Point P(std::initializer_list<long> c) { return Point::FromInts(c); }

const char kE[] = "2.718281828459045235360287471352662497757";
const char kLn2[] = "0.6931471805599453094172321214581765680755";

TEST(ChooseKTest, Examples) {
  EXPECT_EQ(ChooseK(4, 2), 5);
  EXPECT_EQ(ChooseK(1, 2), 3);
  EXPECT_EQ(ChooseK(1000, 3), 14);
  for (int64_t n = 1; n < 300; ++n) {
    for (int d = 1; d <= 4; ++d) {
      int k = ChooseK(n, d);
      BigInt lo = BigInt(n) << (d + 1), two_k = BigInt(1) << k;
      EXPECT_TRUE(lo <= two_k && two_k < 2 * lo) << n << " " << d;
    }
  }
  EXPECT_THROW(ChooseK(0, 2), PreconditionError);
}

TEST(BoxTypesTest, Examples) {
  EXPECT_EQ(BoxTypes(5, 2),
            (std::vector<BoxType>{{1, 4}, {2, 3}, {3, 2}, {4, 1}}));
  EXPECT_EQ(BoxTypes(3, 3), (std::vector<BoxType>{{1, 1, 1}}));
  EXPECT_EQ(BoxTypes(6, 3).size(), 10u);
  for (int k = 1; k <= 12; ++k) {
    for (int d = 1; d <= std::min(k, 5); ++d) {
      EXPECT_EQ(BigInt(BoxTypes(k, d).size()), Binomial(k - 1, d - 1));
    }
  }
  EXPECT_THROW(BoxTypes(2, 3), PreconditionError);
}

TEST(NormalBoxTest, Examples) {
  AxisBox b = NormalBox({1, 4}, P({1, 1}));
  EXPECT_EQ(b.lo(), Point({R(1, 2), R(15, 16)}));
  EXPECT_EQ(b.hi(), P({1, 1}));
  AxisBox c = NormalBox({2, 3}, Point({R(1, 2), R(1, 2)}));
  EXPECT_EQ(c.lo(), Point({R(1, 4), R(3, 8)}));
  for (const BoxType& t : BoxTypes(5, 2)) {
    EXPECT_EQ(NormalBox(t, Point({R(3, 4), R(5, 8)})).Volume(), R(1, 32));
  }
  EXPECT_THROW(NormalBox({1, 1}, Point({R(1, 4), R(1)})), PreconditionError);
}

TEST(FanTest, SinglePointExample) {
  PointSet net(2, {Point({R(9, 10), R(9, 10)})});
  Point anchor({R(1, 2), R(1, 2)});
  EXPECT_EQ(ChooseK(1, 2), 3);
  std::vector<bool> empty = EmptyFanBoxes(net, anchor, 3);
  EXPECT_EQ(empty, (std::vector<bool>{true, true}));
  BoxUnion s = FanUnion(BoxTypes(3, 2), anchor);
  EXPECT_TRUE(SameSet(s, BoxUnion(2, {AxisBox(Point({R(0), R(1, 4)}), anchor),
                                      AxisBox(Point({R(1, 4), R(0)}), anchor)})));
  EXPECT_EQ(Volume(s), R(3, 16));
  Refutation r = RefuteNet(net, {50, 1, 1});
  EXPECT_TRUE(r.success);
  EXPECT_EQ(r.types, 2);
}

TEST(FanTest, OriginPointLeavesEveryBoxEmpty) {
  PointSet net(2, {P({0, 0})});
  std::vector<bool> empty = EmptyFanBoxes(net, P({1, 1}), 3);
  EXPECT_EQ(std::count(empty.begin(), empty.end(), true), 2);
}

TEST(FanTest, EmptinessMatchesClosedBoxes) {
  std::mt19937_64 gen(15);
  std::uniform_int_distribution<long> num(0, 64);
  for (int trial = 0; trial < 100; ++trial) {
    int d = 2 + trial % 2;
    int k = d + 2 + trial % 4;
    PointSet net(d);
    for (int s = 0; s < 6; ++s) {
      std::vector<Rational> c;
      for (int i = 0; i < d; ++i) c.push_back(R(num(gen), 64));
      net.Add(Point(c));
    }
    std::vector<Rational> a;
    for (int i = 0; i < d; ++i) a.push_back(R(32 + num(gen) / 2, 64));
    Point anchor(a);
    std::vector<bool> empty = EmptyFanBoxes(net, anchor, k);
    std::vector<BoxType> types = BoxTypes(k, d);
    for (size_t t = 0; t < types.size(); ++t) {
      EXPECT_EQ(empty[t], !NormalBox(types[t], anchor).HitsAny(net));
    }
  }
}

TEST(FanTest, LowerSubboxesAreDisjoint) {
  std::mt19937_64 gen(19);
  std::uniform_int_distribution<long> num(0, 1 << 20);
  for (int trial = 0; trial < 30; ++trial) {
    int d = 2 + trial % 2, k = d + 3;
    std::vector<Rational> a;
    for (int i = 0; i < d; ++i) a.push_back(R(1, 2) + R(num(gen), 1 << 21));
    Point anchor(a);
    std::vector<BoxType> types = BoxTypes(k, d);
    for (size_t s = 0; s < types.size(); ++s) {
      for (size_t t = s + 1; t < types.size(); ++t) {
        AxisBox x = LowerSubbox(NormalBox(types[s], anchor));
        AxisBox y = LowerSubbox(NormalBox(types[t], anchor));
        BoxUnion both(d, {x, y});
        EXPECT_EQ(Volume(both), x.Volume() + y.Volume());
      }
    }
    EXPECT_TRUE(IsStairConvex(FanUnion(types, anchor)));
  }
}

TEST(FanTest, AnchorSetOfAPointIsSmall) {
  // {p in [1/2,1]^d : x in B_t(p)} = prod [x_i, x_i + 2^-t_i] cut to V.
  std::mt19937_64 gen(23);
  std::uniform_int_distribution<long> num(0, 256);
  for (int trial = 0; trial < 200; ++trial) {
    int d = 2 + trial % 2, k = d + trial % 5;
    std::vector<BoxType> types = BoxTypes(k, d);
    const BoxType& t = types[gen() % types.size()];
    std::vector<Rational> lo, hi;
    bool empty = false;
    for (int i = 0; i < d; ++i) {
      Rational x = R(num(gen), 256);
      Rational a = std::max(x, R(1, 2)), b = std::min(Rational(x + Pow2(-t[i])), R(1));
      if (b < a) empty = true;
      lo.push_back(a);
      hi.push_back(std::max(a, b));
    }
    Rational vol = empty ? Rational(0) : AxisBox(Point(lo), Point(hi)).Volume();
    EXPECT_LE(vol, Pow2(-k));
  }
}

TEST(RefuteNetTest, WitnessIsSoundOnHammersley) {
  PointSet net = Hammersley(64, 2);
  Refutation r = RefuteNet(net, {200, 7, 1});
  EXPECT_TRUE(r.success);
  EXPECT_GE(4 * r.best_count, r.types);
  EXPECT_EQ(r.vol_lb, Rational(r.best_count) * Pow2(-2 - r.k));
  EXPECT_TRUE(r.witness.AvoidsAll(net));
  EXPECT_TRUE(IsStairConvex(r.witness));
  EXPECT_GE(Volume(r.witness), r.vol_lb);
  EXPECT_TRUE(InAnchorRegion(r.anchor));
}

TEST(RefuteNetTest, IndependentOfWorkerCount) {
  PointSet net = Hammersley(100, 2);
  Refutation a = RefuteNet(net, {60, 3, 1});
  Refutation b = RefuteNet(net, {60, 3, 4});
  EXPECT_EQ(a.anchor, b.anchor);
  EXPECT_EQ(a.best_count, b.best_count);
  Refutation c = RefuteNet(net, {60, 4, 1});
  EXPECT_FALSE(c.anchor == a.anchor);
}

TEST(RefuteNetTest, Preconditions) {
  EXPECT_THROW(RefuteNet(PointSet(2), {10, 1, 1}), PreconditionError);
  EXPECT_THROW(RefuteNet(PointSet(2, {P({2, 0})}), {10, 1, 1}),
               PreconditionError);
}

TEST(HammersleyTest, Examples) {
  PointSet h = Hammersley(4, 2);
  EXPECT_EQ(h.points(),
            (std::vector<Point>{P({0, 0}), Point({R(1, 4), R(1, 2)}),
                                Point({R(1, 2), R(1, 4)}),
                                Point({R(3, 4), R(3, 4)})}));
  EXPECT_EQ(Hammersley(1, 3).points(), (std::vector<Point>{P({0, 0, 0})}));
  PointSet h3 = Hammersley(8, 3);
  for (int i = 0; i < 8; ++i) {
    EXPECT_EQ(h3[i][0], R(i, 8));
    EXPECT_EQ(h3[i][1], oracle::DigitReversal(i, 2));
    EXPECT_EQ(h3[i][2], oracle::DigitReversal(i, 3));
  }
  EXPECT_EQ(RadicalInverse(5, 3), R(7, 9));  // 5 = "12" in base 3
}

TEST(HammersleyTest, Properties) {
  for (int d = 1; d <= 5; ++d) {
    PointSet h = Hammersley(97, d);
    ASSERT_EQ(h.size(), 97u);
    for (const Point& p : h) {
      for (int i = 0; i < d; ++i) EXPECT_TRUE(0 <= p[i] && p[i] < 1);
    }
    for (uint64_t i = 0; i < 97; ++i) {
      if (d >= 4) EXPECT_EQ(h[i][3], oracle::DigitReversal(i, 5));
    }
  }
}

TEST(LargestEmptyBoxTest, Examples) {
  EmptyBox one = LargestEmptyBox(PointSet(2, {Point({R(1, 2), R(1, 2)})}));
  EXPECT_EQ(one.volume, R(1, 2));
  EmptyBox none = LargestEmptyBox(PointSet(3));
  EXPECT_EQ(none.volume, 1);
  std::vector<Point> two = {Point({R(1, 4), R(1, 4)}),
                            Point({R(3, 4), R(3, 4)})};
  EXPECT_EQ(LargestEmptyBox(PointSet(2, two)).volume,
            oracle::BruteForceEmptyBoxVolume(two, 2));
}

TEST(LargestEmptyBoxTest, AgreesWithCandidateEnumeration) {
  std::mt19937_64 gen(50);
  std::uniform_int_distribution<long> num(0, 32);
  for (int trial = 0; trial < 120; ++trial) {
    int d = 1 + trial % 3;
    int n = 1 + trial % (d == 3 ? 5 : 9);
    std::vector<Point> pts;
    for (int s = 0; s < n; ++s) {
      std::vector<Rational> c;
      for (int i = 0; i < d; ++i) c.push_back(R(num(gen), 32));
      pts.emplace_back(c);
    }
    PointSet net(d, pts);
    EmptyBox e = LargestEmptyBox(net);
    ASSERT_EQ(e.volume, oracle::BruteForceEmptyBoxVolume(net.points(), d))
        << "trial " << trial;
    EXPECT_EQ(e.box.Volume(), e.volume);
    for (const Point& p : net) {  // the box interior avoids the net
      bool inside = true;
      for (int i = 0; i < d; ++i) {
        inside = inside && e.box.lo()[i] < p[i] && p[i] < e.box.hi()[i];
      }
      EXPECT_FALSE(inside);
    }
  }
}

TEST(LargestEmptyBoxTest, Guard) {
  Limits tight;
  tight.max_empty_box_points = 10;
  EXPECT_THROW(LargestEmptyBox(Hammersley(20, 2), tight), GuardError);
}

TEST(StairVolumeBoundTest, EnclosesClosedForms) {
  Rational e = ParseRational(kE), ln2 = ParseRational(kLn2);
  Rational slack = Pow2(-20) + Pow2(-40);
  // d = 1: e v.
  Rational b1 = StairVolumeBound(R(1, 3), 1);
  EXPECT_GE(b1, e / 3 - Pow2(-100));
  EXPECT_LE(b1, e / 3 + slack);
  // d = 2, v = 1/4: e/4 * 2 ln 2.
  Rational truth = e * ln2 / 2;
  Rational b2 = StairVolumeBound(R(1, 4), 2);
  EXPECT_GE(b2, truth - Pow2(-100));
  EXPECT_LE(b2, truth + slack);
  // d = 3, v = 1/8: e/8 * (3 ln 2)^2.
  Rational truth3 = e * 9 * ln2 * ln2 / 8;
  Rational b3 = StairVolumeBound(R(1, 8), 3);
  EXPECT_GE(b3, truth3 - Pow2(-100));
  EXPECT_LE(b3, truth3 + slack);
  EXPECT_THROW(StairVolumeBound(R(1, 2), 2), PreconditionError);
  EXPECT_THROW(StairVolumeBound(R(0), 2), PreconditionError);
}

TEST(StairVolumeBoundTest, InverseEThreshold) {
  // 1/e = 0.36787944117144232159...
  EXPECT_TRUE(AtMostInverseE(ParseRational("0.3678794411714423")));
  EXPECT_FALSE(AtMostInverseE(ParseRational("0.3678794411714424")));
  // Close to 1/e the bound approaches e * (1/e) * ln e = 1.
  Rational b = StairVolumeBound(ParseRational("0.3678794411714423"), 2);
  EXPECT_GE(b, R(1) - Pow2(-40));
  EXPECT_LE(b, R(1) + Pow2(-19));
}

TEST(CertifyTest, Examples) {
  CertifyOutcome one =
      CertifyStairNet(PointSet(2, {Point({R(1, 2), R(1, 2)})}), R(1, 4));
  EXPECT_FALSE(one.certificate.has_value());
  EXPECT_EQ(one.v, R(1, 2));
  EXPECT_FALSE(one.failure.empty());
  EXPECT_FALSE(CertifyStairNet(PointSet(2), R(1)).certificate.has_value());
}

TEST(CertifyTest, CertificateIsConsistent) {
  PointSet net = Hammersley(256, 2);
  CertifyOutcome c = CertifyStairNet(net, R(1, 2));
  ASSERT_TRUE(c.certificate.has_value()) << c.failure;
  EXPECT_LT(c.certificate->bound, R(1, 2));
  EXPECT_TRUE(AtMostInverseE(c.certificate->v));
  EXPECT_EQ(c.certificate->v, LargestEmptyBox(net).volume);
  EXPECT_EQ(c.certificate->box.Volume(), c.certificate->v);
  Refutation r = RefuteNet(net, {400, 9, 1});
  if (r.success) EXPECT_LT(Volume(r.witness), R(1, 2));
}

TEST(BuildStairNetTest, SmallR) {
  BuildOutcome b = BuildStairNet(R(4), 2);
  EXPECT_EQ(b.sizes_tried.front(), 4);
  EXPECT_EQ(static_cast<int64_t>(b.certificate.net.size()),
            b.sizes_tried.back());
  EXPECT_LT(b.certificate.bound, R(1, 4));
  for (size_t i = 1; i < b.sizes_tried.size(); ++i) {
    EXPECT_EQ(b.sizes_tried[i], 2 * b.sizes_tried[i - 1]);
  }
  BuildOutcome one = BuildStairNet(R(1), 2);
  EXPECT_GT(one.sizes_tried.size(), 1u);
  Limits tight;
  tight.max_build_iterations = 1;
  EXPECT_THROW(BuildStairNet(R(16), 2, tight), GuardError);
  EXPECT_THROW(BuildStairNet(R(1, 2), 2), PreconditionError);
}

TEST(TransferTest, Epsilon) {
  EXPECT_EQ(TransferredEpsilon(R(1, 10), 3, 2, 100), R(13, 50));
  EXPECT_EQ(TransferredEpsilon(R(1, 10), 0, 2, 100), R(1, 10) + R(4, 100));
  EXPECT_EQ(TransferredEpsilon(0, 5, 3, 10), R(36, 10));
}

TEST(TransferTest, MapsThroughPi) {
  GridSpec g = BuildGrid(2, 100);
  PointSet net(2, {Point({R(1, 3), R(1, 2)}), Point({R(0), R(1)}),
                   Point({R(99, 100), R(1, 7)})});
  Transfer to = TransferToWeakNet(net, R(1, 10), g);
  EXPECT_EQ(to.epsilon, R(13, 50));
  for (size_t i = 0; i < net.size(); ++i) {
    EXPECT_EQ(to.net[i], PiInverse(net[i], g));
  }
  Transfer back = TransferFromWeakNet(to.net, R(1, 10), g);
  EXPECT_EQ(back.net.points(), net.points());
  EXPECT_EQ(TransferToWeakNet(PointSet(2), 0, g).epsilon, R(4, 100));
}

TEST(TransferTest, TransferredNetIsAWeakNetOnTheGrid) {
  GridSpec g = BuildGrid(2, 4);
  PointSet grid = g.AllPoints();
  for (int s : {1, 2, 4}) {
    PointSet net = Hammersley(s, 2);
    Transfer t = TransferToWeakNet(net, R(1, 2), g);
    int threshold = static_cast<int>(Ceil(t.epsilon * 16).get_si());
    EXPECT_TRUE(CheckWeakNetThreshold(grid, t.net, threshold).is_net);
  }
}

TEST(WeakNetCheckTest, Examples) {
  PointSet square(2, {P({0, 0}), P({1, 0}), P({0, 1}), P({1, 1})});
  EXPECT_TRUE(BruteForceWeakNetCheck(square, square, R(4)));
  PointSet center(2, {Point({R(1, 2), R(1, 2)})});
  WeakNetCheck miss = CheckWeakNet(square, center, R(2));
  EXPECT_FALSE(miss.is_net);
  EXPECT_EQ(miss.threshold, 2);
  EXPECT_EQ(miss.missed.size(), 2u);
  PointSet super = square;
  super.Add(P({5, 5}));
  for (int r = 1; r <= 6; ++r) {
    EXPECT_TRUE(BruteForceWeakNetCheck(square, super, R(r)));
  }
  EXPECT_THROW(CheckWeakNet(square, center, R(1, 2)), PreconditionError);
}

TEST(WeakNetCheckTest, AgreesWithSubsetEnumeration) {
  std::mt19937_64 gen(88);
  std::uniform_int_distribution<long> coord(0, 6);
  for (int trial = 0; trial < 150; ++trial) {
    int d = 2 + trial % 2;
    PointSet x(d), net(d);
    int nx = 4 + trial % 6;
    while (static_cast<int>(x.size()) < nx) {
      std::vector<Rational> c;
      for (int i = 0; i < d; ++i) c.push_back(coord(gen));
      x.Add(Point(c));
    }
    for (int s = 0; s < 1 + trial % 3; ++s) {
      std::vector<Rational> c;
      for (int i = 0; i < d; ++i) c.push_back(R(2 * coord(gen) + 1, 2));
      net.Add(Point(c));
    }
    int threshold = 1 + trial % nx;
    bool expected = !ForEachCombination(
        nx, threshold, [&](std::span<const int> pick) {
          PointSet sub = x.Subset(pick);
          for (const Point& q : net) {
            if (oracle::OrientationConvContains(sub.points(), q)) return false;
          }
          return true;  // found a subset whose hull misses the net
        });
    WeakNetCheck w = CheckWeakNetThreshold(x, net, threshold);
    ASSERT_EQ(w.is_net, expected) << "trial " << trial;
    if (!w.is_net) {
      PointSet sub = x.Subset(w.missed);
      EXPECT_EQ(static_cast<int>(sub.size()), threshold);
      for (const Point& q : net) EXPECT_FALSE(ConvContains(sub, q));
    }
  }
}

TEST(WeakNetCheckTest, Guard) {
  PointSet x = Hammersley(25, 2);
  EXPECT_THROW(CheckWeakNet(x, x, R(2)), GuardError);
}

}  // namespace
}  // namespace stairnet
