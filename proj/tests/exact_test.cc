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

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "stairnet/combinatorics.h"
#include "stairnet/enclosure.h"
#include "stairnet/errors.h"
#include "stairnet/exact.h"
#include "stairnet/limits.h"
#include "stairnet/linear.h"

namespace stairnet {
namespace {

// 40 correct digits of e, ln 2, ln 10.
const char kE[] = "2.718281828459045235360287471352662497757";
const char kLn2[] = "0.6931471805599453094172321214581765680755";
const char kLn10[] = "2.302585092994045684017991454684364207601";

TEST(RationalTest, ParseFormatsRoundTrip) {
  EXPECT_EQ(ParseRational("3/6"), MakeRational(1, 2));
  EXPECT_EQ(ParseRational("-0.125"), MakeRational(-1, 8));
  EXPECT_EQ(ParseRational("3.5e-2"), MakeRational(7, 200));
  EXPECT_EQ(ParseRational("7"), Rational(7));
  EXPECT_EQ(FormatRational(Rational(3)), "3/1");
  EXPECT_EQ(ShortRational(MakeRational(-4, 6)), "-2/3");
  std::mt19937_64 gen(11);
  for (int i = 0; i < 200; ++i) {
    Rational v = MakeRational(BigInt(static_cast<long>(gen() >> 1)) *
                                  BigInt(static_cast<long>(gen() >> 3)) - 5,
                              BigInt(static_cast<long>(gen() % 1000 + 1)));
    EXPECT_EQ(ParseRational(FormatRational(v)), v);
  }
}

TEST(RationalTest, RejectsMalformed) {
  for (const char* bad : {"", "1/0", "abc", "1//2", "0x10", "1.2.3", "/3"}) {
    EXPECT_THROW(ParseRational(bad), PreconditionError) << bad;
  }
  EXPECT_THROW(MakeRational(1, 0), PreconditionError);
}

TEST(RationalTest, IntegerHelpers) {
  EXPECT_EQ(Pow2(10), Rational(1024));
  EXPECT_EQ(Pow2(-3), MakeRational(1, 8));
  EXPECT_EQ(Floor(MakeRational(-7, 2)), -4);
  EXPECT_EQ(Ceil(MakeRational(-7, 2)), -3);
  EXPECT_EQ(Ceil(MakeRational(7, 2)), 4);
  EXPECT_EQ(Binomial(5, 2), 10);
  EXPECT_EQ(Binomial(3, 5), 0);
  EXPECT_EQ(BitLength(0), 0u);
  EXPECT_EQ(BitLength(BigInt(255)), 8u);
  EXPECT_EQ(BitLength(BigInt(256)), 9u);
}

TEST(PointTest, BasicsAndDimensionChecks) {
  Point a = Point::FromInts({1, 2});
  Point b{MakeRational(1, 2), Rational(3)};
  EXPECT_EQ(a.dim(), 2);
  EXPECT_EQ((a + b)[0], MakeRational(3, 2));
  EXPECT_EQ((a - b)[1], Rational(-1));
  EXPECT_EQ(a.With(1, 5), Point::FromInts({1, 5}));
  EXPECT_EQ(a.Prefix(1), Point::FromInts({1}));
  EXPECT_TRUE(b < a);
  EXPECT_THROW(a + Point::FromInts({1}), DimensionMismatch);
  EXPECT_EQ(a.ToString(), "(1,2)");
}

TEST(PointSetTest, DeduplicatesKeepingOrder) {
  PointSet s(2, {Point::FromInts({1, 1}), Point::FromInts({0, 0}),
                 Point::FromInts({1, 1})});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], Point::FromInts({1, 1}));
  EXPECT_FALSE(s.Add(Point::FromInts({0, 0})));
  EXPECT_TRUE(s.Add(Point::FromInts({2, 0})));
  EXPECT_THROW(s.Add(Point::FromInts({1})), DimensionMismatch);
  std::vector<int> idx = {2, 0};
  EXPECT_EQ(s.Subset(idx)[0], Point::FromInts({2, 0}));
}

TEST(CombinationsTest, VisitsAllSubsetsInOrder) {
  int count = 0;
  std::vector<int> first;
  ForEachCombination(6, 3, [&](std::span<const int> c) {
    if (count++ == 0) first.assign(c.begin(), c.end());
    return false;
  });
  EXPECT_EQ(count, 20);
  EXPECT_EQ(first, (std::vector<int>{0, 1, 2}));
  count = 0;
  bool stopped = ForEachCombination(6, 3, [&](std::span<const int>) {
    return ++count == 5;
  });
  EXPECT_TRUE(stopped);
  EXPECT_EQ(count, 5);
}

TEST(LinearTest, DeterminantMatchesHandValues) {
  RationalMatrix m = {{Rational(1), Rational(1), Rational(1)},
                      {Rational(4), Rational(64), Rational(1)},
                      {Rational(16), Rational(4096), Rational(1)}};
  // 1(64-4096) - 1(4-16) + 1(16384-1024) = -4032 + 12 + 15360.
  EXPECT_EQ(Determinant(m), Rational(11340));
  RationalMatrix half = {{MakeRational(1, 2), Rational(0)},
                         {Rational(0), MakeRational(2, 3)}};
  EXPECT_EQ(Determinant(half), MakeRational(1, 3));
  RationalMatrix singular = {{Rational(1), Rational(2)},
                             {Rational(2), Rational(4)}};
  EXPECT_EQ(Determinant(singular), Rational(0));
}

TEST(LinearTest, NonnegativeSolutionsRespectSupport) {
  // Columns (1,0), (0,1), (1,1); rhs (1,1) has support-1 solution e_3.
  std::vector<Rational> rhs = {Rational(1), Rational(1)};
  ExactSystem sys({{Rational(1), Rational(0)},
                   {Rational(0), Rational(1)},
                   {Rational(1), Rational(1)}},
                  rhs);
  auto x = sys.FindNonnegative(1);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[2], Rational(1));
  std::vector<Rational> negative = {Rational(-1)};
  ExactSystem infeasible({{Rational(1)}, {Rational(2)}}, negative);
  EXPECT_FALSE(infeasible.FindNonnegative(2).has_value());
}

TEST(EnclosureTest, ContainsKnownConstants) {
  for (long bits : {10L, 30L, 60L}) {
    Rational w = Pow2(-bits);
    Interval e = EncloseE(w);
    EXPECT_TRUE(e.Contains(ParseRational(kE)));
    EXPECT_LE(e.Width(), w);
    Interval l2 = EncloseLn2(w);
    EXPECT_TRUE(l2.Contains(ParseRational(kLn2)));
    EXPECT_LE(l2.Width(), w);
    Interval l10 = EncloseLn(Rational(10), w);
    EXPECT_TRUE(l10.Contains(ParseRational(kLn10)));
    EXPECT_LE(l10.Width(), w);
  }
  Interval l8 = EncloseLog2(Rational(8), Pow2(-20));
  EXPECT_EQ(l8.lo, Rational(3));
  EXPECT_EQ(l8.hi, Rational(3));
  Interval lt = EncloseLn(MakeRational(1, 10), Pow2(-40));
  EXPECT_TRUE(lt.Contains(-ParseRational(kLn10)));
}

TEST(EnclosureTest, RoundOutwardWidens) {
  Interval x{MakeRational(1, 3), MakeRational(2, 3)};
  Interval r = RoundOutward(x, 4);
  EXPECT_LE(r.lo, x.lo);
  EXPECT_GE(r.hi, x.hi);
  EXPECT_EQ(r.lo * 16, Floor(r.lo * 16));
  EXPECT_EQ(r.hi * 16, Floor(r.hi * 16));
}

TEST(LimitsTest, EnvironmentOverrides) {
  setenv("STAIRNET_MAX_CELLS", "1234", 1);
  Limits l = Limits::FromEnvironment();
  EXPECT_EQ(l.max_cells, 1234);
  unsetenv("STAIRNET_MAX_CELLS");
  EXPECT_EQ(Limits::FromEnvironment().max_cells, Limits().max_cells);
}

}  // namespace
}  // namespace stairnet
