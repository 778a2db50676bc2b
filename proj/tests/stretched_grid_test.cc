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

#include "stairnet/stretched_grid.h"

#include <gtest/gtest.h>

#include <random>

#include "stairnet/errors.h"
#include "stairnet/stair.h"

namespace stairnet {
namespace {

Rational R(long n, long d = 1) { return MakeRational(n, d); }
Point P(std::initializer_list<long> c) { return Point::FromInts(c); }

std::vector<Rational> Row(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.push_back(x);
  return out;
}

TEST(BuildGridTest, Examples) {
  GridSpec g = BuildGrid(2, 3);
  EXPECT_EQ(g.K, (std::vector<BigInt>{4, 64}));
  EXPECT_EQ(g.X[0], Row({1, 4, 16}));
  EXPECT_EQ(g.X[1], Row({1, 64, 4096}));
  GridSpec g1 = BuildGrid(1, 2);
  EXPECT_EQ(g1.K, (std::vector<BigInt>{2}));
  EXPECT_EQ(g1.X[0], Row({1, 2}));
  GridSpec g3 = BuildGrid(3, 2);
  EXPECT_EQ(g3.K, (std::vector<BigInt>{8, 64, 512}));
  EXPECT_EQ(g3.X[2], Row({1, 512}));
}

TEST(BuildGridTest, MinimalGridIsPowersOfK) {
  for (int d = 1; d <= 3; ++d) {
    for (int m = 2; m <= 6; ++m) {
      GridSpec g = BuildGrid(d, m);
      for (int i = 0; i < d; ++i) {
        BigInt k_expected = BigInt(1) << d;
        if (i > 0) k_expected *= g.X[i - 1][m - 1].get_num();
        EXPECT_EQ(g.K[i], k_expected);
        for (int j = 0; j < m; ++j) {
          BigInt pw;
          mpz_pow_ui(pw.get_mpz_t(), g.K[i].get_mpz_t(), j);
          EXPECT_EQ(g.X[i][j], Rational(pw));
          if (j + 1 < m) EXPECT_EQ(g.K[i] * g.X[i][j], g.X[i][j + 1]);
        }
      }
      EXPECT_NO_THROW(ValidateGrid(g.X));
    }
  }
}

TEST(BuildGridTest, GuardsAndPreconditions) {
  Limits tight;
  tight.max_grid_bits = 100;
  EXPECT_THROW(BuildGrid(3, 4, tight), GuardError);
  EXPECT_THROW(BuildGrid(0, 3), PreconditionError);
  EXPECT_THROW(BuildGrid(2, 1), PreconditionError);
  EXPECT_THROW(BuildGrid(4, 30), GuardError);
}

TEST(SpaciousGridTest, SquaredRatios) {
  GridSpec g = SpaciousGrid(2, 3);
  EXPECT_EQ(g.K, (std::vector<BigInt>{4, 1024}));
  EXPECT_EQ(g.X[0], Row({1, 16, 256}));
  EXPECT_NO_THROW(ValidateGrid(g.X));
}

TEST(ValidateGridTest, RejectsBrokenTables) {
  EXPECT_THROW(ValidateGrid({Row({1, 3, 16}), Row({1, 64, 4096})}),
               PreconditionError);  // 4 * 1 > 3
  EXPECT_THROW(ValidateGrid({Row({2, 8, 32})}), PreconditionError);
  EXPECT_THROW(ValidateGrid({Row({1, 4, 16}), Row({1, 64})}),
               PreconditionError);
  GridSpec loose = ValidateGrid({Row({1, 5, 100}), Row({1, 400, 200000})});
  EXPECT_EQ(loose.K[1], 400);
}

TEST(FarApartTest, Examples) {
  GridSpec g = BuildGrid(2, 3);
  EXPECT_TRUE(FarApart(P({1, 1}), P({16, 4096}), g));
  EXPECT_FALSE(FarApart(P({4, 64}), P({16, 64}), g));
  EXPECT_FALSE(FarApart(P({4, 64}), P({4, 64}), g));
  EXPECT_THROW(FarApart(P({0, 1}), P({4, 64}), g), PreconditionError);
  PointSet a(2, {P({1, 1})}), b(2, {P({4, 64}), P({16, 4096})});
  EXPECT_TRUE(FarApartSets(a, b, g));
  b.Add(P({16, 1}));
  EXPECT_FALSE(FarApartSets(a, b, g));
}

TEST(FarApartTest, GridPointsDifferingEverywhereAreFarApart) {
  GridSpec g = BuildGrid(3, 3);
  PointSet all = g.AllPoints();
  for (const Point& p : all) {
    for (const Point& q : all) {
      bool differ = p[0] != q[0] && p[1] != q[1] && p[2] != q[2];
      EXPECT_EQ(FarApart(p, q, g), differ);
    }
  }
}

TEST(PiMapTest, Examples) {
  GridSpec g = BuildGrid(2, 3);
  EXPECT_EQ(PiMap(P({4, 64}), g), Point({R(1, 2), R(1, 2)}));
  EXPECT_EQ(PiMap(P({1, 1}), g), P({0, 0}));
  EXPECT_EQ(PiMap(P({16, 4096}), g), P({1, 1}));
  EXPECT_EQ(PiMap(P({2, 1}), g), Point({R(1, 6), R(0)}));
  EXPECT_THROW(PiMap(P({17, 1}), g), PreconditionError);
  EXPECT_THROW(PiInverse(Point({R(2), R(0)}), g), PreconditionError);
}

TEST(PiMapTest, RoundTripsAndPreservesOrder) {
  GridSpec g = BuildGrid(2, 4);
  std::mt19937_64 gen(10);
  std::uniform_int_distribution<long> num(0, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    Point u({R(num(gen), 1000), R(num(gen), 1000)});
    Point v({R(num(gen), 1000), R(num(gen), 1000)});
    Point p = PiInverse(u, g), q = PiInverse(v, g);
    EXPECT_TRUE(g.InBounds(p));
    EXPECT_EQ(PiMap(p, g), u);
    for (int i = 0; i < 2; ++i) EXPECT_EQ(p[i] < q[i], u[i] < v[i]);
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      EXPECT_EQ(PiMap(g.GridPoint({a, b}), g), Point({R(a, 3), R(b, 3)}));
    }
  }
}

TEST(DiagonalTest, Examples) {
  GridSpec g = BuildGrid(2, 3);
  std::vector<Point> diag = Diagonal(g, 3);
  EXPECT_EQ(diag, (std::vector<Point>{P({1, 1}), P({4, 64}), P({16, 4096})}));
  EXPECT_EQ(Diagonal(g, 1), (std::vector<Point>{P({1, 1})}));
  EXPECT_TRUE(Diagonal(g, 0).empty());
  EXPECT_THROW(Diagonal(g, 4), PreconditionError);
}

TEST(CurvePositionTest, Examples) {
  GridSpec g = BuildGrid(2, 3);
  EXPECT_TRUE(CheckCurvePosition(Diagonal(g, 3)));
  EXPECT_FALSE(CheckCurvePosition({P({1, 1}), P({2, 2}), P({3, 3})}));
  EXPECT_TRUE(CheckCurvePosition(Diagonal(BuildGrid(3, 4), 4)));
  EXPECT_THROW(CheckCurvePosition({P({1, 1}), P({2, 2})}), PreconditionError);
}

TEST(CurvePositionTest, LongerDiagonals) {
  EXPECT_TRUE(CheckCurvePosition(Diagonal(BuildGrid(2, 12), 12)));
  EXPECT_TRUE(CheckCurvePosition(Diagonal(BuildGrid(3, 8), 8)));
}

TEST(ConvexityBridgeTest, HullsAgreeOnSmallFarApartPairs) {
  // Far-apart pairs on the stretched grid: ordinary and stair-convex hulls
  // intersect in the same cases.
  std::mt19937_64 gen(44);
  for (int d : {2, 3}) {
    GridSpec g = BuildGrid(d, d == 2 ? 4 : 3);
    std::uniform_int_distribution<int> idx(0, g.m - 1);
    int done = 0;
    while (done < 150) {
      int total = 2 + static_cast<int>(gen() % (d + 1));
      int sp = 1 + static_cast<int>(gen() % (total - 1));
      std::vector<Point> pts;
      for (int s = 0; s < total; ++s) {
        std::vector<int> c(d);
        for (int i = 0; i < d; ++i) c[i] = idx(gen);
        pts.push_back(g.GridPoint(c));
      }
      PointSet p(d, {pts.begin(), pts.begin() + sp});
      PointSet q(d, {pts.begin() + sp, pts.end()});
      if (p.size() + q.size() != pts.size()) continue;
      if (!FarApartSets(p, q, g)) continue;
      EXPECT_EQ(ConvIntersects(p, q), SconvIntersects(p, q));
      ++done;
    }
  }
}

}  // namespace
}  // namespace stairnet
