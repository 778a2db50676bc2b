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

#include "stairnet/selection.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "stairnet/combinatorics.h"
#include "stairnet/errors.h"
#include "stairnet/linear.h"
#include "stairnet/stair.h"

namespace stairnet {
namespace {

// Relative error of converting a rational to long double through
// mpz_get_d_2exp (53-bit mantissas for numerator and denominator).
constexpr long double kInputError = 0x1p-50L;
constexpr int kMaxExponent = 8000;

struct Approx {
  long double value;
  bool ok;  // finite and in a range where products cannot overflow
};

Approx ToLongDouble(const Rational& v) {
  if (sgn(v) == 0) return {0.0L, true};
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, v.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, v.get_den_mpz_t());
  long e = en - ed;
  if (e > kMaxExponent || e < -kMaxExponent) return {0.0L, false};
  return {std::ldexp(static_cast<long double>(mn) / md, static_cast<int>(e)),
          true};
}

int ExactOrientation(const Point& a, const Point& b, const Point& q) {
  Rational det = (b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0]);
  return sgn(det);
}

struct FastPoint {
  Approx x, y;
};

FastPoint Fast(const Point& p) { return {ToLongDouble(p[0]), ToLongDouble(p[1])}; }

// Sign of the orientation determinant, certified when the filter applies.
int Orientation(const Point& a, const Point& b, const Point& q,
                const FastPoint& fa, const FastPoint& fb, const FastPoint& fq,
                bool exact_only) {
  if (!exact_only && fa.x.ok && fa.y.ok && fb.x.ok && fb.y.ok && fq.x.ok &&
      fq.y.ok) {
    long double t1 = (fb.x.value - fa.x.value) * (fq.y.value - fa.y.value);
    long double t2 = (fb.y.value - fa.y.value) * (fq.x.value - fa.x.value);
    long double det = t1 - t2;
    long double scale =
        (std::fabs(fb.x.value) + std::fabs(fa.x.value)) *
            (std::fabs(fq.y.value) + std::fabs(fa.y.value)) +
        (std::fabs(fb.y.value) + std::fabs(fa.y.value)) *
            (std::fabs(fq.x.value) + std::fabs(fa.x.value));
    long double bound = 8 * kInputError * scale;
    if (std::isfinite(det) && std::isfinite(bound) && std::fabs(det) > bound) {
      return det > 0 ? 1 : -1;
    }
  }
  return ExactOrientation(a, b, q);
}

bool ContainsImpl(const Point& a, const Point& b, const Point& c,
                  const Point& q, const FastPoint& fa, const FastPoint& fb,
                  const FastPoint& fc, const FastPoint& fq, bool exact_only) {
  int s1 = Orientation(a, b, q, fa, fb, fq, exact_only);
  int s2 = Orientation(b, c, q, fb, fc, fq, exact_only);
  int s3 = Orientation(c, a, q, fc, fa, fq, exact_only);
  bool neg = s1 < 0 || s2 < 0 || s3 < 0;
  bool pos = s1 > 0 || s2 > 0 || s3 > 0;
  if (neg && pos) return false;
  if (ExactOrientation(a, b, c) != 0) return true;
  // Degenerate triangle: q must lie on the segment hull of a, b, c.
  for (int i = 0; i < 2; ++i) {
    Rational lo = std::min({a[i], b[i], c[i]});
    Rational hi = std::max({a[i], b[i], c[i]});
    if (q[i] < lo || q[i] > hi) return false;
  }
  return !neg && !pos;
}

void CheckPlanar(const GridSpec& spec) {
  if (spec.d != 2) throw PreconditionError("thin triangles live in the plane");
}

Point Vertex(const GridSpec& spec, int i, int j) {
  return Point({spec.X[0][i - 1], spec.X[1][j - 1]});
}

// Index ranges [lo, hi] (1-based) of grid columns/rows whose bounding boxes
// can contain q: first index with coordinate >= q and last with <= q.
std::array<int, 2> IndexWindow(const std::vector<Rational>& xs,
                               const Rational& q) {
  int first = static_cast<int>(std::lower_bound(xs.begin(), xs.end(), q) -
                               xs.begin()) + 1;
  int last = static_cast<int>(std::upper_bound(xs.begin(), xs.end(), q) -
                              xs.begin());
  return {first, last};
}

template <typename Fn>
void ForEachContaining(const Point& q, const TriangleFamily& f,
                       bool exact_only, Fn&& fn) {
  CheckPlanar(f.spec);
  if (q.dim() != 2) throw DimensionMismatch("probe must be planar");
  const GridSpec& spec = f.spec;
  const auto wx = IndexWindow(spec.X[0], q[0]);
  const auto wy = IndexWindow(spec.X[1], q[1]);
  std::vector<Approx> fx(spec.m + 1), fy(spec.m + 1);
  for (int i = 1; i <= spec.m; ++i) {
    fx[i] = ToLongDouble(spec.X[0][i - 1]);
    fy[i] = ToLongDouble(spec.X[1][i - 1]);
  }
  const FastPoint fq = Fast(q);
  for (const IncreasingTriangle& t : f.triangles) {
    // The bounding box [x_i1, x_i3] x [y_j1, y_j3] must contain q.
    if (t.i1 > wx[1] || t.i3 < wx[0] || t.j1 > wy[1] || t.j3 < wy[0]) continue;
    Point a = Vertex(spec, t.i1, t.j1);
    Point b = Vertex(spec, t.i2, t.j2);
    Point c = Vertex(spec, t.i3, t.j3);
    if (ContainsImpl(a, b, c, q, {fx[t.i1], fy[t.j1]}, {fx[t.i2], fy[t.j2]},
                     {fx[t.i3], fy[t.j3]}, fq, exact_only)) {
      fn(t);
    }
  }
}

}  // namespace

RhoValue RhoFor(int64_t n, const Rational& t, const Rational& c) {
  if (n < 3) throw PreconditionError("rho needs n >= 3");
  if (sgn(c) <= 0) throw PreconditionError("rho constant C must be positive");
  const BigInt n3 = BigInt(n) * n * n;
  if (t < 1 || t > Rational(Binomial(n, 3))) {
    throw PreconditionError("t = " + ShortRational(t) +
                            " outside [1, C(n,3) = " +
                            Binomial(n, 3).get_str() + "]");
  }
  RhoValue out;
  Interval ln = EncloseLn(Rational(n3) / t, Pow2(-40));
  out.rho = c * t / (Rational(n3) * ln.lo);
  // n^(5/2) ln n <= t  <=>  n^5 (ln n)^2 <= t^2.
  const Rational n5 = Rational(n3 * n * n);
  for (long bits = 20;; bits += 20) {
    Interval lnn = EncloseLn(Rational(n), Pow2(-bits));
    if (n5 * lnn.hi * lnn.hi <= t * t) {
      out.in_theorem_range = true;
      break;
    }
    if (n5 * lnn.lo * lnn.lo > t * t) {
      out.in_theorem_range = false;
      break;
    }
  }
  return out;
}

bool SatisfiesFamilyConstraints(const IncreasingTriangle& t, int m,
                                const Rational& rho) {
  if (!(1 <= t.i1 && t.i1 < t.i2 && t.i2 < t.i3 && t.i3 <= m)) return false;
  if (!(1 <= t.j1 && t.j1 < t.j2 && t.j2 < t.j3 && t.j3 <= m)) return false;
  for (int mid : {t.i2, t.j2}) {
    if (3 * mid < m || 3 * mid > 2 * m) return false;
  }
  for (int dim : t.Dims()) {
    if (3 * dim > m) return false;
  }
  return Rational(t.h12() * t.v23()) <= rho * m * m;
}

TriangleFamily GenThinTriangles(const GridSpec& spec, const Rational& rho) {
  CheckPlanar(spec);
  if (sgn(rho) < 0) throw PreconditionError("rho must be nonnegative");
  const int m = spec.m;
  const int lo = (m + 2) / 3, hi = 2 * m / 3, hmax = m / 3;
  const Rational limit = rho * m * m;
  TriangleFamily f{spec, rho, {}};
  for (int i2 = lo; i2 <= hi; ++i2) {
    for (int j2 = lo; j2 <= hi; ++j2) {
      for (int h12 = 1; h12 <= hmax && i2 - h12 >= 1; ++h12) {
        for (int v23 = 1; v23 <= hmax && j2 + v23 <= m; ++v23) {
          if (Rational(h12 * v23) > limit) break;
          for (int h23 = 1; h23 <= hmax && i2 + h23 <= m; ++h23) {
            for (int v12 = 1; v12 <= hmax && j2 - v12 >= 1; ++v12) {
              f.triangles.push_back(
                  {i2 - h12, j2 - v12, i2, j2, i2 + h23, j2 + v23});
            }
          }
        }
      }
    }
  }
  return f;
}

bool TriangleContains(const Point& a, const Point& b, const Point& c,
                      const Point& q, bool exact_only) {
  for (const Point* p : {&a, &b, &c, &q}) {
    if (p->dim() != 2) throw DimensionMismatch("triangles are planar");
  }
  return ContainsImpl(a, b, c, q, Fast(a), Fast(b), Fast(c), Fast(q),
                      exact_only);
}

int64_t CountContaining(const Point& q, const TriangleFamily& f,
                        bool exact_only) {
  int64_t count = 0;
  ForEachContaining(q, f, exact_only,
                    [&](const IncreasingTriangle&) { ++count; });
  return count;
}

std::map<std::array<int, 4>, int64_t> CountContainingByClass(
    const Point& q, const TriangleFamily& f, bool exact_only) {
  std::map<std::array<int, 4>, int64_t> out;
  for (const IncreasingTriangle& t : f.triangles) out[t.Dims()];
  ForEachContaining(q, f, exact_only,
                    [&](const IncreasingTriangle& t) { ++out[t.Dims()]; });
  return out;
}

int64_t CountContaining(const Point& q,
                        const std::vector<std::array<Point, 3>>& triangles) {
  int64_t count = 0;
  for (const auto& t : triangles) {
    if (TriangleContains(t[0], t[1], t[2], q)) ++count;
  }
  return count;
}

int64_t ClassBound(const std::array<int, 4>& dims, int m) {
  return static_cast<int64_t>(dims[0]) * dims[3] + 8 * static_cast<int64_t>(m);
}

ClassCount ClassCountBound(const Point& q, const TriangleFamily& f,
                           const std::array<int, 4>& dims) {
  TriangleFamily cls{f.spec, f.rho, {}};
  for (const IncreasingTriangle& t : f.triangles) {
    if (t.Dims() == dims) cls.triangles.push_back(t);
  }
  if (cls.triangles.empty()) {
    throw PreconditionError("dimension class does not occur in the family");
  }
  return {CountContaining(q, cls), ClassBound(dims, f.spec.m)};
}

TypeClasses TypeClassSizes(const Point& q, const PointSet& x) {
  if (q.dim() != x.dim()) throw DimensionMismatch("probe/set dimension");
  TypeClasses out;
  out.sizes.assign(q.dim() + 1, 0);
  for (const Point& p : x) {
    uint32_t mask = PointTypeMask(p, q);
    if (std::popcount(mask) > 1) out.multiplicity = true;
    for (int j = 0; j <= q.dim(); ++j) {
      if (mask & (1u << j)) ++out.sizes[j];
    }
  }
  return out;
}

int64_t CountSimplicesContaining(const Point& q, const PointSet& x,
                                 bool only_far_apart, const GridSpec& spec,
                                 const Limits& limits) {
  if (q.dim() != x.dim()) throw DimensionMismatch("probe/set dimension");
  const int d = q.dim();
  const int n = static_cast<int>(x.size());
  if (Binomial(n, d + 1) > limits.max_simplices) {
    throw GuardError("C(" + std::to_string(n) + "," + std::to_string(d + 1) +
                     ") simplices exceed cap " +
                     std::to_string(limits.max_simplices));
  }
  std::vector<int> usable;
  for (int i = 0; i < n; ++i) {
    if (!only_far_apart || FarApart(x[i], q, spec)) usable.push_back(i);
  }
  int64_t count = 0;
  ForEachCombination(static_cast<int>(usable.size()), d + 1,
                     [&](std::span<const int> pick) {
    std::vector<int> idx;
    for (int p : pick) idx.push_back(usable[p]);
    for (int i = 0; i < d; ++i) {
      bool below = false, above = false;
      for (int v : idx) {
        below |= x[v][i] <= q[i];
        above |= x[v][i] >= q[i];
      }
      if (!below || !above) return false;
    }
    RationalMatrix m;
    for (int v : idx) {
      std::vector<Rational> row(x[v].coords().begin(), x[v].coords().end());
      row.push_back(1);
      m.push_back(std::move(row));
    }
    if (sgn(Determinant(m)) == 0) return false;
    if (ConvContains(x.Subset(idx), q, limits)) ++count;
    return false;
  });
  return count;
}

std::vector<Point> SampleProbes(const GridSpec& spec, int count,
                                uint64_t seed) {
  if (spec.m < 2) throw PreconditionError("probes need m >= 2");
  if (count < 0) throw PreconditionError("negative probe count");
  std::mt19937_64 gen(seed);
  std::vector<Point> out;
  out.reserve(count);
  const Rational scale = Pow2(-32);
  for (int c = 0; c < count; ++c) {
    std::vector<Rational> coords;
    for (int i = 0; i < spec.d; ++i) {
      int j = std::uniform_int_distribution<int>(0, spec.m - 2)(gen);
      const Rational& lo = spec.X[i][j];
      const Rational& hi = spec.X[i][j + 1];
      Rational offset(
          std::uniform_int_distribution<uint64_t>(1, (1ull << 32) - 1)(gen));
      offset *= scale;
      // Largest e with lo 2^(e+1) <= hi, so lo 2^e (1 + offset) < hi.
      long orders = static_cast<long>(BitLength(Floor(hi / lo))) - 2;
      if (orders < 1) {
        coords.push_back(lo + (hi - lo) * offset);
      } else {
        long e = std::uniform_int_distribution<long>(0, orders)(gen);
        coords.push_back(lo * Pow2(e) * (1 + offset));
      }
    }
    out.emplace_back(std::move(coords));
  }
  return out;
}

}  // namespace stairnet
