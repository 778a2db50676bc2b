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

#ifndef STAIRNET_EXACT_H_
#define STAIRNET_EXACT_H_

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stairnet {

// Arbitrary-precision integers and canonical rationals. All geometry in this
// library is exact; nothing is ever rounded.
using BigInt = mpz_class;
using Rational = mpq_class;

// Builds num/den in canonical form. Throws PreconditionError if den == 0.
Rational MakeRational(const BigInt& num, const BigInt& den = 1);

// Accepts "p/q", "p", and decimal notation such as "-0.125" or "3.5e-2".
// Throws PreconditionError on malformed input.
Rational ParseRational(std::string_view text);

// Always "num/den" with den > 0, e.g. "3/1". Round-trips bit-exactly through
// ParseRational.
std::string FormatRational(const Rational& value);

// Compact human form: "3" for integers, "1/2" otherwise.
std::string ShortRational(const Rational& value);

Rational Pow2(long exponent);  // 2^exponent, exponent may be negative
BigInt Floor(const Rational& value);
BigInt Ceil(const Rational& value);
BigInt Binomial(unsigned long n, unsigned long k);
// Number of bits of |value| (0 for 0).
size_t BitLength(const BigInt& value);

// Fixed-dimension coordinate tuple. Immutable after construction.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords);
  Point(std::initializer_list<Rational> coords);

  // Convenience for integer literals in tests and tools.
  static Point FromInts(std::initializer_list<long> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int i) const { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }

  // Copy with coordinate `axis` replaced.
  Point With(int axis, const Rational& value) const;
  // The first `count` coordinates.
  Point Prefix(int count) const;

  Point operator+(const Point& other) const;
  Point operator-(const Point& other) const;

  friend bool operator==(const Point& a, const Point& b) {
    return a.coords_ == b.coords_;
  }
  // Lexicographic.
  friend bool operator<(const Point& a, const Point& b) {
    return a.coords_ < b.coords_;
  }

  std::string ToString() const;

 private:
  std::vector<Rational> coords_;
};

void CheckSameDim(const Point& a, const Point& b);

// Finite point set of a fixed dimension. Duplicates are dropped on
// construction (first occurrence wins, order otherwise preserved).
class PointSet {
 public:
  explicit PointSet(int dim) : dim_(dim) {}
  PointSet(int dim, std::vector<Point> points);
  // Dimension taken from the first point; `points` must be nonempty.
  static PointSet Of(std::vector<Point> points);

  int dim() const { return dim_; }
  size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  // Returns false (and leaves the set unchanged) for a duplicate.
  bool Add(const Point& p);
  PointSet Subset(std::span<const int> indices) const;

 private:
  int dim_;
  std::vector<Point> points_;
};

}  // namespace stairnet

#endif  // STAIRNET_EXACT_H_
