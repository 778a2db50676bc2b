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

#include "stairnet/exact.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>

#include "stairnet/errors.h"
#include "stairnet/limits.h"

namespace stairnet {
namespace {

bool ParseBigInt(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

Rational ParseDecimal(std::string_view text) {
  bool negative = false;
  size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string mantissa;
  long frac_digits = 0;
  bool seen_dot = false;
  bool any_digit = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa.push_back(c);
      any_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!any_digit) {
    throw PreconditionError("malformed number: '" + std::string(text) + "'");
  }
  long exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') {
      throw PreconditionError("malformed number: '" + std::string(text) + "'");
    }
    BigInt e;
    if (!ParseBigInt(text.substr(pos + 1), e) || !e.fits_slong_p() ||
        std::labs(e.get_si()) > 100000) {
      throw PreconditionError("malformed exponent: '" + std::string(text) +
                              "'");
    }
    exponent = e.get_si();
  }
  BigInt num(mantissa, 10);
  if (negative) num = -num;
  long shift = exponent - frac_digits;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(
                                          std::labs(shift)));
  return shift >= 0 ? MakeRational(num * scale) : MakeRational(num, scale);
}

}  // namespace

Rational MakeRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational ParseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw PreconditionError("empty number");
  size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    BigInt num, den;
    if (!ParseBigInt(text.substr(0, slash), num) ||
        !ParseBigInt(text.substr(slash + 1), den)) {
      throw PreconditionError("malformed fraction: '" + std::string(text) +
                              "'");
    }
    return MakeRational(num, den);
  }
  BigInt integer;
  if (ParseBigInt(text, integer)) return MakeRational(integer);
  return ParseDecimal(text);
}

std::string FormatRational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string ShortRational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return FormatRational(value);
}

Rational Pow2(long exponent) {
  BigInt p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(),
               static_cast<mp_bitcnt_t>(std::labs(exponent)));
  return exponent >= 0 ? Rational(p) : MakeRational(1, p);
}

BigInt Floor(const Rational& value) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

BigInt Ceil(const Rational& value) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

BigInt Binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

size_t BitLength(const BigInt& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

Point::Point(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw PreconditionError("point dimension must be >= 1");
}

Point::Point(std::initializer_list<Rational> coords)
    : Point(std::vector<Rational>(coords)) {}

Point Point::FromInts(std::initializer_list<long> coords) {
  std::vector<Rational> c;
  c.reserve(coords.size());
  for (long v : coords) c.emplace_back(v);
  return Point(std::move(c));
}

Point Point::With(int axis, const Rational& value) const {
  std::vector<Rational> c = coords_;
  c[axis] = value;
  return Point(std::move(c));
}

Point Point::Prefix(int count) const {
  return Point(std::vector<Rational>(coords_.begin(), coords_.begin() + count));
}

Point Point::operator+(const Point& other) const {
  CheckSameDim(*this, other);
  std::vector<Rational> c(coords_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + other.coords_[i];
  return Point(std::move(c));
}

Point Point::operator-(const Point& other) const {
  CheckSameDim(*this, other);
  std::vector<Rational> c(coords_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] - other.coords_[i];
  return Point(std::move(c));
}

std::string Point::ToString() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ",";
    out << ShortRational(coords_[i]);
  }
  out << ")";
  return out.str();
}

void CheckSameDim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()));
  }
}

PointSet::PointSet(int dim, std::vector<Point> points) : dim_(dim) {
  if (dim < 1) throw PreconditionError("point set dimension must be >= 1");
  std::set<Point> seen;
  points_.reserve(points.size());
  for (Point& p : points) {
    if (p.dim() != dim_) {
      throw DimensionMismatch("point " + p.ToString() +
                              " does not have dimension " +
                              std::to_string(dim_));
    }
    if (seen.insert(p).second) points_.push_back(std::move(p));
  }
}

PointSet PointSet::Of(std::vector<Point> points) {
  if (points.empty()) {
    throw PreconditionError("PointSet::Of needs at least one point");
  }
  int dim = points.front().dim();
  return PointSet(dim, std::move(points));
}

bool PointSet::Add(const Point& p) {
  if (p.dim() != dim_) {
    throw DimensionMismatch("point " + p.ToString() +
                            " does not have dimension " + std::to_string(dim_));
  }
  if (std::find(points_.begin(), points_.end(), p) != points_.end()) {
    return false;
  }
  points_.push_back(p);
  return true;
}

PointSet PointSet::Subset(std::span<const int> indices) const {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (int i : indices) pts.push_back(points_.at(i));
  return PointSet(dim_, std::move(pts));
}

Limits Limits::FromEnvironment() {
  Limits limits;
  auto read = [](const char* name, auto& field) {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0') return;
    char* end = nullptr;
    long long parsed = std::strtoll(value, &end, 10);
    if (end == value || *end != '\0' || parsed <= 0) {
      throw PreconditionError(std::string("invalid value for ") + name +
                              ": '" + value + "'");
    }
    field = static_cast<std::remove_reference_t<decltype(field)>>(parsed);
  };
  read("STAIRNET_MAX_GRID_BITS", limits.max_grid_bits);
  read("STAIRNET_MAX_CELLS", limits.max_cells);
  read("STAIRNET_MAX_CONV_POINTS", limits.max_conv_points);
  read("STAIRNET_MAX_WEAK_NET_POINTS", limits.max_weak_net_points);
  read("STAIRNET_MAX_ENUMERATION", limits.max_enumeration);
  read("STAIRNET_MAX_STAB_TUPLES", limits.max_stab_tuples);
  read("STAIRNET_MAX_SIMPLICES", limits.max_simplices);
  read("STAIRNET_MAX_ACKERMANN_BITS", limits.max_ackermann_bits);
  read("STAIRNET_MAX_BUILD_ITERATIONS", limits.max_build_iterations);
  read("STAIRNET_MAX_EMPTY_BOX_POINTS", limits.max_empty_box_points);
  return limits;
}

}  // namespace stairnet
