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

#include "stairnet/enclosure.h"

#include <cstdlib>

#include "stairnet/errors.h"

namespace stairnet {
namespace {

void CheckWidth(const Rational& width) {
  if (sgn(width) <= 0) throw PreconditionError("enclosure width must be > 0");
}

// Bits b with 2^-b <= width / 4.
long BitsFor(const Rational& width) {
  long bits = 2;
  while (Pow2(-bits) > width / 4) ++bits;
  return bits;
}

// 2 atanh(z) for 0 <= z <= 1/3, enclosed to the given width.
Interval TwoAtanh(const Rational& z, const Rational& width) {
  Rational sum = 0;
  Rational power = z;
  const Rational z2 = z * z;
  if (sgn(z) == 0) return {0, 0};
  for (long k = 0;; ++k) {
    sum += power / (2 * k + 1);
    power *= z2;
    // Remaining terms sum to at most power / ((2k+3)(1 - z^2)).
    Rational tail = power / ((2 * k + 3) * (1 - z2));
    if (2 * tail <= width / 2) {
      long bits = BitsFor(width);
      return RoundOutward({2 * sum, 2 * (sum + tail)}, bits);
    }
  }
}

}  // namespace

Interval RoundOutward(const Interval& x, long bits) {
  Rational scale = Pow2(bits);
  Rational lo = Floor(x.lo * scale);
  Rational hi = Ceil(x.hi * scale);
  return {lo / scale, hi / scale};
}

Interval EncloseE(const Rational& width) {
  CheckWidth(width);
  Rational sum = 0;
  Rational term = 1;  // 1/k!
  for (long k = 0;; ++k) {
    sum += term;
    term /= k + 1;
    // Tail sum_{i > k} 1/i! <= 2/(k+1)!.
    if (2 * term <= width / 2) {
      return RoundOutward({sum, sum + 2 * term}, BitsFor(width));
    }
  }
}

Interval EncloseLn2(const Rational& width) {
  CheckWidth(width);
  return TwoAtanh(MakeRational(1, 3), width);
}

Interval EncloseLn(const Rational& x, const Rational& width) {
  CheckWidth(width);
  if (sgn(x) <= 0) throw PreconditionError("logarithm of a non-positive value");
  // x = 2^j y with 1 <= y < 2, ln x = j ln 2 + 2 atanh((y-1)/(y+1)).
  long j = static_cast<long>(BitLength(x.get_num())) -
           static_cast<long>(BitLength(x.get_den()));
  Rational y = x / Pow2(j);
  while (y >= 2) {
    y /= 2;
    ++j;
  }
  while (y < 1) {
    y *= 2;
    --j;
  }
  Rational share = width / 2;
  Interval rest = TwoAtanh((y - 1) / (y + 1), share);
  if (j == 0) return rest;
  Interval ln2 = EncloseLn2(share / std::abs(j));
  Interval scaled = j > 0 ? Interval{ln2.lo * j, ln2.hi * j}
                          : Interval{ln2.hi * j, ln2.lo * j};
  return {scaled.lo + rest.lo, scaled.hi + rest.hi};
}

Interval EncloseLog2(const Rational& x, const Rational& width) {
  CheckWidth(width);
  if (sgn(x) <= 0) throw PreconditionError("logarithm of a non-positive value");
  // Exact for powers of two.
  if (x.get_num() == 1 || x.get_den() == 1) {
    const BigInt& v = x.get_num() == 1 ? x.get_den() : x.get_num();
    if (mpz_popcount(v.get_mpz_t()) == 1) {
      long e = static_cast<long>(BitLength(v)) - 1;
      Rational r = x.get_num() == 1 ? Rational(-e) : Rational(e);
      return {r, r};
    }
  }
  // ln x / ln 2 with both factors enclosed; ln 2 > 1/2.
  Rational w = width / 8;
  for (int round = 0; round < 64; ++round, w /= 4) {
    Interval num = EncloseLn(x, w);
    Interval den = EncloseLn2(w);
    Interval q = sgn(num.lo) >= 0 ? Interval{num.lo / den.hi, num.hi / den.lo}
                 : sgn(num.hi) <= 0
                     ? Interval{num.lo / den.lo, num.hi / den.hi}
                     : Interval{num.lo / den.lo, num.hi / den.lo};
    if (q.Width() <= width) return q;
  }
  throw GuardError("log2 enclosure did not converge");
}

}  // namespace stairnet
