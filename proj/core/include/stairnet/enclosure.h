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

#ifndef STAIRNET_ENCLOSURE_H_
#define STAIRNET_ENCLOSURE_H_

#include "stairnet/exact.h"

namespace stairnet {

// Closed rational interval [lo, hi] certified to contain a real quantity.
struct Interval {
  Rational lo;
  Rational hi;

  Rational Width() const { return hi - lo; }
  bool Contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Endpoints rounded outward to multiples of 2^-bits.
Interval RoundOutward(const Interval& x, long bits);

// Enclosures of width at most `width` (> 0).
Interval EncloseE(const Rational& width);
Interval EncloseLn2(const Rational& width);
// Natural logarithm of x > 0.
Interval EncloseLn(const Rational& x, const Rational& width);
Interval EncloseLog2(const Rational& x, const Rational& width);

}  // namespace stairnet

#endif  // STAIRNET_ENCLOSURE_H_
