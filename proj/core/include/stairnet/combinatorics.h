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

#ifndef STAIRNET_COMBINATORICS_H_
#define STAIRNET_COMBINATORICS_H_

#include <numeric>
#include <span>
#include <vector>

namespace stairnet {

// Calls fn(span of k increasing indices in [0, n)) for every k-subset in
// lexicographic order. Stops early when fn returns true; returns whether it
// stopped early.
template <typename Fn>
bool ForEachCombination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return false;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (fn(std::span<const int>(idx))) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace stairnet

#endif  // STAIRNET_COMBINATORICS_H_
