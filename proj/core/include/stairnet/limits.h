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

#ifndef STAIRNET_LIMITS_H_
#define STAIRNET_LIMITS_H_

#include <cstdint>

namespace stairnet {

// Resource guards for the exact enumeration kernels. Every exponential or
// doubly exponential computation checks one of these before allocating.
struct Limits {
  // Largest admissible bit length of a stretched-grid coordinate.
  int64_t max_grid_bits = 1'000'000;
  // Largest cell count of an exact box-union decomposition.
  int64_t max_cells = 20'000'000;
  // |P| + |Q| cap for subset-enumerating convex hull queries.
  int max_conv_points = 24;
  // |X| cap for the brute-force weak-net oracle (hard ceiling 64).
  int max_weak_net_points = 20;
  // Budget for generic subset / candidate enumerations.
  int64_t max_enumeration = 50'000'000;
  // C(n, j) cap for the stabbing set-cover instance.
  int64_t max_stab_tuples = 1'000'000;
  // C(|X|, d+1) cap for simplex counting.
  int64_t max_simplices = 10'000'000;
  // Largest admissible bit length of an Ackermann value.
  int64_t max_ackermann_bits = 1'000'000;
  // Doubling rounds allowed when searching for a certified stair net.
  int max_build_iterations = 16;
  // |N| * dimension budget for the exact largest-empty-box search.
  int64_t max_empty_box_points = 4096;

  // Defaults overridden by STAIRNET_MAX_* environment variables
  // (e.g. STAIRNET_MAX_GRID_BITS, STAIRNET_MAX_CELLS).
  static Limits FromEnvironment();
};

}  // namespace stairnet

#endif  // STAIRNET_LIMITS_H_
