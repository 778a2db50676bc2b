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


#include "generators.h"

#include <vector>

#include "stairnet/stair_nets.h"

namespace stairnet::testgen {

Rational RandomDyadic(std::mt19937_64& gen, int max_num, int den) {
  return MakeRational(
      std::uniform_int_distribution<int>(0, max_num)(gen), den);
}

BoxUnion RandomFan(std::mt19937_64& gen, int d) {
  const int k = std::uniform_int_distribution<int>(d, d + 4)(gen);
  std::vector<Rational> c;
  for (int i = 0; i < d; ++i) c.push_back(MakeRational(1, 2) +
                                          RandomDyadic(gen, 32, 64));
  std::vector<BoxType> all = BoxTypes(k, d);
  std::vector<BoxType> pick;
  for (const BoxType& t : all) {
    if (gen() & 1) pick.push_back(t);
  }
  if (pick.empty()) {
    pick.push_back(all[gen() % all.size()]);
  }
  return FanUnion(pick, Point(c));
}

BoxUnion RandomStairHull(std::mt19937_64& gen, int d, int max_points) {
  const int count = std::uniform_int_distribution<int>(1, max_points)(gen);
  PointSet x(d);
  while (static_cast<int>(x.size()) < count) {
    std::vector<Rational> c;
    for (int i = 0; i < d; ++i) c.push_back(RandomDyadic(gen, 16, 16));
    x.Add(Point(c));
  }
  return StairHull(x);
}

}  // namespace stairnet::testgen
