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

#ifndef STAIRNET_SERIALIZE_H_
#define STAIRNET_SERIALIZE_H_

#include <nlohmann/json.hpp>

#include "stairnet/box_union.h"
#include "stairnet/chains.h"
#include "stairnet/exact.h"
#include "stairnet/selection.h"
#include "stairnet/stair_nets.h"
#include "stairnet/stretched_grid.h"

namespace stairnet {

using Json = nlohmann::ordered_json;

// Rationals travel as "num/den" strings and big integers as decimal
// strings, so every round trip is bit-exact. Parsers throw
// PreconditionError on malformed documents.

Json ToJson(const Rational& v);
Json ToJson(const Point& p);
Json ToJson(const PointSet& s);
Json ToJson(const AxisBox& b);
Json ToJson(const BoxUnion& u);
Json ToJson(const GridSpec& spec);
Json ToJson(const StabFamily& f);
Json ToJson(const TriangleFamily& f);
Json ToJson(const Refutation& r);
Json ToJson(const NetCertificate& c);

Rational RationalFromJson(const Json& j);
Point PointFromJson(const Json& j);
// Accepts {"dim": d, "points": [...]} or a bare nonempty array of points.
PointSet PointSetFromJson(const Json& j);
AxisBox AxisBoxFromJson(const Json& j);
BoxUnion BoxUnionFromJson(const Json& j);
// Validates the coordinate table, so a tampered file is rejected.
GridSpec GridSpecFromJson(const Json& j);
StabFamily StabFamilyFromJson(const Json& j);
TriangleFamily TriangleFamilyFromJson(const Json& j);

Json ReadJsonFile(const std::string& path);
// Writes with two-space indentation and a trailing newline.
void WriteJsonFile(const std::string& path, const Json& j);

}  // namespace stairnet

#endif  // STAIRNET_SERIALIZE_H_
