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

#include "stairnet/serialize.h"

#include <fstream>
#include <sstream>
#include <string>

#include "stairnet/errors.h"

namespace stairnet {
namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw PreconditionError("malformed JSON: " + what);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    Malformed(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int IntField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_number_integer()) Malformed(std::string(key) + " not an integer");
  return v.get<int>();
}

BigInt BigIntFromJson(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (!j.is_string()) Malformed("expected an integer string");
  BigInt out;
  if (out.set_str(j.get<std::string>(), 10) != 0) {
    Malformed("bad integer '" + j.get<std::string>() + "'");
  }
  return out;
}

}  // namespace

Json ToJson(const Rational& v) { return FormatRational(v); }

Json ToJson(const Point& p) {
  Json out = Json::array();
  for (const Rational& c : p.coords()) out.push_back(ToJson(c));
  return out;
}

Json ToJson(const PointSet& s) {
  Json pts = Json::array();
  for (const Point& p : s) pts.push_back(ToJson(p));
  return {{"dim", s.dim()}, {"points", pts}};
}

Json ToJson(const AxisBox& b) {
  return {{"lo", ToJson(b.lo())}, {"hi", ToJson(b.hi())}};
}

Json ToJson(const BoxUnion& u) {
  Json boxes = Json::array();
  for (const AxisBox& b : u.boxes()) boxes.push_back(ToJson(b));
  return {{"dim", u.dim()}, {"boxes", boxes}};
}

Json ToJson(const GridSpec& spec) {
  Json k = Json::array();
  for (const BigInt& v : spec.K) k.push_back(v.get_str());
  Json x = Json::array();
  for (const auto& axis : spec.X) {
    Json row = Json::array();
    for (const Rational& v : axis) row.push_back(ToJson(v));
    x.push_back(row);
  }
  return {{"d", std::to_string(spec.d)},
          {"m", std::to_string(spec.m)},
          {"K", k},
          {"X", x}};
}

Json ToJson(const StabFamily& f) {
  return {{"j", f.j}, {"n", f.n}, {"size", f.tuples.size()},
          {"tuples", f.tuples}};
}

Json ToJson(const TriangleFamily& f) {
  Json tris = Json::array();
  for (const IncreasingTriangle& t : f.triangles) {
    tris.push_back({t.i1, t.j1, t.i2, t.j2, t.i3, t.j3});
  }
  return {{"grid", ToJson(f.spec)},
          {"rho", ToJson(f.rho)},
          {"size", f.triangles.size()},
          {"triangles", tris}};
}

Json ToJson(const Refutation& r) {
  return {{"success", r.success},
          {"k", r.k},
          {"T", r.types},
          {"best_count", r.best_count},
          {"anchor", ToJson(r.anchor)},
          {"vol_lb", ToJson(r.vol_lb)},
          {"S", ToJson(r.witness)}};
}

Json ToJson(const NetCertificate& c) {
  return {{"epsilon", ToJson(c.epsilon)},
          {"v", ToJson(c.v)},
          {"box", ToJson(c.box)},
          {"bound", ToJson(c.bound)},
          {"net", ToJson(c.net)}};
}

Rational RationalFromJson(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) Malformed("expected a rational string");
  return ParseRational(j.get<std::string>());
}

Point PointFromJson(const Json& j) {
  if (!j.is_array()) Malformed("point must be an array");
  std::vector<Rational> c;
  for (const Json& v : j) c.push_back(RationalFromJson(v));
  return Point(std::move(c));
}

PointSet PointSetFromJson(const Json& j) {
  if (j.is_array()) {
    if (j.empty()) Malformed("bare point array must be nonempty");
    std::vector<Point> pts;
    for (const Json& p : j) pts.push_back(PointFromJson(p));
    int dim = pts[0].dim();
    for (const Point& p : pts) {
      if (p.dim() != dim) throw DimensionMismatch("mixed point dimensions");
    }
    return PointSet(dim, std::move(pts));
  }
  int dim = IntField(j, "dim");
  std::vector<Point> pts;
  for (const Json& p : Field(j, "points")) {
    pts.push_back(PointFromJson(p));
    if (pts.back().dim() != dim) throw DimensionMismatch("point dimension");
  }
  return PointSet(dim, std::move(pts));
}

AxisBox AxisBoxFromJson(const Json& j) {
  return AxisBox(PointFromJson(Field(j, "lo")), PointFromJson(Field(j, "hi")));
}

BoxUnion BoxUnionFromJson(const Json& j) {
  BoxUnion u(IntField(j, "dim"));
  for (const Json& b : Field(j, "boxes")) u.Add(AxisBoxFromJson(b));
  return u;
}

GridSpec GridSpecFromJson(const Json& j) {
  std::vector<std::vector<Rational>> x;
  for (const Json& row : Field(j, "X")) {
    std::vector<Rational> axis;
    for (const Json& v : row) axis.push_back(RationalFromJson(v));
    x.push_back(std::move(axis));
  }
  GridSpec spec = ValidateGrid(std::move(x));
  if (BigIntFromJson(Field(j, "d")) != spec.d ||
      BigIntFromJson(Field(j, "m")) != spec.m) {
    Malformed("d/m disagree with the coordinate table");
  }
  const Json& k = Field(j, "K");
  if (!k.is_array() || k.size() != spec.K.size()) Malformed("K length");
  for (size_t i = 0; i < k.size(); ++i) {
    if (BigIntFromJson(k[i]) != spec.K[i]) Malformed("K disagrees with X");
  }
  return spec;
}

StabFamily StabFamilyFromJson(const Json& j) {
  StabFamily f;
  f.j = IntField(j, "j");
  f.n = IntField(j, "n");
  try {
    f.tuples = Field(j, "tuples").get<std::vector<StabTuple>>();
  } catch (const nlohmann::json::exception& e) {
    Malformed(e.what());
  }
  for (const StabTuple& t : f.tuples) {
    if (static_cast<int>(t.size()) != f.j) Malformed("tuple length != j");
    for (size_t i = 0; i < t.size(); ++i) {
      if (t[i] < 1 || t[i] > f.n || (i > 0 && t[i] <= t[i - 1])) {
        Malformed("tuple entries must increase within [1, n]");
      }
    }
  }
  return f;
}

TriangleFamily TriangleFamilyFromJson(const Json& j) {
  TriangleFamily f{GridSpecFromJson(Field(j, "grid")),
                   RationalFromJson(Field(j, "rho")),
                   {}};
  for (const Json& t : Field(j, "triangles")) {
    if (!t.is_array() || t.size() != 6) Malformed("triangle needs 6 indices");
    std::array<int, 6> v;
    for (int i = 0; i < 6; ++i) {
      if (!t[i].is_number_integer()) Malformed("triangle index not an integer");
      v[i] = t[i].get<int>();
    }
    IncreasingTriangle tri{v[0], v[1], v[2], v[3], v[4], v[5]};
    if (!(1 <= tri.i1 && tri.i1 < tri.i2 && tri.i2 < tri.i3 &&
          tri.i3 <= f.spec.m && 1 <= tri.j1 && tri.j1 < tri.j2 &&
          tri.j2 < tri.j3 && tri.j3 <= f.spec.m)) {
      Malformed("triangle indices must increase within [1, m]");
    }
    f.triangles.push_back(tri);
  }
  return f;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    Malformed(path + ": " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace stairnet
