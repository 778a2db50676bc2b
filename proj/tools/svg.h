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

#ifndef STAIRNET_TOOLS_SVG_H_
#define STAIRNET_TOOLS_SVG_H_

#include <string>
#include <vector>

#include "stairnet/box_union.h"
#include "stairnet/exact.h"
#include "stairnet/stair.h"

namespace stairnet {

// Minimal SVG canvas for planar pictures. World coordinates are mapped from
// a given window onto a square viewport with y pointing up. The first line
// after the XML prolog is a version banner; everything else depends only on
// the drawn content.
class SvgCanvas {
 public:
  // Window [lo, hi] (two-dimensional).
  SvgCanvas(const AxisBox& window, int pixels = 512);

  void Box(const AxisBox& box, const std::string& fill, double opacity = 0.35);
  void Segment(const Point& a, const Point& b, const std::string& stroke,
               double width = 2.0);
  void Dot(const Point& p, const std::string& fill, double radius = 3.0);
  // Rasterizes a box union on a res x res grid of cell centers over the
  // window and draws each maximal horizontal run of covered cells.
  void Raster(const BoxUnion& region, int res, const std::string& fill);
  void Frame();

  std::string Render() const;

 private:
  double X(const Rational& x) const;
  double Y(const Rational& y) const;

  AxisBox window_;
  int pixels_;
  std::vector<std::string> items_;
};

// Smallest box containing all points, padded by a tenth of its extent (a
// unit square around a single point).
AxisBox PaddedWindow(const std::vector<Point>& points);

void WriteTextFile(const std::string& path, const std::string& text);

}  // namespace stairnet

#endif  // STAIRNET_TOOLS_SVG_H_
