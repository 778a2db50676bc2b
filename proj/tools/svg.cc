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

#include "svg.h"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "stairnet/errors.h"

namespace stairnet {
namespace {

constexpr char kBanner[] = "<!-- stairnet 0.1.0 -->";

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

SvgCanvas::SvgCanvas(const AxisBox& window, int pixels)
    : window_(window), pixels_(pixels) {
  if (window.dim() != 2) throw DimensionMismatch("SVG pictures are planar");
  for (int i = 0; i < 2; ++i) {
    if (window.lo()[i] >= window.hi()[i]) {
      throw PreconditionError("SVG window must have positive extent");
    }
  }
}

double SvgCanvas::X(const Rational& x) const {
  Rational t = (x - window_.lo()[0]) / (window_.hi()[0] - window_.lo()[0]);
  return t.get_d() * pixels_;
}

double SvgCanvas::Y(const Rational& y) const {
  Rational t = (y - window_.lo()[1]) / (window_.hi()[1] - window_.lo()[1]);
  return (1.0 - t.get_d()) * pixels_;
}

void SvgCanvas::Box(const AxisBox& box, const std::string& fill,
                    double opacity) {
  double x0 = X(box.lo()[0]), x1 = X(box.hi()[0]);
  double y0 = Y(box.hi()[1]), y1 = Y(box.lo()[1]);
  items_.push_back("<rect x=\"" + Fixed(x0) + "\" y=\"" + Fixed(y0) +
                   "\" width=\"" + Fixed(x1 - x0) + "\" height=\"" +
                   Fixed(y1 - y0) + "\" fill=\"" + fill +
                   "\" fill-opacity=\"" + Fixed(opacity) + "\"/>");
}

void SvgCanvas::Segment(const Point& a, const Point& b,
                        const std::string& stroke, double width) {
  items_.push_back("<line x1=\"" + Fixed(X(a[0])) + "\" y1=\"" +
                   Fixed(Y(a[1])) + "\" x2=\"" + Fixed(X(b[0])) + "\" y2=\"" +
                   Fixed(Y(b[1])) + "\" stroke=\"" + stroke +
                   "\" stroke-width=\"" + Fixed(width) + "\"/>");
}

void SvgCanvas::Dot(const Point& p, const std::string& fill, double radius) {
  items_.push_back("<circle cx=\"" + Fixed(X(p[0])) + "\" cy=\"" +
                   Fixed(Y(p[1])) + "\" r=\"" + Fixed(radius) + "\" fill=\"" +
                   fill + "\"/>");
}

void SvgCanvas::Raster(const BoxUnion& region, int res,
                       const std::string& fill) {
  const Rational w = (window_.hi()[0] - window_.lo()[0]) / res;
  const Rational h = (window_.hi()[1] - window_.lo()[1]) / res;
  for (int row = 0; row < res; ++row) {
    Rational y = window_.lo()[1] + h * row;
    int run_start = -1;
    for (int col = 0; col <= res; ++col) {
      bool covered = false;
      if (col < res) {
        Rational x = window_.lo()[0] + w * col;
        covered = region.Contains(Point({x + w / 2, y + h / 2}));
      }
      if (covered && run_start < 0) run_start = col;
      if (!covered && run_start >= 0) {
        Box(AxisBox(Point({window_.lo()[0] + w * run_start, y}),
                    Point({window_.lo()[0] + w * col, y + h})),
            fill, 0.5);
        run_start = -1;
      }
    }
  }
}

void SvgCanvas::Frame() {
  items_.push_back("<rect x=\"0\" y=\"0\" width=\"" + std::to_string(pixels_) +
                   "\" height=\"" + std::to_string(pixels_) +
                   "\" fill=\"none\" stroke=\"#444\"/>");
}

std::string SvgCanvas::Render() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += kBanner;
  out += "\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(pixels_) + "\" height=\"" + std::to_string(pixels_) +
         "\" viewBox=\"0 0 " + std::to_string(pixels_) + " " +
         std::to_string(pixels_) + "\">\n";
  for (const std::string& item : items_) out += "  " + item + "\n";
  out += "</svg>\n";
  return out;
}

AxisBox PaddedWindow(const std::vector<Point>& points) {
  if (points.empty()) throw PreconditionError("nothing to draw");
  std::vector<Rational> lo(points[0].coords().begin(),
                           points[0].coords().end());
  std::vector<Rational> hi = lo;
  for (const Point& p : points) {
    for (int i = 0; i < p.dim(); ++i) {
      if (p[i] < lo[i]) lo[i] = p[i];
      if (p[i] > hi[i]) hi[i] = p[i];
    }
  }
  for (size_t i = 0; i < lo.size(); ++i) {
    Rational pad = hi[i] == lo[i] ? Rational(1, 2) : (hi[i] - lo[i]) / 10;
    lo[i] -= pad;
    hi[i] += pad;
  }
  return AxisBox(Point(lo), Point(hi));
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace stairnet
