// Copyright 2026 The wvguard Authors
//
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

// SVG diagrams of a polygon and its guards. Coordinates are decimal and for
// display only.
#pragma once

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "wvguard/completion.hpp"
#include "wvguard/geometry.hpp"
#include "wvguard/guards.hpp"
#include "wvguard/oracle.hpp"
#include "wvguard/visibility.hpp"
#include "wvguard/wv_polygon.hpp"

namespace wvguard {

enum class Layer { kVis, kWindows, kPockets, kHoles, kTriangles };

inline Layer layer_from_string(const std::string& s) {
  if (s == "vis") return Layer::kVis;
  if (s == "windows") return Layer::kWindows;
  if (s == "pockets") return Layer::kPockets;
  if (s == "holes") return Layer::kHoles;
  if (s == "triangles") return Layer::kTriangles;
  throw Error("unknown layer: " + s);
}

struct RenderOptions {
  std::set<Layer> layers{Layer::kVis, Layer::kWindows};
  double size = 800;
  double margin = 20;
};

namespace detail {

class Canvas {
 public:
  Canvas(const std::vector<Point>& pts, double size, double margin)
      : margin_(margin) {
    min_x_ = max_x_ = to_double(pts.front().x);
    min_y_ = max_y_ = to_double(pts.front().y);
    for (const Point& p : pts) {
      min_x_ = std::min(min_x_, to_double(p.x));
      max_x_ = std::max(max_x_, to_double(p.x));
      min_y_ = std::min(min_y_, to_double(p.y));
      max_y_ = std::max(max_y_, to_double(p.y));
    }
    double span = std::max(max_x_ - min_x_, max_y_ - min_y_);
    scale_ = span > 0 ? (size - 2 * margin) / span : 1;
    width_ = (max_x_ - min_x_) * scale_ + 2 * margin;
    height_ = (max_y_ - min_y_) * scale_ + 2 * margin;
    out_ << std::fixed << std::setprecision(2);
  }

  std::string xy(const Point& p) const {
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << sx(p) << "," << sy(p);
    return s.str();
  }
  double sx(const Point& p) const {
    return margin_ + (to_double(p.x) - min_x_) * scale_;
  }
  double sy(const Point& p) const {
    return margin_ + (max_y_ - to_double(p.y)) * scale_;
  }

  void polygon(std::span<const Point> ring, const std::string& style) {
    out_ << "<polygon points=\"";
    for (std::size_t i = 0; i < ring.size(); ++i)
      out_ << (i ? " " : "") << xy(ring[i]);
    out_ << "\" " << style << "/>\n";
  }
  void line(const Point& a, const Point& b, const std::string& style) {
    out_ << "<line x1=\"" << sx(a) << "\" y1=\"" << sy(a) << "\" x2=\""
         << sx(b) << "\" y2=\"" << sy(b) << "\" " << style << "/>\n";
  }
  void circle(const Point& p, double r, const std::string& style) {
    out_ << "<circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"" << r
         << "\" " << style << "/>\n";
  }
  void raw(const std::string& s) { out_ << s; }

  std::string finish() const {
    std::ostringstream doc;
    doc << std::fixed << std::setprecision(2)
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_
        << "\" height=\"" << height_ << "\" viewBox=\"0 0 " << width_ << " "
        << height_ << "\">\n"
        << out_.str() << "</svg>\n";
    return doc.str();
  }

 private:
  double margin_, scale_ = 1;
  double min_x_, max_x_, min_y_, max_y_;
  double width_ = 0, height_ = 0;
  std::ostringstream out_;
};

}  // namespace detail

// Draws `wv` in its canonical frame with the guards and the chosen layers.
// Windows are dashed (upper red, lower blue).
inline std::string render_svg(const WVPolygon& wv, const GuardSet& guards,
                              const std::vector<TriangleTask>& tasks = {},
                              const RenderOptions& opt = {}) {
  const SimplePolygon& poly = wv.polygon();
  detail::Canvas c(poly.vertices(), opt.size, opt.margin);
  auto has = [&](Layer l) { return opt.layers.count(l) > 0; };
  std::vector<GuardView> views = make_views(poly, guards.positions());
  WindowSet windows = windows_of(wv, views);

  c.polygon(poly.ring(), "fill=\"#ffffff\" stroke=\"none\"");
  if (has(Layer::kVis))
    for (const GuardView& v : views)
      c.polygon(v.vis.ring, "fill=\"#808080\" fill-opacity=\"0.25\" "
                            "stroke=\"none\"");
  if (has(Layer::kPockets))
    for (const ConstructedEdge& w : windows.all)
      c.polygon(pocket_of(wv, w).region.ring(),
                "fill=\"#f0c040\" fill-opacity=\"0.3\" stroke=\"none\"");
  if (has(Layer::kHoles))
    for (const Hole& h : unseen_regions(poly, views, windows.all).holes)
      c.polygon(h.region.ring(), "fill=\"#d02020\" fill-opacity=\"0.6\" "
                                 "stroke=\"#d02020\"");
  c.polygon(poly.ring(), "fill=\"none\" stroke=\"#000000\" "
                         "stroke-width=\"1.5\"");
  c.line(wv.u(), wv.v(), "stroke=\"#000000\" stroke-width=\"3\"");
  if (has(Layer::kWindows))
    for (const ConstructedEdge& w : windows.all)
      c.line(w.x, w.y,
             std::string("stroke=\"") +
                 (w.kind == WindowKind::kUpper ? "#c02020" : "#2040c0") +
                 "\" stroke-width=\"1.2\" stroke-dasharray=\"5,4\"");
  if (has(Layer::kTriangles)) {
    for (const TriangleTask& t : tasks) {
      c.polygon(std::vector<Point>(t.triangle.begin(), t.triangle.end()),
                "fill=\"none\" stroke=\"#20a040\" stroke-width=\"1.5\"");
      c.circle(t.guard_position, 5, "fill=\"#20a040\"");
    }
  }
  for (const Guard& g : guards)
    c.circle(g.position, 4, "fill=\"#000000\"");
  return c.finish();
}

}  // namespace wvguard
