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

// Exact test for weak visibility from a segment.
//
// Whether a boundary point sees some point of the segment can only change
// where the point crosses a line through two vertices of P. Each edge is cut
// at all such crossings and one point per open piece is tested; since the set
// of points that see a closed segment is closed, covering the open pieces
// covers their endpoints too. Interior points need no separate test: every
// region of P hidden from the segment touches the boundary along an arc.
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "wvguard/geometry.hpp"
#include "wvguard/polygon.hpp"
#include "wvguard/visibility.hpp"
#include "wvguard/wv_polygon.hpp"

namespace wvguard {

struct WeakVisibilityResult {
  bool visible = false;
  // A point of P that sees no point of the segment (when !visible).
  std::optional<Point> witness;
  explicit operator bool() const { return visible; }
};

namespace detail {

// A point where segment ab meets the closed region of a simple ring,
// preferring the middle of a piece of positive length.
inline std::optional<Point> ring_segment_point(std::span<const Point> ring,
                                               const Point& a, const Point& b) {
  std::vector<Rational> ts{Rational(0), Rational(1)};
  std::optional<Point> touch;
  Point d = b - a;
  auto param = [&](const Point& p) -> Rational {
    return sgn(d.x) != 0 ? (p.x - a.x) / d.x : (p.y - a.y) / d.y;
  };
  for (std::size_t i = 0, n = ring.size(); i < n; ++i) {
    SegmentIntersection x = segment_intersection(a, b, ring[i], ring[(i + 1) % n]);
    if (const Point* p = std::get_if<Point>(&x)) {
      ts.push_back(param(*p));
      touch = *p;
    } else if (const Segment* s = std::get_if<Segment>(&x)) {
      ts.push_back(param(s->a));
      ts.push_back(param(s->b));
      touch = s->a;
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    Point m = lerp(a, b, (ts[i] + ts[i + 1]) / 2);
    if (locate_in_ring(ring, m) != Location::kOutside) return m;
  }
  if (locate_in_ring(ring, a) != Location::kOutside) return a;
  if (locate_in_ring(ring, b) != Location::kOutside) return b;
  return touch;
}

// Does the closed region of a simple ring meet segment ab?
inline bool ring_meets_segment(std::span<const Point> ring, const Point& a,
                               const Point& b) {
  return ring_segment_point(ring, a, b).has_value();
}

// Parameters in (0, 1) where edge e crosses a line through two vertices.
inline std::vector<Rational> critical_params(const SimplePolygon& poly,
                                             std::size_t e) {
  const std::size_t n = poly.size();
  const Point& a = poly.vertex(e);
  const Point& b = poly.vertex(e + 1);
  Point d = b - a;
  std::vector<Rational> ts{Rational(0), Rational(1)};
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = poly.vertex(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      Point r = poly.vertex(j) - p;
      Rational den = cross(d, r);
      if (sgn(den) == 0) continue;
      Rational t = cross(p - a, r) / den;
      if (sgn(t) > 0 && t < 1) ts.push_back(std::move(t));
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

// Sorted, merged closed intervals with a membership test.
class IntervalCover {
 public:
  void add(const Rational& lo, const Rational& hi) {
    list_.emplace_back(lo, hi);
    dirty_ = true;
  }
  bool contains(const Rational& t) {
    if (dirty_) merge();
    auto it = std::upper_bound(
        list_.begin(), list_.end(), t,
        [](const Rational& v, const auto& iv) { return v < iv.first; });
    return it != list_.begin() && t <= std::prev(it)->second;
  }

 private:
  void merge() {
    std::sort(list_.begin(), list_.end());
    std::vector<std::pair<Rational, Rational>> out;
    for (auto& iv : list_) {
      if (!out.empty() && iv.first <= out.back().second) {
        if (iv.second > out.back().second) out.back().second = iv.second;
      } else {
        out.push_back(std::move(iv));
      }
    }
    list_ = std::move(out);
    dirty_ = false;
  }
  std::vector<std::pair<Rational, Rational>> list_;
  bool dirty_ = false;
};

}  // namespace detail

// Is every point of `poly` visible from some point of the closed segment ab?
// The segment must lie in the polygon (an edge or a chord). It suffices to
// check the boundary: a pocket cut off from ab always contains boundary.
// Each edge is cut at its crossings with lines through two vertices; weak
// visibility is constant on the open cells, so one midpoint per cell
// decides. Cells already seen from a known point of ab are skipped.
inline WeakVisibilityResult weakly_visible_from(const SimplePolygon& poly,
                                                const Point& a,
                                                const Point& b) {
  const std::size_t n = poly.size();
  std::vector<detail::IntervalCover> covered(n);
  auto cover_from = [&](const Point& q) {
    VisibilityPolygon vis = visibility_polygon(poly, q);
    auto iv = visible_boundary_intervals(poly, vis);
    for (std::size_t e = 0; e < n; ++e)
      for (const auto& [lo, hi] : iv[e]) covered[e].add(lo, hi);
  };
  cover_from(a);
  cover_from(b);
  cover_from(midpoint(a, b));
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<Rational> ts = detail::critical_params(poly, e);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      Rational tm = (ts[i] + ts[i + 1]) / 2;
      if (covered[e].contains(tm)) continue;
      Point m = lerp(poly.vertex(e), poly.vertex(e + 1), tm);
      VisibilityPolygon vis = visibility_polygon(poly, m);
      std::optional<Point> q = detail::ring_segment_point(vis.ring, a, b);
      if (!q) return {false, m};
      cover_from(*q);
    }
  }
  return {true, std::nullopt};
}

// Edge mode by vertex indices of a simple polygon.
inline WeakVisibilityResult is_weakly_visible(const SimplePolygon& poly,
                                              std::size_t u_index,
                                              std::size_t v_index) {
  return weakly_visible_from(poly, poly.vertex(u_index), poly.vertex(v_index));
}

inline WeakVisibilityResult is_weakly_visible(const WVPolygon& wv) {
  return weakly_visible_from(wv.polygon(), wv.u(), wv.v());
}

}  // namespace wvguard
