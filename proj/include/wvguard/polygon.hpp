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

// Simple polygons: validation, point location, segment containment and
// boundary bookkeeping.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wvguard/errors.hpp"
#include "wvguard/geometry.hpp"

namespace wvguard {

enum class Location { kOutside, kBoundary, kInside };

// Closed point-in-ring test for a simple ring of either orientation.
inline Location locate_in_ring(std::span<const Point> ring, const Point& p) {
  const std::size_t n = ring.size();
  int winding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    int ca = cmp(a.y, p.y);
    int cb = cmp(b.y, p.y);
    if (ca > 0 && cb > 0) continue;
    if (ca < 0 && cb < 0) continue;
    Orientation o = orient(a, b, p);
    if (o == Orientation::kCollinear) {
      if (point_on_segment(p, a, b)) return Location::kBoundary;
      continue;
    }
    if (ca <= 0) {
      if (cb > 0 && o == Orientation::kLeft) ++winding;
    } else if (cb <= 0 && o == Orientation::kRight) {
      --winding;
    }
  }
  return winding != 0 ? Location::kInside : Location::kOutside;
}

// A position on the boundary: edge index plus parameter t in [0, 1).
// Vertices are reported with t = 0 on their outgoing edge.
struct BoundaryPosition {
  std::size_t edge = 0;
  Rational t;
  Point point;

  friend bool operator<(const BoundaryPosition& a, const BoundaryPosition& b) {
    if (a.edge != b.edge) return a.edge < b.edge;
    return a.t < b.t;
  }
};

// Counterclockwise simple polygon. Construction validates; a clockwise
// input is reversed.
class SimplePolygon {
 public:
  SimplePolygon() = default;
  explicit SimplePolygon(std::vector<Point> vertices);

  std::size_t size() const { return vertices_.size(); }
  const Point& vertex(std::size_t i) const { return vertices_[i % size()]; }
  const std::vector<Point>& vertices() const { return vertices_; }
  std::span<const Point> ring() const { return vertices_; }
  Segment edge(std::size_t i) const {
    return Segment{vertices_[i % size()], vertices_[(i + 1) % size()]};
  }
  std::size_t next(std::size_t i) const { return (i + 1) % size(); }
  std::size_t prev(std::size_t i) const { return (i + size() - 1) % size(); }

  // True when the input had to be reversed to become counterclockwise.
  bool was_reversed() const { return reversed_; }

  Rational area2() const { return signed_area2(vertices_); }

  // Reflex = strict right turn in a counterclockwise ring.
  bool is_reflex(std::size_t i) const {
    return orient(vertex(prev(i)), vertex(i), vertex(next(i))) ==
           Orientation::kRight;
  }

  Location locate(const Point& p) const { return locate_in_ring(vertices_, p); }
  bool contains(const Point& p) const {
    return locate(p) != Location::kOutside;
  }

  std::optional<std::size_t> vertex_index(const Point& p) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (vertices_[i] == p) return i;
    return std::nullopt;
  }

  std::optional<BoundaryPosition> boundary_position(const Point& p) const {
    for (std::size_t i = 0; i < size(); ++i) {
      Segment e = edge(i);
      if (p == e.b) continue;
      if (point_on_segment(p, e)) {
        return BoundaryPosition{i, param_on_line(e.a, e.b, p), p};
      }
    }
    return std::nullopt;
  }

  bool on_boundary(const Point& p) const {
    return boundary_position(p).has_value();
  }

 private:
  std::vector<Point> vertices_;
  bool reversed_ = false;
};

// Validates and orients. Throws TooFewVerticesError,
// DuplicateConsecutiveVertexError or NotSimpleError (with the offending
// edge pair).
inline SimplePolygon validate_simple(std::vector<Point> vertices) {
  return SimplePolygon(std::move(vertices));
}

inline SimplePolygon::SimplePolygon(std::vector<Point> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw TooFewVerticesError("polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices[i] == vertices[(i + 1) % n]) {
      throw DuplicateConsecutiveVertexError(
          "duplicate consecutive vertex at index " + std::to_string(i), i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Segment ei{vertices[i], vertices[(i + 1) % n]};
    for (std::size_t j = i + 1; j < n; ++j) {
      Segment ej{vertices[j], vertices[(j + 1) % n]};
      SegmentIntersection x = segment_intersection(ei, ej);
      if (std::holds_alternative<NoIntersection>(x)) continue;
      bool adjacent_next = (j == i + 1);
      bool adjacent_wrap = (i == 0 && j == n - 1);
      bool ok = false;
      if (const Point* q = std::get_if<Point>(&x)) {
        // Adjacent edges may share only their common vertex; with n == 3
        // both adjacency relations hold at once.
        if (adjacent_next && *q == ei.b) ok = true;
        if (adjacent_wrap && *q == ei.a) ok = true;
      }
      if (!ok) {
        throw NotSimpleError("edges " + std::to_string(i) + " and " +
                                 std::to_string(j) + " intersect",
                             i, j);
      }
    }
  }
  if (sgn(signed_area2(vertices)) < 0) {
    std::reverse(vertices.begin(), vertices.end());
    reversed_ = true;
  }
  vertices_ = std::move(vertices);
}

// Parameters in [0, 1] along a -> b where the segment meets the ring's
// boundary, together with 0 and 1, sorted and deduplicated.
inline std::vector<Rational> boundary_contacts(std::span<const Point> ring,
                                               const Point& a, const Point& b) {
  std::vector<Rational> ts{Rational(0), Rational(1)};
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    SegmentIntersection x =
        segment_intersection(a, b, ring[i], ring[(i + 1) % n]);
    if (const Point* q = std::get_if<Point>(&x)) {
      ts.push_back(param_on_line(a, b, *q));
    } else if (const Segment* o = std::get_if<Segment>(&x)) {
      ts.push_back(param_on_line(a, b, o->a));
      ts.push_back(param_on_line(a, b, o->b));
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

// Closed containment of segment ab in the region bounded by the ring.
inline bool segment_in_ring(std::span<const Point> ring, const Point& a,
                            const Point& b) {
  if (a == b) return locate_in_ring(ring, a) != Location::kOutside;
  std::vector<Rational> ts = boundary_contacts(ring, a, b);
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    Point m = lerp(a, b, (ts[i] + ts[i + 1]) / 2);
    if (locate_in_ring(ring, m) == Location::kOutside) return false;
  }
  return true;
}

// a sees b in P: the closed segment ab lies in P.
inline bool sees(const SimplePolygon& poly, const Point& a, const Point& b) {
  return segment_in_ring(poly.ring(), a, b);
}

// Boundary walk counterclockwise from `from` to `to`, both included.
inline std::vector<Point> boundary_arc(const SimplePolygon& poly,
                                       const BoundaryPosition& from,
                                       const BoundaryPosition& to) {
  std::vector<Point> out{from.point};
  if (from.edge == to.edge && from.t < to.t) {
    out.push_back(to.point);
    return out;
  }
  std::size_t e = from.edge;
  do {
    e = poly.next(e);
    out.push_back(poly.vertex(e));
  } while (e != to.edge);
  if (to.t > 0) out.push_back(to.point);
  return out;
}

// Does the segment pq meet the open interior of the convex ccw ring?
inline bool segment_meets_convex_interior(std::span<const Point> convex,
                                          const Point& p, const Point& q) {
  Rational lo(0), hi(1);
  bool lo_open = false, hi_open = false;
  const std::size_t n = convex.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = convex[i];
    Point d = convex[(i + 1) % n] - a;
    Rational f0 = cross(d, p - a);
    Rational f1 = cross(d, q - a);
    if (f0 == f1) {
      if (sgn(f0) <= 0) return false;
      continue;
    }
    Rational r = f0 / (f0 - f1);
    if (f1 > f0) {  // need t > r
      if (r >= lo) {
        lo = r;
        lo_open = true;
      }
    } else {  // need t < r
      if (r <= hi) {
        hi = r;
        hi_open = true;
      }
    }
  }
  return lo < hi || (lo == hi && !lo_open && !hi_open);
}

// Closed containment of a convex ccw polygon with positive area in the region
// bounded by `ring`.
inline bool ring_contains_convex(std::span<const Point> ring,
                                 std::span<const Point> convex) {
  if (locate_in_ring(ring, centroid_of(convex)) == Location::kOutside)
    return false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (segment_meets_convex_interior(convex, ring[i], ring[(i + 1) % n]))
      return false;
  }
  return true;
}

// Every point of the convex region S is visible from w, i.e. the hull of
// {w} and S lies in P.
inline bool sees_convex(const SimplePolygon& poly, const Point& w,
                        std::span<const Point> convex) {
  std::vector<Point> pts(convex.begin(), convex.end());
  pts.push_back(w);
  std::vector<Point> hull = convex_hull(std::move(pts));
  if (hull.size() < 3) {
    for (const Point& s : convex)
      if (!sees(poly, w, s)) return false;
    return true;
  }
  return ring_contains_convex(poly.ring(), hull);
}

// Ear-clipping triangulation of a ccw simple ring (collinear vertices are
// dropped first). Triangles are ccw.
inline std::vector<std::array<Point, 3>> triangulate(
    std::span<const Point> input) {
  std::vector<Point> ring = simplify_ring({input.begin(), input.end()});
  std::vector<std::array<Point, 3>> tris;
  while (ring.size() > 3) {
    const std::size_t n = ring.size();
    bool clipped = false;
    for (std::size_t i = 0; i < n && !clipped; ++i) {
      const Point& a = ring[(i + n - 1) % n];
      const Point& b = ring[i];
      const Point& c = ring[(i + 1) % n];
      if (orient(a, b, c) != Orientation::kLeft) continue;
      std::array<Point, 3> tri{a, b, c};
      bool empty = true;
      for (std::size_t j = 0; j < n && empty; ++j) {
        const Point& q = ring[j];
        if (q == a || q == b || q == c) continue;
        if (locate_in_ring(tri, q) != Location::kOutside) empty = false;
      }
      if (!empty) continue;
      tris.push_back(tri);
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
      ring = simplify_ring(std::move(ring));
      clipped = true;
    }
    if (!clipped) throw Error("triangulation failed: ring is not simple");
  }
  if (ring.size() == 3) tris.push_back({ring[0], ring[1], ring[2]});
  return tris;
}

}  // namespace wvguard
