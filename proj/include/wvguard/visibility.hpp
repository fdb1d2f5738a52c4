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

// Exact visibility polygons with tagged edges.
//
// Around the viewpoint p, the directions towards the polygon's vertices split
// the plane into open angular intervals. Inside one interval no vertex is
// met, so the first edge hit by a ray is the same for the whole interval and
// the visible region is the wedge up to that edge. The ring is assembled from
// these wedges plus the radial pieces along the critical directions, which
// are either parts of the boundary or windows (constructed edges).
//
// Two engines decide the per-interval data: a rotational sweep that keeps
// the crossed edges ordered by distance, and a brute-force ray shooter used
// for differential testing.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "wvguard/errors.hpp"
#include "wvguard/geometry.hpp"
#include "wvguard/polygon.hpp"
#include "wvguard/wv_polygon.hpp"

namespace wvguard {

enum class EdgeTag { kBoundary, kConstructed };
enum class PocketSide { kLeftOfXY, kRightOfXY };
enum class WindowKind { kUpper, kLower };

inline const char* to_string(WindowKind k) {
  return k == WindowKind::kUpper ? "upper" : "lower";
}

// Which side of the directed line x -> y counts as "above". Vertical lines
// are resolved as if the plane were sheared by (x, y) -> (x + eps y, y),
// which preserves visibility and every y-coordinate.
inline bool above_is_left(const Point& x, const Point& y) {
  Point d = y - x;
  return sgn(d.x) > 0 || (sgn(d.x) == 0 && sgn(d.y) > 0);
}

// Upper iff the pocket lies below the window's supporting line.
inline WindowKind classify_upper_lower(const Point& x, const Point& y,
                                       PocketSide side) {
  bool pocket_left = side == PocketSide::kLeftOfXY;
  return pocket_left == above_is_left(x, y) ? WindowKind::kLower
                                            : WindowKind::kUpper;
}

inline PocketSide flip(PocketSide s) {
  return s == PocketSide::kLeftOfXY ? PocketSide::kRightOfXY
                                    : PocketSide::kLeftOfXY;
}

// A window of a visibility polygon. x is the lower endpoint; for horizontal
// windows it is the endpoint closer to the viewpoint.
struct ConstructedEdge {
  Point x;
  Point y;
  Point viewpoint;
  std::size_t guard = 0;
  PocketSide pocket_side = PocketSide::kLeftOfXY;
  WindowKind kind = WindowKind::kUpper;
  bool x_on_uv = false;

  Segment segment() const { return Segment{x, y}; }
  Line line() const { return Line{x, y}; }
  // Side of the directed line x -> y holding the pocket.
  Orientation pocket_orientation() const {
    return pocket_side == PocketSide::kLeftOfXY ? Orientation::kLeft
                                                : Orientation::kRight;
  }
  bool on_pocket_side(const Point& q) const {
    return orient(x, y, q) == pocket_orientation();
  }
};

// Builds a window from two points on a ray of the viewpoint; `side` is the
// pocket side relative to the direction q1 -> q2.
inline ConstructedEdge make_window(const Point& q1, const Point& q2,
                                   const Point& viewpoint, PocketSide side) {
  bool q1_lower;
  int c = cmp(q1.y, q2.y);
  if (c != 0) {
    q1_lower = c < 0;
  } else {
    q1_lower = squared_distance(q1, viewpoint) < squared_distance(q2, viewpoint);
  }
  ConstructedEdge w;
  w.viewpoint = viewpoint;
  if (q1_lower) {
    w.x = q1;
    w.y = q2;
    w.pocket_side = side;
  } else {
    w.x = q2;
    w.y = q1;
    w.pocket_side = flip(side);
  }
  w.kind = classify_upper_lower(w.x, w.y, w.pocket_side);
  return w;
}

struct VisibilityPolygon {
  Point viewpoint;
  // Counterclockwise ring; edge i runs from ring[i] to ring[i + 1].
  std::vector<Point> ring;
  std::vector<EdgeTag> tags;
  // For boundary edges, the polygon edge containing it.
  std::vector<std::optional<std::size_t>> polygon_edge;
  // For constructed edges, the index into `windows`.
  std::vector<std::optional<std::size_t>> window_index;
  std::vector<ConstructedEdge> windows;

  std::size_t size() const { return ring.size(); }
  Segment edge(std::size_t i) const {
    return Segment{ring[i], ring[(i + 1) % ring.size()]};
  }
  bool contains(const Point& q) const {
    return locate_in_ring(ring, q) != Location::kOutside;
  }
};

enum class VisibilityEngine { kSweep, kRayShooting };

namespace detail {

struct IntervalData {
  bool inside = false;
  std::optional<std::size_t> edge;  // first edge hit, when inside
};

// Shared per-viewpoint setup: critical directions and the local cone of P
// at the viewpoint.
class VisibilitySetup {
 public:
  VisibilitySetup(const SimplePolygon& poly, const Point& p)
      : poly_(poly), p_(p) {
    Location loc = poly.locate(p);
    if (loc == Location::kOutside)
      throw PointOutsidePolygonError("viewpoint outside polygon");
    on_boundary_ = loc == Location::kBoundary;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (poly.vertex(i) == p) {
        at_vertex_ = i;
        continue;
      }
      dirs_.push_back(poly.vertex(i) - p);
    }
    std::sort(dirs_.begin(), dirs_.end(), direction_less);
    dirs_.erase(std::unique(dirs_.begin(), dirs_.end(), same_direction),
                dirs_.end());
    vertex_dir_.assign(n, npos);
    buckets_.assign(dirs_.size(), {});
    for (std::size_t i = 0; i < n; ++i) {
      if (at_vertex_ && *at_vertex_ == i) continue;
      vertex_dir_[i] = direction_index(poly.vertex(i) - p);
      buckets_[vertex_dir_[i]].push_back(i);
    }
    if (on_boundary_ && !at_vertex_) {
      for (std::size_t i = 0; i < n; ++i) {
        if (point_on_segment(p, poly.edge(i))) on_edge_ = i;
      }
    }
    tests_.reserve(dirs_.size());
    for (std::size_t j = 0; j < dirs_.size(); ++j) tests_.push_back(test_dir(j));
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const SimplePolygon& poly() const { return poly_; }
  const Point& p() const { return p_; }
  std::size_t count() const { return dirs_.size(); }
  const Point& dir(std::size_t j) const { return dirs_[j % dirs_.size()]; }
  const Point& test(std::size_t j) const { return tests_[j]; }
  std::size_t vertex_dir(std::size_t i) const { return vertex_dir_[i]; }
  const std::vector<std::size_t>& bucket(std::size_t j) const {
    return buckets_[j % buckets_.size()];
  }

  std::size_t direction_index(const Point& d) const {
    auto it = std::lower_bound(dirs_.begin(), dirs_.end(), d, direction_less);
    return static_cast<std::size_t>(it - dirs_.begin());
  }

  // Edges that can be crossed transversally by rays from p.
  bool sweepable(std::size_t e) const {
    Segment s = poly_.edge(e);
    return orient(p_, s.a, s.b) != Orientation::kCollinear;
  }

  // Angular span [start, end) of a sweepable edge, as direction indices.
  std::pair<std::size_t, std::size_t> span(std::size_t e) const {
    std::size_t a = vertex_dir_[e];
    std::size_t b = vertex_dir_[poly_.next(e)];
    Segment s = poly_.edge(e);
    if (sgn(cross(s.a - p_, s.b - p_)) > 0) return {a, b};
    return {b, a};
  }

  // Is direction r (strictly between two critical directions) pointing into
  // P near the viewpoint?
  bool locally_inside(const Point& r) const {
    if (!on_boundary_) return true;
    if (at_vertex_) {
      std::size_t k = *at_vertex_;
      Point a = poly_.vertex(poly_.next(k)) - p_;
      Point b = poly_.vertex(poly_.prev(k)) - p_;
      int ab = sgn(cross(a, b));
      if (ab > 0) return sgn(cross(a, r)) > 0 && sgn(cross(r, b)) > 0;
      if (ab < 0) return !(sgn(cross(b, r)) >= 0 && sgn(cross(r, a)) >= 0);
      return sgn(cross(a, r)) > 0;
    }
    Segment e = poly_.edge(*on_edge_);
    return sgn(cross(e.b - e.a, r)) > 0;
  }

  // Ray parameter of the hit of p + lambda r with the line of edge e.
  Rational hit_param(std::size_t e, const Point& r) const {
    Segment s = poly_.edge(e);
    Point d = s.b - s.a;
    return cross(s.a - p_, d) / cross(r, d);
  }

 private:
  // A direction strictly inside interval j (between dir j and dir j + 1).
  Point test_dir(std::size_t j) const {
    const Point& a = dirs_[j];
    if (dirs_.size() == 1) return Point{-a.x, -a.y};
    const Point& b = dirs_[(j + 1) % dirs_.size()];
    int c = sgn(cross(a, b));
    if (c > 0) return a + b;
    if (c < 0) {
      Point s = a + b;
      return Point{-s.x, -s.y};
    }
    return Point{-a.y, a.x};
  }

  const SimplePolygon& poly_;
  Point p_;
  bool on_boundary_ = false;
  std::optional<std::size_t> at_vertex_;
  std::optional<std::size_t> on_edge_;
  std::vector<Point> dirs_;
  std::vector<Point> tests_;
  std::vector<std::size_t> vertex_dir_;
  std::vector<std::vector<std::size_t>> buckets_;
};

inline std::vector<IntervalData> intervals_by_sweep(const VisibilitySetup& s) {
  const SimplePolygon& poly = s.poly();
  const std::size_t n = poly.size();
  const std::size_t k = s.count();
  std::vector<IntervalData> out(k);

  std::vector<std::vector<std::size_t>> starts(k), ends(k);
  std::vector<std::pair<std::size_t, std::size_t>> spans(n);
  std::vector<bool> sweep(n, false);
  for (std::size_t e = 0; e < n; ++e) {
    if (!s.sweepable(e)) continue;
    sweep[e] = true;
    spans[e] = s.span(e);
    starts[spans[e].first].push_back(e);
    ends[spans[e].second].push_back(e);
  }

  const Point* current = &s.test(0);
  auto closer = [&](std::size_t a, std::size_t b) {
    if (a == b) return false;
    return s.hit_param(a, *current) < s.hit_param(b, *current);
  };
  std::set<std::size_t, decltype(closer)> active(closer);

  for (std::size_t e = 0; e < n; ++e) {
    if (!sweep[e]) continue;
    auto [a, b] = spans[e];
    bool in0 = a < b ? (a == 0) : (b > 0);
    if (in0) active.insert(e);
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (j > 0) {
      for (std::size_t e : ends[j]) active.erase(e);
      current = &s.test(j);
      for (std::size_t e : starts[j]) active.insert(e);
    }
    IntervalData& d = out[j];
    d.inside = s.locally_inside(s.test(j));
    if (d.inside) {
      if (active.empty()) throw Error("visibility sweep found no edge");
      d.edge = *active.begin();
    }
  }
  return out;
}

// Brute force: shoot one ray per interval against every edge, decide
// inside/outside by locating the midpoint before the first hit.
inline std::vector<IntervalData> intervals_by_rays(const VisibilitySetup& s) {
  const SimplePolygon& poly = s.poly();
  const Point& p = s.p();
  const std::size_t n = poly.size();
  std::vector<IntervalData> out(s.count());
  for (std::size_t j = 0; j < s.count(); ++j) {
    const Point& r = s.test(j);
    std::optional<Rational> best;
    std::optional<std::size_t> best_edge;
    for (std::size_t e = 0; e < n; ++e) {
      Segment seg = poly.edge(e);
      Point d = seg.b - seg.a;
      Rational den = cross(r, d);
      if (sgn(den) == 0) continue;
      Rational lambda = cross(seg.a - p, d) / den;
      Rational mu = cross(seg.a - p, r) / den;
      if (sgn(lambda) <= 0 || mu < 0 || mu > 1) continue;
      if (!best || lambda < *best) {
        best = lambda;
        best_edge = e;
      }
    }
    if (!best) continue;
    Point m = p + (*best / 2) * r;
    if (poly.locate(m) == Location::kInside) {
      out[j].inside = true;
      out[j].edge = best_edge;
    }
  }
  return out;
}

struct Piece {
  Point a;
  Point b;
  EdgeTag tag;
  std::optional<std::size_t> polygon_edge;
  std::optional<PocketSide> pocket;  // relative to a -> b, windows only
};

// Splits the radial segment from q0 to q1 (collinear with p along direction
// index j) at polygon vertices and tags each piece.
inline void emit_radial(const VisibilitySetup& s, std::size_t j, const Point& q0,
                        const Point& q1, std::vector<Piece>& out) {
  if (q0 == q1) return;
  const SimplePolygon& poly = s.poly();
  const Point& p = s.p();
  Segment whole{q0, q1};
  std::vector<std::pair<Rational, Point>> cuts{{Rational(0), q0},
                                               {Rational(1), q1}};
  for (std::size_t vi : s.bucket(j)) {
    const Point& w = poly.vertex(vi);
    if (point_in_segment_interior(w, whole))
      cuts.emplace_back(param_on_line(q0, q1, w), w);
  }
  std::sort(cuts.begin(), cuts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // Candidate edges lying on this ray: both endpoints in direction j, or one
  // endpoint at p.
  std::vector<std::size_t> radial_edges;
  for (std::size_t vi : s.bucket(j)) {
    for (std::size_t e : {vi, poly.prev(vi)}) {
      Segment seg = poly.edge(e);
      if (orient(p, seg.a, seg.b) == Orientation::kCollinear)
        radial_edges.push_back(e);
    }
  }
  // The ring is ccw with the visible side on the left, so the pocket of a
  // window is always on the right of the traversal.
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Point& a = cuts[i].second;
    const Point& b = cuts[i + 1].second;
    if (a == b) continue;
    Piece piece{a, b, EdgeTag::kConstructed, std::nullopt, std::nullopt};
    for (std::size_t e : radial_edges) {
      Segment seg = poly.edge(e);
      if (point_on_segment(a, seg) && point_on_segment(b, seg)) {
        piece.tag = EdgeTag::kBoundary;
        piece.polygon_edge = e;
        break;
      }
    }
    if (piece.tag == EdgeTag::kConstructed) piece.pocket = PocketSide::kRightOfXY;
    out.push_back(std::move(piece));
  }
}

inline VisibilityPolygon assemble(const VisibilitySetup& s,
                                  const std::vector<IntervalData>& data) {
  const SimplePolygon& poly = s.poly();
  const Point& p = s.p();
  const std::size_t k = s.count();

  auto hit = [&](std::size_t e, std::size_t dir_index) {
    const Point& d = s.dir(dir_index);
    Segment seg = poly.edge(e);
    std::optional<Point> q = line_intersection(p, p + d, seg.a, seg.b);
    return *q;
  };

  std::vector<Piece> pieces;
  for (std::size_t j = 0; j < k; ++j) {
    const IntervalData& cur = data[j];
    const IntervalData& nxt = data[(j + 1) % k];
    std::size_t boundary_dir = (j + 1) % k;
    std::optional<Point> b_end;
    if (cur.inside) {
      Point a = hit(*cur.edge, j);
      Point b = hit(*cur.edge, boundary_dir);
      if (a != b)
        pieces.push_back({a, b, EdgeTag::kBoundary, cur.edge, std::nullopt});
      b_end = b;
    }
    if (cur.inside && nxt.inside) {
      Point a_next = hit(*nxt.edge, boundary_dir);
      emit_radial(s, boundary_dir, *b_end, a_next, pieces);
    } else if (cur.inside) {
      emit_radial(s, boundary_dir, *b_end, p, pieces);
    } else if (nxt.inside) {
      Point a_next = hit(*nxt.edge, boundary_dir);
      emit_radial(s, boundary_dir, p, a_next, pieces);
    }
  }

  // Merge collinear continuations along the same polygon edge.
  std::vector<Piece> merged;
  for (Piece& pc : pieces) {
    if (!merged.empty()) {
      Piece& last = merged.back();
      if (last.tag == EdgeTag::kBoundary && pc.tag == EdgeTag::kBoundary &&
          last.b == pc.a &&
          orient(last.a, last.b, pc.b) == Orientation::kCollinear &&
          sgn(dot(last.b - last.a, pc.b - pc.a)) > 0) {
        last.b = pc.b;
        continue;
      }
    }
    merged.push_back(std::move(pc));
  }
  if (merged.size() > 1) {
    Piece& first = merged.front();
    Piece& last = merged.back();
    if (last.tag == EdgeTag::kBoundary && first.tag == EdgeTag::kBoundary &&
        last.b == first.a &&
        orient(last.a, last.b, first.b) == Orientation::kCollinear &&
        sgn(dot(last.b - last.a, first.b - first.a)) > 0) {
      first.a = last.a;
      merged.pop_back();
    }
  }

  // Start at the lexicographically smallest vertex for a canonical ring.
  std::size_t start = 0;
  for (std::size_t i = 1; i < merged.size(); ++i)
    if (merged[i].a < merged[start].a) start = i;

  VisibilityPolygon vis;
  vis.viewpoint = p;
  for (std::size_t c = 0; c < merged.size(); ++c) {
    const Piece& pc = merged[(start + c) % merged.size()];
    vis.ring.push_back(pc.a);
    vis.tags.push_back(pc.tag);
    vis.polygon_edge.push_back(pc.polygon_edge);
    if (pc.tag == EdgeTag::kConstructed) {
      vis.window_index.push_back(vis.windows.size());
      vis.windows.push_back(make_window(pc.a, pc.b, p, *pc.pocket));
    } else {
      vis.window_index.push_back(std::nullopt);
    }
  }
  return vis;
}

}  // namespace detail

// Visibility polygon of p in a simple polygon. Throws
// PointOutsidePolygonError. Windows carry guard id 0 and x_on_uv = false.
inline VisibilityPolygon visibility_polygon(
    const SimplePolygon& poly, const Point& p,
    VisibilityEngine engine = VisibilityEngine::kSweep) {
  detail::VisibilitySetup setup(poly, p);
  std::vector<detail::IntervalData> data =
      engine == VisibilityEngine::kSweep ? detail::intervals_by_sweep(setup)
                                         : detail::intervals_by_rays(setup);
  return detail::assemble(setup, data);
}

// Same, with windows flagged against the polygon's uv.
inline VisibilityPolygon visibility_polygon(
    const WVPolygon& wv, const Point& p,
    VisibilityEngine engine = VisibilityEngine::kSweep) {
  VisibilityPolygon vis = visibility_polygon(wv.polygon(), p, engine);
  for (ConstructedEdge& w : vis.windows) w.x_on_uv = wv.on_uv(w.x);
  return vis;
}

// The windows of a visibility polygon, each tagged with `guard`.
inline std::vector<ConstructedEdge> constructed_edges(
    const VisibilityPolygon& vis, std::size_t guard = 0) {
  std::vector<ConstructedEdge> out = vis.windows;
  for (ConstructedEdge& w : out) w.guard = guard;
  return out;
}

// Closed parameter intervals of polygon edges visible from the viewpoint,
// taken from the ring's boundary pieces. Entry e lists intervals on edge e.
inline std::vector<std::vector<std::pair<Rational, Rational>>>
visible_boundary_intervals(const SimplePolygon& poly,
                           const VisibilityPolygon& vis) {
  std::vector<std::vector<std::pair<Rational, Rational>>> out(poly.size());
  for (std::size_t i = 0; i < vis.size(); ++i) {
    if (vis.tags[i] != EdgeTag::kBoundary) continue;
    const Segment ve = vis.edge(i);
    // A boundary piece may run across collinear neighbouring edges.
    auto add = [&](std::size_t e) {
      Segment pe = poly.edge(e);
      if (orient(ve.a, ve.b, pe.a) != Orientation::kCollinear ||
          orient(ve.a, ve.b, pe.b) != Orientation::kCollinear)
        return false;
      Rational t0 = param_on_line(pe.a, pe.b, ve.a);
      Rational t1 = param_on_line(pe.a, pe.b, ve.b);
      if (t1 < t0) std::swap(t0, t1);
      if (t0 < 0) t0 = 0;
      if (t1 > 1) t1 = 1;
      if (t1 < t0) return false;
      out[e].emplace_back(t0, t1);
      return true;
    };
    const std::size_t n = poly.size(), e0 = *vis.polygon_edge[i];
    add(e0);
    for (std::size_t k = 1; k < n && add((e0 + k) % n); ++k) {
    }
    for (std::size_t k = 1; k < n && add((e0 + n - k) % n); ++k) {
    }
  }
  // A viewpoint on the boundary also sees itself.
  if (auto pos = poly.boundary_position(vis.viewpoint))
    out[pos->edge].emplace_back(pos->t, pos->t);
  for (auto& list : out) {
    std::sort(list.begin(), list.end());
    std::vector<std::pair<Rational, Rational>> merged;
    for (auto& iv : list) {
      if (!merged.empty() && iv.first <= merged.back().second) {
        if (iv.second > merged.back().second) merged.back().second = iv.second;
      } else {
        merged.push_back(iv);
      }
    }
    list = std::move(merged);
  }
  return out;
}

// The region cut off by a window: the window plus the boundary arc on its
// pocket side.
struct Pocket {
  ConstructedEdge window;
  SimplePolygon region;
  // Boundary arc from one window endpoint to the other (both included).
  std::vector<Point> boundary_arc;
};

inline Pocket pocket_of(const SimplePolygon& poly,
                        const ConstructedEdge& window) {
  auto px = poly.boundary_position(window.x);
  auto py = poly.boundary_position(window.y);
  if (!px || !py) throw Error("window endpoint not on the boundary");
  std::vector<Point> arc = window.pocket_side == PocketSide::kRightOfXY
                               ? boundary_arc(poly, *px, *py)
                               : boundary_arc(poly, *py, *px);
  return Pocket{window, SimplePolygon(arc), arc};
}

inline Pocket pocket_of(const WVPolygon& wv, const ConstructedEdge& window) {
  return pocket_of(wv.polygon(), window);
}

}  // namespace wvguard
