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

// Interior completion: given guards that see the whole boundary, add at most
// one vertex per upper window anchored on uv so that every hole is covered.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "wvguard/errors.hpp"
#include "wvguard/geometry.hpp"
#include "wvguard/guards.hpp"
#include "wvguard/polygon.hpp"
#include "wvguard/visibility.hpp"
#include "wvguard/wv_polygon.hpp"

namespace wvguard {

// All windows of the guards' visibility polygons; `on_uv` indexes the ones
// whose lower endpoint lies on uv.
struct WindowSet {
  std::vector<ConstructedEdge> all;
  std::vector<std::size_t> on_uv;

  std::vector<ConstructedEdge> anchored() const {
    std::vector<ConstructedEdge> out;
    for (std::size_t i : on_uv) out.push_back(all[i]);
    return out;
  }
};

// Throws InputNotBoundaryGuardingError naming an unseen boundary point.
inline void require_boundary_guarded(const SimplePolygon& poly,
                                     const std::vector<GuardView>& views) {
  for (const BoundaryWitness& w : boundary_witnesses(poly, views)) {
    if (w.seen_by.empty()) {
      std::ostringstream msg;
      msg << "boundary point " << w.point(poly) << " on edge " << w.edge_index
          << " is not seen by any guard";
      throw InputNotBoundaryGuardingError(msg.str());
    }
  }
}

inline WindowSet windows_of(const WVPolygon& wv,
                            const std::vector<GuardView>& views) {
  WindowSet out;
  for (std::size_t g = 0; g < views.size(); ++g) {
    for (ConstructedEdge w : constructed_edges(views[g].vis, g)) {
      w.x_on_uv = wv.on_uv(w.x);
      if (w.x_on_uv) out.on_uv.push_back(out.all.size());
      out.all.push_back(std::move(w));
    }
  }
  return out;
}

// E and E' for the guard set. Throws InputNotBoundaryGuardingError.
inline WindowSet collect_windows(const WVPolygon& wv, const GuardSet& guards) {
  std::vector<GuardView> views = make_views(wv.polygon(), guards.positions());
  require_boundary_guarded(wv.polygon(), views);
  return windows_of(wv, views);
}

struct ApexHit {
  Point apex;
  std::size_t partner = 0;  // index into the searched list
};

// Highest crossing of e with a window whose lower endpoint is on uv and lies
// strictly on e's pocket side. Ties go to the partner whose x' is closest to
// x; a collinear overlap contributes its topmost point.
inline std::optional<ApexHit> topmost_qualifying_intersection(
    const ConstructedEdge& e, const std::vector<ConstructedEdge>& windows) {
  std::optional<ApexHit> best;
  Rational best_gap;
  for (std::size_t i = 0; i < windows.size(); ++i) {
    const ConstructedEdge& f = windows[i];
    if (!f.x_on_uv || !e.on_pocket_side(f.x)) continue;
    SegmentIntersection hit = segment_intersection(e.segment(), f.segment());
    Point p;
    if (const Point* q = std::get_if<Point>(&hit)) {
      p = *q;
    } else if (const Segment* s = std::get_if<Segment>(&hit)) {
      p = s->b.y > s->a.y ? s->b : s->a;
    } else {
      continue;
    }
    Rational gap = abs(f.x.x - e.x.x);
    if (!best || p.y > best->apex.y || (p.y == best->apex.y && gap < best_gap)) {
      best = ApexHit{p, i};
      best_gap = gap;
    }
  }
  return best;
}

// Scan for a vertex guarding triangle (x, apex, x_prime), with x and x_prime
// on uv and the apex above. Every vertex strictly below the apex is
// projected from the apex onto the line of uv; among projections between u
// and x (between x and v when x is right of x_prime) the one closest to x
// wins, nearer vertices first on the same ray. The winner is checked
// exactly; NoGuardFoundError if it does not see the triangle.
inline std::size_t triangle_guard_vertex(const WVPolygon& wv, const Point& x,
                                         const Point& apex,
                                         const Point& x_prime) {
  const bool mirrored = x.x > x_prime.x;
  const Rational lo = mirrored ? x.x : wv.u().x;
  const Rational hi = mirrored ? wv.v().x : x.x;
  struct Candidate {
    Rational gap;    // distance of the projection from x
    Rational dist2;  // squared distance from the apex
    std::size_t vertex;
  };
  std::vector<Candidate> cands;
  for (std::size_t i = 0; i < wv.size(); ++i) {
    const Point& w = wv.vertex(i);
    if (!(w.y < apex.y)) continue;
    Rational lambda = apex.y / (apex.y - w.y);
    Rational cx = apex.x + lambda * (w.x - apex.x);
    if (cx < lo || cx > hi) continue;
    cands.push_back({abs(cx - x.x), squared_distance(w, apex), i});
  }
  if (cands.empty()) throw NoGuardFoundError("no vertex projects onto uv");
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.gap != b.gap) return a.gap < b.gap;
              if (a.dist2 != b.dist2) return a.dist2 < b.dist2;
              return a.vertex < b.vertex;
            });
  std::array<Point, 3> tri{x, apex, x_prime};
  for (const Candidate& c : cands) {
    if (c.gap != cands.front().gap) break;
    if (sees_convex(wv.polygon(), wv.vertex(c.vertex), tri)) return c.vertex;
  }
  std::ostringstream msg;
  msg << "vertex " << wv.vertex(cands.front().vertex)
      << " chosen for triangle " << x << ", " << apex << ", " << x_prime
      << " does not see it";
  throw NoGuardFoundError(msg.str());
}

namespace detail {

// Earliest parameter t in [t0, 1] at which a + t (b - a) enters the cone
// w + cone(w - S); nullopt if it never does.
inline std::optional<Rational> cone_entry(const Point& w,
                                          const std::vector<Point>& s,
                                          const Point& a, const Point& b,
                                          const Rational& t0) {
  std::vector<Point> dirs;
  for (const Point& q : s) dirs.push_back(w - q);
  // Extreme generators: every other direction is left of lo and right of hi.
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 1; i < dirs.size(); ++i) {
    if (sgn(cross(dirs[lo], dirs[i])) < 0) lo = i;
    if (sgn(cross(dirs[hi], dirs[i])) > 0) hi = i;
  }
  // Constraints f(t) = c0 + t c1 >= 0. The third keeps the right half of
  // the line when all generators are parallel.
  Point d = b - a;
  Point mid = dirs[lo] + dirs[hi];
  std::array<std::pair<Rational, Rational>, 3> cons{
      std::pair{cross(dirs[lo], a - w), cross(dirs[lo], d)},
      std::pair{cross(a - w, dirs[hi]), cross(d, dirs[hi])},
      std::pair{dot(a - w, mid), dot(d, mid)}};
  Rational lo_t = t0, hi_t(1);
  for (const auto& [c0, c1] : cons) {
    if (sgn(c1) == 0) {
      if (sgn(c0) < 0) return std::nullopt;
      continue;
    }
    Rational r = -c0 / c1;
    if (sgn(c1) > 0) {
      if (r > lo_t) lo_t = r;
    } else if (r < hi_t) {
      hi_t = r;
    }
  }
  if (lo_t > hi_t) return std::nullopt;
  return lo_t;
}

}  // namespace detail

// A vertex that sees all of the convex region S (ccw vertex list, S in P).
// Shared vertex if any; otherwise the boundary point y closest to S, then a
// slide along y's edge until the hull of S and y first meets a vertex.
inline std::size_t convex_region_guard(const SimplePolygon& poly,
                                       const std::vector<Point>& s) {
  if (s.empty()) throw Error("empty region");
  for (const Point& q : s)
    if (auto i = poly.vertex_index(q)) return *i;
  std::optional<Rational> best;
  std::size_t best_edge = 0;
  Point y;
  std::optional<std::size_t> best_vertex;
  auto offer = [&](const Rational& d2, std::size_t edge, const Point& at,
                   std::optional<std::size_t> vertex) {
    if (!best || d2 < *best) {
      best = d2;
      best_edge = edge;
      y = at;
      best_vertex = vertex;
    }
  };
  const std::size_t m = s.size();
  for (std::size_t e = 0; e < poly.size(); ++e) {
    Segment pe = poly.edge(e);
    for (const Point& q : s) {
      Point c = closest_point_on_segment(q, pe);
      std::optional<std::size_t> vi;
      if (c == pe.a) vi = e;
      if (c == pe.b) vi = poly.next(e);
      offer(squared_distance(c, q), e, c, vi);
    }
    for (std::size_t j = 0; j < m; ++j) {
      Segment se{s[j], s[(j + 1) % m]};
      if (se.a == se.b) continue;
      Point c = closest_point_on_segment(pe.a, se);
      offer(squared_distance(c, pe.a), e, pe.a, e);
    }
  }
  if (best_vertex && sees_convex(poly, poly.vertex(*best_vertex), s))
    return *best_vertex;
  Segment edge = poly.edge(best_edge);
  for (int dir = 0; dir < 2; ++dir) {
    const Point& a = dir == 0 ? edge.a : edge.b;
    const Point& b = dir == 0 ? edge.b : edge.a;
    Rational t0 = param_on_line(a, b, y);
    std::optional<Rational> first;
    std::size_t chosen = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      auto t = detail::cone_entry(poly.vertex(i), s, a, b, t0);
      if (t && (!first || *t < *first)) {
        first = t;
        chosen = i;
      }
    }
    if (first && sees_convex(poly, poly.vertex(chosen), s)) return chosen;
  }
  throw NoGuardFoundError("no vertex found for convex region");
}

inline std::size_t convex_region_guard(const WVPolygon& wv,
                                       const std::vector<Point>& s) {
  return convex_region_guard(wv.polygon(), s);
}

// One triangle handled by the algorithm.
struct TriangleTask {
  ConstructedEdge upper_edge;
  ConstructedEdge partner_edge;
  Point apex;
  std::array<Point, 3> triangle;
  // The chosen vertex in the polygon the task was solved in.
  std::size_t guard_vertex = 0;
  Point guard_position;
  // 0 in edge mode and for the side above a chord, 1 below.
  int side = 0;
};

struct CompletionResult {
  GuardSet added;
  std::vector<TriangleTask> tasks;
  WindowSet windows;
  std::size_t upper_on_uv = 0;
};

namespace detail {

// Runs the triangle search on one edge-mode polygon with a given window set.
// Tasks get the side tag and positions stay in the polygon's frame.
inline std::vector<TriangleTask> run_triangles(const WVPolygon& wv,
                                               const WindowSet& ws, int side,
                                               std::size_t* upper_count) {
  std::vector<ConstructedEdge> anchored = ws.anchored();
  std::vector<TriangleTask> tasks;
  for (const ConstructedEdge& e : anchored) {
    if (e.kind != WindowKind::kUpper) continue;
    if (upper_count) ++*upper_count;
    std::optional<ApexHit> hit = topmost_qualifying_intersection(e, anchored);
    if (!hit) continue;
    const ConstructedEdge& partner = anchored[hit->partner];
    TriangleTask t;
    t.upper_edge = e;
    t.partner_edge = partner;
    t.apex = hit->apex;
    t.triangle = {e.x, hit->apex, partner.x};
    t.side = side;
    std::vector<Point> tri = convex_hull({e.x, hit->apex, partner.x});
    if (tri.size() < 3 || !ring_contains_convex(wv.polygon().ring(), tri)) {
      std::ostringstream msg;
      msg << "triangle " << e.x << ", " << hit->apex << ", " << partner.x
          << " is not contained in the polygon";
      throw Error(msg.str());
    }
    t.guard_vertex = triangle_guard_vertex(wv, e.x, hit->apex, partner.x);
    t.guard_position = wv.vertex(t.guard_vertex);
    tasks.push_back(std::move(t));
  }
  // Deterministic order: by the upper edge's anchor along uv.
  std::stable_sort(tasks.begin(), tasks.end(),
                   [](const TriangleTask& a, const TriangleTask& b) {
                     return a.upper_edge.x < b.upper_edge.x;
                   });
  return tasks;
}

}  // namespace detail

// Edge mode. `guards` must see the whole boundary of `wv` (after any
// preprocessing). Added guards exclude positions already in `guards`.
inline CompletionResult complete_guards(const WVPolygon& wv,
                                        const GuardSet& guards) {
  if (wv.mode() != WVMode::kEdge) throw Error("complete_guards needs edge mode");
  CompletionResult out;
  out.windows = collect_windows(wv, guards);
  out.tasks = detail::run_triangles(wv, out.windows, 0, &out.upper_on_uv);
  for (const TriangleTask& t : out.tasks) {
    if (guards.contains(t.guard_position)) continue;
    out.added.add(Guard{t.guard_position, t.guard_vertex,
                        Provenance::kCompletion});
  }
  return out;
}

namespace detail {

// Pieces of segment ab on either side of the chord uv, in the a -> b
// direction: a crossing in the chord's relative interior splits ab, and each
// piece goes to the half that contains its midpoint. Pieces lying on the
// chord are dropped.
struct HalfPiece {
  Point a;
  Point b;
  int side = 0;
};

inline std::vector<HalfPiece> split_on_chord(const Point& a, const Point& b,
                                             const WVPolygon& top,
                                             const Segment& chord) {
  std::vector<HalfPiece> out;
  std::vector<Point> cuts{a};
  SegmentIntersection hit = segment_intersection(Segment{a, b}, chord);
  if (std::holds_alternative<Segment>(hit)) return out;
  if (const Point* q = std::get_if<Point>(&hit))
    if (*q != a && *q != b) cuts.push_back(*q);
  cuts.push_back(b);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Point m = midpoint(cuts[i], cuts[i + 1]);
    int side = top.polygon().locate(m) == Location::kOutside ? 1 : 0;
    out.push_back({cuts[i], cuts[i + 1], side});
  }
  return out;
}

}  // namespace detail

// A window crossing the chord, with its kind on each side.
struct RoleSwitch {
  ConstructedEdge window;
  WindowKind above;
  WindowKind below;
};

struct ChordCompletionResult : CompletionResult {
  // Per side, the guards added (frame of the chord polygon).
  GuardSet added_above;
  GuardSet added_below;
  std::vector<RoleSwitch> switches;
  // Side windows, in each side's own frame.
  WindowSet windows_above;
  WindowSet windows_below;
};

// Chord mode: split at the chord, clip every window to each side, re-derive
// its kind there and run the triangle search per side.
inline ChordCompletionResult complete_guards_chord(const WVPolygon& wv,
                                                   const GuardSet& guards) {
  if (wv.mode() != WVMode::kChord) throw NotAChordError("not in chord mode");
  ChordCompletionResult out;
  std::vector<GuardView> views = make_views(wv.polygon(), guards.positions());
  require_boundary_guarded(wv.polygon(), views);
  out.windows = windows_of(wv, views);
  auto [top, bottom] = split_at_chord(wv);
  const FrameMap flip = frame_for(wv.v(), wv.u());

  for (const ConstructedEdge& w : out.windows.all) {
    std::optional<WindowKind> kinds[2];
    for (const detail::HalfPiece& part :
         detail::split_on_chord(w.x, w.y, top, wv.uv())) {
      const int side = part.side;
      const WVPolygon& half = side == 0 ? top : bottom;
      WindowSet& dst = side == 0 ? out.windows_above : out.windows_below;
      auto map = [&](const Point& p) { return side == 0 ? p : flip.apply(p); };
      ConstructedEdge c = make_window(map(part.a), map(part.b),
                                      map(w.viewpoint), w.pocket_side);
      c.guard = w.guard;
      c.x_on_uv = half.on_uv(c.x);
      kinds[side] = c.kind;
      if (c.x_on_uv) dst.on_uv.push_back(dst.all.size());
      dst.all.push_back(std::move(c));
    }
    if (kinds[0] && kinds[1]) out.switches.push_back({w, *kinds[0], *kinds[1]});
  }

  std::vector<TriangleTask> above =
      detail::run_triangles(top, out.windows_above, 0, &out.upper_on_uv);
  std::vector<TriangleTask> below =
      detail::run_triangles(bottom, out.windows_below, 1, &out.upper_on_uv);
  auto record = [&](TriangleTask t, GuardSet& side_set) {
    if (t.side == 1) t.guard_position = flip.invert(t.guard_position);
    auto vi = wv.polygon().vertex_index(t.guard_position);
    if (!vi) throw Error("side vertex is not a vertex of the chord polygon");
    t.guard_vertex = *vi;
    Guard g{t.guard_position, *vi, Provenance::kCompletion};
    side_set.add(g);
    if (!guards.contains(g.position)) out.added.add(g);
    out.tasks.push_back(std::move(t));
  };
  for (TriangleTask& t : above) record(std::move(t), out.added_above);
  for (TriangleTask& t : below) record(std::move(t), out.added_below);
  return out;
}

}  // namespace wvguard
