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

// Ground truth for guard sets: exact holes, coverage reports, brute-force
// optima and a sampling cross-check.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wvguard/arrangement.hpp"
#include "wvguard/completion.hpp"
#include "wvguard/errors.hpp"
#include "wvguard/geometry.hpp"
#include "wvguard/guards.hpp"
#include "wvguard/polygon.hpp"
#include "wvguard/set_cover.hpp"
#include "wvguard/visibility.hpp"
#include "wvguard/wv_polygon.hpp"

namespace wvguard {

// A maximal open region of P seen by no guard and not touching the
// boundary along an edge.
struct Hole {
  SimplePolygon region;
  // leaned_windows[i] is a window containing edge i of the region (missing
  // when the edge lies on a segment that is not a window, e.g. a chord).
  std::vector<std::optional<ConstructedEdge>> leaned_windows;
  Point interior_point;

  bool is_convex() const { return is_convex_ring(region.ring()); }
  bool leans_on(WindowKind kind) const {
    return std::any_of(leaned_windows.begin(), leaned_windows.end(),
                       [&](const auto& w) { return w && w->kind == kind; });
  }
};

// Unseen faces of the overlay of P's edges and all windows.
struct UnseenRegions {
  std::vector<Hole> holes;
  // Unseen faces that share an edge with the boundary.
  std::vector<std::vector<Point>> boundary_faces;
  std::size_t face_count = 0;
};

namespace detail {

// A point strictly inside a ccw simple ring.
inline Point interior_point(const std::vector<Point>& ring) {
  std::vector<std::array<Point, 3>> tris = triangulate(ring);
  if (tris.empty()) throw Error("degenerate face");
  const auto& t = tris.front();
  return centroid_of(t);
}

inline bool edge_on_boundary(const SimplePolygon& poly, const Point& a,
                             const Point& b) {
  for (std::size_t e = 0; e < poly.size(); ++e) {
    Segment s = poly.edge(e);
    if (point_on_segment(a, s) && point_on_segment(b, s)) return true;
  }
  return false;
}

}  // namespace detail

// Faces of the overlay not covered by any view. `windows` is used to name
// the windows a hole leans on; `extra` segments (e.g. a chord) are added to
// the overlay.
inline UnseenRegions unseen_regions(const SimplePolygon& poly,
                                    const std::vector<GuardView>& views,
                                    const std::vector<ConstructedEdge>& windows,
                                    const std::vector<Segment>& extra = {}) {
  std::vector<Segment> segs;
  for (std::size_t e = 0; e < poly.size(); ++e) segs.push_back(poly.edge(e));
  for (const GuardView& v : views)
    for (std::size_t i = 0; i < v.vis.size(); ++i)
      if (v.vis.tags[i] == EdgeTag::kConstructed) segs.push_back(v.vis.edge(i));
  for (const Segment& s : extra) segs.push_back(s);
  Arrangement arr = build_arrangement(segs);
  UnseenRegions out;
  out.face_count = arr.faces.size();
  for (std::vector<Point>& face : arr.faces) {
    std::vector<Point> ring = simplify_ring(face);
    if (ring.size() < 3) continue;
    Point q = detail::interior_point(ring);
    if (poly.locate(q) != Location::kInside) continue;
    bool seen = std::any_of(views.begin(), views.end(), [&](const GuardView& v) {
      return v.vis.contains(q);
    });
    if (seen) continue;
    bool touches = false;
    for (std::size_t i = 0; i < ring.size() && !touches; ++i)
      touches = detail::edge_on_boundary(poly, ring[i],
                                         ring[(i + 1) % ring.size()]);
    if (touches) {
      out.boundary_faces.push_back(std::move(ring));
      continue;
    }
    Hole h{SimplePolygon(ring), {}, q};
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Point& a = ring[i];
      const Point& b = ring[(i + 1) % ring.size()];
      std::optional<ConstructedEdge> lean;
      for (const ConstructedEdge& w : windows) {
        if (point_on_segment(a, w.x, w.y) && point_on_segment(b, w.x, w.y)) {
          lean = w;
          break;
        }
      }
      h.leaned_windows.push_back(std::move(lean));
    }
    out.holes.push_back(std::move(h));
  }
  return out;
}

// Holes of P with respect to the guard positions.
inline std::vector<Hole> extract_holes(const WVPolygon& wv,
                                       const GuardSet& guards) {
  std::vector<GuardView> views = make_views(wv.polygon(), guards.positions());
  return unseen_regions(wv.polygon(), views, windows_of(wv, views).all).holes;
}

struct CoverageReport {
  bool fully_guarded = false;
  std::vector<Hole> holes;
  std::vector<BoundaryWitness> uncovered_boundary;
  std::size_t face_count = 0;
  std::size_t boundary_faces = 0;
  // Twice the total hole area.
  Rational hole_area2;
};

inline CoverageReport verify_coverage(const WVPolygon& wv,
                                      const GuardSet& guards) {
  CoverageReport r;
  std::vector<GuardView> views = make_views(wv.polygon(), guards.positions());
  for (BoundaryWitness& w : boundary_witnesses(wv.polygon(), views))
    if (w.seen_by.empty()) r.uncovered_boundary.push_back(std::move(w));
  UnseenRegions u =
      unseen_regions(wv.polygon(), views, windows_of(wv, views).all);
  r.holes = std::move(u.holes);
  r.face_count = u.face_count;
  r.boundary_faces = u.boundary_faces.size();
  for (const Hole& h : r.holes) r.hole_area2 += h.region.area2();
  r.fully_guarded = r.holes.empty() && r.uncovered_boundary.empty();
  return r;
}

// Limits for the brute-force searches.
struct Budget {
  std::uint64_t cover_nodes = 20'000'000;
  std::size_t rounds = 500;
};

// Reads WVGUARD_BUDGET (a node count) when set.
inline Budget budget_from_env() {
  Budget b;
  if (const char* s = std::getenv("WVGUARD_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && v > 0) b.cover_nodes = v;
  }
  return b;
}

enum class OptMode { kFull, kBoundary };

// Minimum vertex guard set for all of P (kFull) or for its boundary
// (kBoundary). kFull adds the centroid of the largest unseen face as a new
// witness until the cover verifies. Throws BudgetExceededError.
inline GuardSet brute_force_opt(const WVPolygon& wv, OptMode mode,
                                const Budget& budget = budget_from_env()) {
  const SimplePolygon& poly = wv.polygon();
  std::vector<Guard> cands;
  std::vector<Point> pts;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    cands.push_back(vertex_guard(poly, i, Provenance::kComputedExact));
    pts.push_back(poly.vertex(i));
  }
  std::vector<GuardView> views = make_views(poly, pts);
  std::vector<BoundaryWitness> ws = boundary_witnesses(poly, views);
  CoverInstance inst = cover_instance(ws, cands.size());
  auto solve = [&]() {
    try {
      return exact_set_cover(inst, poly.size(), budget.cover_nodes);
    } catch (const LimitExceededError&) {
      throw Error("vertex set does not cover its own witnesses");
    }
  };
  std::vector<std::size_t> chosen = solve();
  if (mode == OptMode::kFull) {
    for (std::size_t round = 0;; ++round) {
      if (round >= budget.rounds)
        throw BudgetExceededError("cutting-plane rounds exhausted");
      std::vector<GuardView> sel;
      for (std::size_t c : chosen) sel.push_back(views[c]);
      std::vector<ConstructedEdge> windows;
      for (std::size_t g = 0; g < sel.size(); ++g)
        for (const ConstructedEdge& w : constructed_edges(sel[g].vis, g))
          windows.push_back(w);
      UnseenRegions u = unseen_regions(poly, sel, windows);
      if (u.holes.empty() && u.boundary_faces.empty()) break;
      // Largest unseen face becomes a point witness.
      std::optional<Point> pick;
      Rational best;
      for (const Hole& h : u.holes) {
        Rational a = h.region.area2();
        if (!pick || a > best) {
          best = a;
          pick = h.is_convex() ? centroid_of(h.region.ring()) : h.interior_point;
        }
      }
      for (const auto& f : u.boundary_faces) {
        Rational a = signed_area2(f);
        if (!pick || a > best) {
          best = a;
          pick = detail::interior_point(f);
        }
      }
      std::size_t elem = inst.universe++;
      for (std::size_t c = 0; c < views.size(); ++c)
        if (views[c].vis.contains(*pick)) inst.sets[c].push_back(elem);
      chosen = solve();
    }
  }
  GuardSet out;
  for (std::size_t c : chosen) out.add(cands[c]);
  return out;
}

// Random points inside P, area-weighted over a triangulation. Coordinates
// are rationals with denominator 2^20 inside each triangle's frame.
inline std::vector<Point> sample_interior(const SimplePolygon& poly,
                                          std::size_t count,
                                          std::uint64_t seed) {
  std::vector<std::array<Point, 3>> tris = triangulate(poly.ring());
  std::vector<Rational> cum;
  Rational total(0);
  for (const auto& t : tris) {
    total += abs(signed_area2(t));
    cum.push_back(total);
  }
  std::mt19937_64 rng(seed);
  const long kDen = 1L << 20;
  std::uniform_int_distribution<long> unit(1, kDen - 1);
  std::uniform_int_distribution<std::uint64_t> pick_dist(0, (1ULL << 40) - 1);
  std::vector<Point> out;
  out.reserve(count);
  while (out.size() < count) {
    Rational r = total * ratio(static_cast<long>(pick_dist(rng)), 1L << 40);
    std::size_t k = static_cast<std::size_t>(
        std::upper_bound(cum.begin(), cum.end(), r) - cum.begin());
    if (k >= tris.size()) k = tris.size() - 1;
    long s = unit(rng), t = unit(rng);
    if (s + t == kDen) continue;
    if (s + t > kDen) {
      s = kDen - s;
      t = kDen - t;
    }
    const auto& tri = tris[k];
    Rational rs = ratio(s, kDen), rt = ratio(t, kDen);
    out.push_back(tri[0] + rs * (tri[1] - tri[0]) + rt * (tri[2] - tri[0]));
  }
  return out;
}

struct SampleReport {
  std::size_t samples = 0;
  std::vector<Point> unseen;
};

// Visibility of each sample from the guards by direct segment tests. The
// views only choose which guard to try first.
inline SampleReport dense_sample_check(const SimplePolygon& poly,
                                       const std::vector<GuardView>& views,
                                       std::size_t count, std::uint64_t seed) {
  SampleReport r;
  std::vector<Point> pts = sample_interior(poly, count, seed);
  r.samples = pts.size();
  for (const Point& q : pts) {
    bool seen = false;
    std::optional<std::size_t> hint;
    for (std::size_t g = 0; g < views.size() && !hint; ++g)
      if (views[g].vis.contains(q)) hint = g;
    if (hint) seen = sees(poly, views[*hint].position, q);
    for (std::size_t g = 0; g < views.size() && !seen; ++g)
      if (!hint || g != *hint) seen = sees(poly, views[g].position, q);
    if (!seen) r.unseen.push_back(q);
  }
  return r;
}

}  // namespace wvguard
