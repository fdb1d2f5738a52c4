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

// Guards, guard sets and boundary guarding by witness set cover.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wvguard/errors.hpp"
#include "wvguard/geometry.hpp"
#include "wvguard/polygon.hpp"
#include "wvguard/set_cover.hpp"
#include "wvguard/visibility.hpp"
#include "wvguard/wv_polygon.hpp"

namespace wvguard {

enum class Provenance {
  kComputedGreedy,
  kComputedExact,
  kUserSupplied,
  kForcedPreprocess,
  kCompletion,
};

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::kComputedGreedy:
      return "greedy";
    case Provenance::kComputedExact:
      return "exact";
    case Provenance::kUserSupplied:
      return "user";
    case Provenance::kForcedPreprocess:
      return "forced";
    case Provenance::kCompletion:
      return "completion";
  }
  return "?";
}

struct Guard {
  Point position;
  // Set when the guard sits on a polygon vertex.
  std::optional<std::size_t> vertex;
  Provenance provenance = Provenance::kUserSupplied;
};

// Ordered guard list without duplicate positions.
class GuardSet {
 public:
  GuardSet() = default;
  explicit GuardSet(std::vector<Guard> guards) {
    for (Guard& g : guards) add(std::move(g));
  }

  // Returns false (and keeps the existing entry) for a duplicate position.
  bool add(Guard g) {
    if (contains(g.position)) return false;
    guards_.push_back(std::move(g));
    return true;
  }
  void merge(const GuardSet& other) {
    for (const Guard& g : other.guards_) add(g);
  }
  bool contains(const Point& p) const {
    return std::any_of(guards_.begin(), guards_.end(),
                       [&](const Guard& g) { return g.position == p; });
  }

  std::size_t size() const { return guards_.size(); }
  bool empty() const { return guards_.empty(); }
  const Guard& operator[](std::size_t i) const { return guards_[i]; }
  const std::vector<Guard>& guards() const { return guards_; }
  auto begin() const { return guards_.begin(); }
  auto end() const { return guards_.end(); }

  std::vector<Point> positions() const {
    std::vector<Point> out;
    out.reserve(guards_.size());
    for (const Guard& g : guards_) out.push_back(g.position);
    return out;
  }
  std::size_t count(Provenance p) const {
    return static_cast<std::size_t>(
        std::count_if(guards_.begin(), guards_.end(),
                      [&](const Guard& g) { return g.provenance == p; }));
  }

 private:
  std::vector<Guard> guards_;
};

inline Guard vertex_guard(const SimplePolygon& poly, std::size_t i,
                          Provenance p) {
  return Guard{poly.vertex(i), i, p};
}

// Guard positions must lie on the boundary; in edge mode the open interior
// of uv is excluded unless `allow_uv_interior`.
inline void validate_guard_positions(const WVPolygon& wv, const GuardSet& g,
                                     bool allow_uv_interior = false) {
  for (const Guard& guard : g) {
    if (!wv.polygon().on_boundary(guard.position))
      throw Error("guard is not on the polygon boundary");
    if (wv.mode() == WVMode::kEdge && !allow_uv_interior &&
        point_in_segment_interior(guard.position, wv.uv()))
      throw Error("guard lies in the open interior of uv");
  }
}

// A guard's visibility polygon and the parts of each polygon edge it sees.
struct GuardView {
  Point position;
  VisibilityPolygon vis;
  std::vector<std::vector<std::pair<Rational, Rational>>> intervals;

  bool sees_interval(std::size_t edge, const Rational& t0,
                     const Rational& t1) const {
    for (const auto& iv : intervals[edge])
      if (iv.first <= t0 && t1 <= iv.second) return true;
    return false;
  }
};

inline GuardView make_view(const SimplePolygon& poly, const Point& p) {
  GuardView v{p, visibility_polygon(poly, p), {}};
  v.intervals = visible_boundary_intervals(poly, v.vis);
  return v;
}

inline std::vector<GuardView> make_views(const SimplePolygon& poly,
                                         const std::vector<Point>& pts) {
  std::vector<GuardView> out;
  out.reserve(pts.size());
  for (const Point& p : pts) out.push_back(make_view(poly, p));
  return out;
}

// An open piece (t0, t1) of edge `edge_index`, with the candidates that see
// all of it.
struct BoundaryWitness {
  std::size_t edge_index = 0;
  Rational t0;
  Rational t1;
  std::vector<std::size_t> seen_by;

  Point point(const SimplePolygon& poly) const {
    return lerp(poly.vertex(edge_index), poly.vertex(edge_index + 1),
                (t0 + t1) / 2);
  }
};

// Cuts every edge at the endpoints of the candidates' visible pieces. The
// set of candidates seeing a boundary point changes only there, so seen_by
// is constant on each open piece. Closed visibility makes the breakpoints
// themselves covered whenever the adjacent pieces are.
inline std::vector<BoundaryWitness> boundary_witnesses(
    const SimplePolygon& poly, const std::vector<GuardView>& views) {
  std::vector<BoundaryWitness> out;
  for (std::size_t e = 0; e < poly.size(); ++e) {
    std::vector<Rational> ts{Rational(0), Rational(1)};
    for (const GuardView& v : views) {
      for (const auto& iv : v.intervals[e]) {
        ts.push_back(iv.first);
        ts.push_back(iv.second);
      }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      BoundaryWitness w{e, ts[i], ts[i + 1], {}};
      for (std::size_t c = 0; c < views.size(); ++c)
        if (views[c].sees_interval(e, w.t0, w.t1)) w.seen_by.push_back(c);
      out.push_back(std::move(w));
    }
  }
  return out;
}

// Candidate guards at the given vertices.
inline std::vector<BoundaryWitness> boundary_witnesses(
    const WVPolygon& wv, const std::vector<std::size_t>& candidates) {
  std::vector<Point> pts;
  for (std::size_t i : candidates) pts.push_back(wv.vertex(i));
  return boundary_witnesses(wv.polygon(), make_views(wv.polygon(), pts));
}

// Every input vertex of the polygon, the default candidate set. Chord
// endpoints inserted into input edges join only with `with_chord_endpoints`.
inline std::vector<Guard> vertex_candidates(const WVPolygon& wv,
                                            bool with_chord_endpoints = false) {
  std::vector<Guard> out;
  for (std::size_t i = 0; i < wv.size(); ++i)
    if (with_chord_endpoints || !wv.is_inserted(i))
      out.push_back(vertex_guard(wv.polygon(), i, Provenance::kComputedGreedy));
  return out;
}

inline CoverInstance cover_instance(const std::vector<BoundaryWitness>& ws,
                                    std::size_t candidate_count) {
  CoverInstance inst;
  inst.universe = ws.size();
  inst.sets.assign(candidate_count, {});
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t c : ws[i].seen_by) inst.sets[c].push_back(i);
  return inst;
}

// Greedy set cover of the witnesses. Throws UncoverableWitnessError.
inline GuardSet greedy_cover(const std::vector<BoundaryWitness>& witnesses,
                             const std::vector<Guard>& candidates) {
  GuardSet out;
  for (std::size_t c :
       greedy_set_cover(cover_instance(witnesses, candidates.size()))) {
    Guard g = candidates[c];
    g.provenance = Provenance::kComputedGreedy;
    out.add(std::move(g));
  }
  return out;
}

// Minimum cover of size at most `limit`. Throws LimitExceededError.
inline GuardSet exact_cover(
    const std::vector<BoundaryWitness>& witnesses,
    const std::vector<Guard>& candidates, std::size_t limit,
    std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max()) {
  GuardSet out;
  for (std::size_t c : exact_set_cover(
           cover_instance(witnesses, candidates.size()), limit, node_budget)) {
    Guard g = candidates[c];
    g.provenance = Provenance::kComputedExact;
    out.add(std::move(g));
  }
  return out;
}

enum class Phase1 { kGreedy, kExact };

// Vertex guards for the boundary of `wv`; forced guards, when given, are
// included up front and the remaining witnesses are covered by the chosen
// method.
inline GuardSet guard_boundary(const WVPolygon& wv, Phase1 method,
                               const GuardSet& forced = {},
                               std::size_t exact_limit = 64,
                               bool with_chord_endpoints = false) {
  std::vector<Guard> candidates = vertex_candidates(wv, with_chord_endpoints);
  std::vector<Point> pts;
  for (const Guard& g : candidates) pts.push_back(g.position);
  std::vector<GuardView> views = make_views(wv.polygon(), pts);
  std::vector<BoundaryWitness> ws = boundary_witnesses(wv.polygon(), views);
  if (!forced.empty()) {
    std::vector<GuardView> fviews =
        make_views(wv.polygon(), forced.positions());
    std::erase_if(ws, [&](const BoundaryWitness& w) {
      return std::any_of(fviews.begin(), fviews.end(), [&](const GuardView& v) {
        return v.sees_interval(w.edge_index, w.t0, w.t1);
      });
    });
  }
  GuardSet out = forced;
  GuardSet chosen = method == Phase1::kGreedy
                        ? greedy_cover(ws, candidates)
                        : exact_cover(ws, candidates, exact_limit);
  out.merge(chosen);
  return out;
}

}  // namespace wvguard
