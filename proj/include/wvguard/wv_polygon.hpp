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

// Polygons weakly visible from an edge or a chord, kept in a canonical frame.
//
// Edge mode: the ring is counterclockwise with u at index 0 and v at index 1,
// u = (0, 0) and v on the positive x-axis, so the polygon lies locally above
// uv. Chord mode: u and v are vertices of the ring (inserted if needed), the
// chord lies on the x-axis with u at the origin.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wvguard/errors.hpp"
#include "wvguard/geometry.hpp"
#include "wvguard/polygon.hpp"

namespace wvguard {

// Orientation-preserving rational similarity
//   p -> R (p - origin),  R = [[dx, dy], [-dy, dx]].
// With (dx, dy) = v - u this sends u to the origin and v to (|uv|^2, 0).
struct FrameMap {
  Point origin{0, 0};
  Rational dx{1};
  Rational dy{0};

  Point apply(const Point& p) const {
    Rational px = p.x - origin.x;
    Rational py = p.y - origin.y;
    return {dx * px + dy * py, -dy * px + dx * py};
  }
  Point invert(const Point& q) const {
    Rational s = dx * dx + dy * dy;
    return {origin.x + (dx * q.x - dy * q.y) / s,
            origin.y + (dy * q.x + dx * q.y) / s};
  }
  // The map q -> next.apply(apply(q)).
  FrameMap then(const FrameMap& next) const {
    // Rotation-scalings compose like the complex numbers dx - i dy.
    FrameMap out;
    out.dx = dx * next.dx - dy * next.dy;
    out.dy = dx * next.dy + next.dx * dy;
    out.origin = invert(next.origin);
    return out;
  }
  std::vector<Point> apply(const std::vector<Point>& pts) const {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts) out.push_back(apply(p));
    return out;
  }
};

inline FrameMap frame_for(const Point& u, const Point& v) {
  return FrameMap{u, v.x - u.x, v.y - u.y};
}

enum class WVMode { kEdge, kChord };

class WVPolygon {
 public:
  WVPolygon() = default;
  WVPolygon(SimplePolygon polygon, WVMode mode, std::size_t u_index,
            std::size_t v_index, FrameMap frame)
      : polygon_(std::move(polygon)),
        mode_(mode),
        u_index_(u_index),
        v_index_(v_index),
        frame_(std::move(frame)) {}

  const SimplePolygon& polygon() const { return polygon_; }
  WVMode mode() const { return mode_; }
  std::size_t u_index() const { return u_index_; }
  std::size_t v_index() const { return v_index_; }
  const Point& u() const { return polygon_.vertex(u_index_); }
  const Point& v() const { return polygon_.vertex(v_index_); }
  Segment uv() const { return Segment{u(), v()}; }
  // Input coordinates -> canonical coordinates.
  const FrameMap& frame() const { return frame_; }

  std::size_t size() const { return polygon_.size(); }
  const Point& vertex(std::size_t i) const { return polygon_.vertex(i); }

  bool on_uv(const Point& p) const {
    return sgn(p.y) == 0 && point_on_segment(p, uv());
  }

  // Index of vertex i in the caller's input; nullopt for a chord endpoint
  // inserted into an input edge.
  std::optional<std::size_t> input_index(std::size_t i) const {
    if (input_index_.empty()) return i;
    return input_index_[i];
  }
  bool is_inserted(std::size_t i) const { return !input_index(i); }
  void set_input_indices(std::vector<std::optional<std::size_t>> indices) {
    input_index_ = std::move(indices);
  }
  // Canonical vertex with the given input index.
  std::optional<std::size_t> from_input_index(std::size_t j) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (input_index(i) == j) return i;
    return std::nullopt;
  }

 private:
  SimplePolygon polygon_;
  WVMode mode_ = WVMode::kEdge;
  std::size_t u_index_ = 0;
  std::size_t v_index_ = 1;
  FrameMap frame_;
  std::vector<std::optional<std::size_t>> input_index_;
};

// Canonical edge-mode polygon for the edge {u_index, v_index} of a ccw
// polygon. u and v are swapped if needed so that the polygon lies locally
// above uv. Throws NotAnEdgeError.
inline WVPolygon normalize(const SimplePolygon& poly, std::size_t u_index,
                           std::size_t v_index) {
  const std::size_t n = poly.size();
  if (u_index >= n || v_index >= n) throw NotAnEdgeError("index out of range");
  std::size_t tail;
  if (poly.next(u_index) == v_index) {
    tail = u_index;
  } else if (poly.next(v_index) == u_index) {
    tail = v_index;
  } else {
    throw NotAnEdgeError("vertices " + std::to_string(u_index) + " and " +
                         std::to_string(v_index) + " are not adjacent");
  }
  FrameMap frame = frame_for(poly.vertex(tail), poly.vertex(tail + 1));
  std::vector<Point> ring;
  ring.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    ring.push_back(frame.apply(poly.vertex(tail + k)));
  return WVPolygon(SimplePolygon(std::move(ring)), WVMode::kEdge, 0, 1, frame);
}

// Edge mode from raw input: vertices in input order, edge given by input
// indices.
inline WVPolygon make_edge_wv(std::vector<Point> input, std::size_t u_index,
                              std::size_t v_index) {
  const std::size_t n = input.size();
  SimplePolygon poly(std::move(input));
  if (u_index >= n || v_index >= n) throw NotAnEdgeError("index out of range");
  if (poly.was_reversed()) {
    u_index = n - 1 - u_index;
    v_index = n - 1 - v_index;
  }
  WVPolygon wv = normalize(poly, u_index, v_index);
  // normalize starts the ring at u and keeps the orientation.
  const std::size_t shift = poly.vertex_index(wv.frame().invert(wv.u())).value();
  std::vector<std::optional<std::size_t>> indices(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = (shift + k) % n;
    indices[k] = poly.was_reversed() ? n - 1 - i : i;
  }
  wv.set_input_indices(std::move(indices));
  return wv;
}

// A chord endpoint given as (edge index, parameter) in input order.
struct ChordEndpoint {
  std::size_t edge = 0;
  Rational t;
};

// Chord mode from raw input. Chord endpoints become vertices; the chord's
// interior must lie in the polygon's interior. Throws NotAChordError.
inline WVPolygon make_chord_wv(const std::vector<Point>& input,
                               const ChordEndpoint& first,
                               const ChordEndpoint& second) {
  const std::size_t n = input.size();
  if (n < 3) throw TooFewVerticesError("polygon needs at least 3 vertices");
  auto endpoint = [&](const ChordEndpoint& c) {
    if (c.edge >= n) throw NotAChordError("chord edge index out of range");
    if (c.t < 0 || c.t > 1) throw NotAChordError("chord parameter not in [0,1]");
    return lerp(input[c.edge], input[(c.edge + 1) % n], c.t);
  };
  Point pa = endpoint(first);
  Point pb = endpoint(second);
  if (pa == pb) throw NotAChordError("chord endpoints coincide");

  std::vector<Point> ring;
  std::vector<std::optional<std::size_t>> source;
  ring.reserve(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    ring.push_back(input[i]);
    source.push_back(i);
    Segment e{input[i], input[(i + 1) % n]};
    std::vector<Point> inserts;
    for (const Point* q : {&pa, &pb}) {
      if (*q != e.a && *q != e.b && point_on_segment(*q, e))
        inserts.push_back(*q);
    }
    if (inserts.size() == 2 &&
        squared_distance(e.a, inserts[1]) < squared_distance(e.a, inserts[0]))
      std::swap(inserts[0], inserts[1]);
    for (const Point& q : inserts) {
      ring.push_back(q);
      source.push_back(std::nullopt);
    }
  }
  SimplePolygon poly(std::move(ring));
  if (poly.was_reversed()) std::reverse(source.begin(), source.end());
  auto ia = poly.vertex_index(pa);
  auto ib = poly.vertex_index(pb);
  if (!ia || !ib) throw NotAChordError("chord endpoint is not on the boundary");

  std::vector<Rational> contacts = boundary_contacts(poly.ring(), pa, pb);
  if (contacts.size() != 2 ||
      poly.locate(midpoint(pa, pb)) != Location::kInside) {
    throw NotAChordError("chord interior touches the boundary");
  }
  FrameMap frame = frame_for(pa, pb);
  std::vector<Point> mapped = frame.apply(poly.vertices());
  WVPolygon wv(SimplePolygon(std::move(mapped)), WVMode::kChord, *ia, *ib,
               frame);
  wv.set_input_indices(std::move(source));
  return wv;
}

// Forced guards and removed boundary portions produced when the interior
// angle at u or v is reflex.
struct PreprocessReport {
  std::vector<Point> forced_guards;
  // Inclusive index ranges [first, last] of removed vertices (indices before
  // preprocessing, in walk order away from u or v).
  std::vector<std::pair<std::size_t, std::size_t>> removed_boundary_portions;
  std::vector<Segment> replacement_edges;
  // The cut-off regions, each bounded by the replacement edge and the removed
  // boundary portion.
  std::vector<SimplePolygon> removed_regions;

  bool empty() const { return forced_guards.empty(); }
};

namespace detail {

// Walks from vertex `start` in direction `step` (+1 ccw, -1 cw) and returns
// (index of the vertex where the walk leaves the dip, first point on the
// x-axis).
struct AxisHit {
  Point a;
  std::size_t w_index;  // first vertex following a
};

inline AxisHit first_axis_point(const SimplePolygon& poly, std::size_t start,
                                int step) {
  const std::size_t n = poly.size();
  std::size_t cur = start;
  for (std::size_t guard = 0; guard < n; ++guard) {
    std::size_t nxt = step > 0 ? poly.next(cur) : poly.prev(cur);
    const Point& p = poly.vertex(cur);
    const Point& q = poly.vertex(nxt);
    if (cur != start) {
      if (sgn(p.y) == 0) {
        return {p, nxt};
      }
    }
    if (cur != start || sgn(p.y) != 0) {
      if (sgn(p.y) * sgn(q.y) < 0) {
        Rational t = p.y / (p.y - q.y);
        return {lerp(p, q, t), nxt};
      }
    }
    cur = nxt;
  }
  throw Error("boundary never returns to the x-axis");
}

}  // namespace detail

// If the interior angle at u (v) is reflex, places a forced guard there and
// replaces the boundary between u (v) and the first vertex after the first
// x-axis point by a single edge. Edge mode only; no-op otherwise.
inline std::pair<WVPolygon, PreprocessReport> preprocess_concave_endpoints(
    const WVPolygon& wv) {
  PreprocessReport report;
  if (wv.mode() != WVMode::kEdge) return {wv, report};
  const SimplePolygon& poly = wv.polygon();
  const std::size_t n = poly.size();
  std::vector<bool> keep(n, true);

  auto cut = [&](std::size_t anchor, int step) {
    detail::AxisHit hit = detail::first_axis_point(poly, anchor, step);
    std::vector<Point> region{poly.vertex(anchor)};
    std::size_t first = step > 0 ? poly.next(anchor) : poly.prev(anchor);
    std::size_t k = first;
    std::size_t last = k;
    while (k != hit.w_index) {
      keep[k] = false;
      region.push_back(poly.vertex(k));
      last = k;
      k = step > 0 ? poly.next(k) : poly.prev(k);
    }
    region.push_back(poly.vertex(hit.w_index));
    report.forced_guards.push_back(poly.vertex(anchor));
    report.removed_boundary_portions.emplace_back(first, last);
    report.replacement_edges.push_back(
        Segment{poly.vertex(anchor), poly.vertex(hit.w_index)});
    report.removed_regions.emplace_back(std::move(region));
  };

  if (poly.is_reflex(0)) cut(0, -1);
  if (poly.is_reflex(1)) cut(1, +1);
  if (report.empty()) return {wv, report};

  std::vector<Point> ring;
  std::vector<std::optional<std::size_t>> indices;
  for (std::size_t i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    ring.push_back(poly.vertex(i));
    indices.push_back(wv.input_index(i));
  }
  SimplePolygon reduced(std::move(ring));
  for (const Point& q : reduced.vertices()) {
    if (sgn(q.y) < 0)
      throw Error("preprocessing left boundary below the x-axis");
  }
  WVPolygon out(std::move(reduced), WVMode::kEdge, 0, 1, wv.frame());
  out.set_input_indices(std::move(indices));
  return {std::move(out), report};
}

// The two sides of a chord-mode polygon, each as an edge-mode polygon whose
// edge is the chord. The first lies above the chord (same frame as the
// input); the second lies below and is rotated by a half turn into its own
// canonical frame.
inline std::pair<WVPolygon, WVPolygon> split_at_chord(const WVPolygon& wv) {
  if (wv.mode() != WVMode::kChord) throw NotAChordError("not in chord mode");
  const SimplePolygon& poly = wv.polygon();
  const std::size_t iu = wv.u_index();
  const std::size_t iv = wv.v_index();
  std::vector<Point> upper{wv.u(), wv.v()};
  for (std::size_t k = poly.next(iv); k != iu; k = poly.next(k))
    upper.push_back(poly.vertex(k));
  std::vector<Point> lower{wv.v(), wv.u()};
  for (std::size_t k = poly.next(iu); k != iv; k = poly.next(k))
    lower.push_back(poly.vertex(k));

  WVPolygon top(SimplePolygon(std::move(upper)), WVMode::kEdge, 0, 1,
                wv.frame());
  FrameMap flip = frame_for(wv.v(), wv.u());
  WVPolygon bottom(SimplePolygon(flip.apply(lower)), WVMode::kEdge, 0, 1,
                   wv.frame().then(flip));
  return {std::move(top), std::move(bottom)};
}

}  // namespace wvguard
