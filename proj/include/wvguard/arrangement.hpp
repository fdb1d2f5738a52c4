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

// Bounded faces of the planar overlay of a set of segments.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "wvguard/geometry.hpp"

namespace wvguard {

struct Arrangement {
  std::vector<Point> vertices;
  // Undirected edges (i < j), no duplicates.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  // Counterclockwise rings of the bounded faces.
  std::vector<std::vector<Point>> faces;
};

// Splits the segments at every mutual intersection, merges overlaps and
// traces the faces with the face on the left of each half-edge.
inline Arrangement build_arrangement(const std::vector<Segment>& segments) {
  Arrangement arr;
  std::map<Point, std::size_t> index;
  auto vid = [&](const Point& p) {
    auto [it, fresh] = index.try_emplace(p, arr.vertices.size());
    if (fresh) arr.vertices.push_back(p);
    return it->second;
  };
  std::vector<std::pair<std::size_t, std::size_t>> raw;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& s = segments[i];
    if (s.a == s.b) continue;
    std::vector<std::pair<Rational, Point>> cuts{{Rational(0), s.a},
                                                 {Rational(1), s.b}};
    for (std::size_t j = 0; j < segments.size(); ++j) {
      if (i == j) continue;
      SegmentIntersection x = segment_intersection(s, segments[j]);
      if (const Point* q = std::get_if<Point>(&x)) {
        cuts.emplace_back(param_on_line(s.a, s.b, *q), *q);
      } else if (const Segment* o = std::get_if<Segment>(&x)) {
        cuts.emplace_back(param_on_line(s.a, s.b, o->a), o->a);
        cuts.emplace_back(param_on_line(s.a, s.b, o->b), o->b);
      }
    }
    std::sort(cuts.begin(), cuts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      if (cuts[k].first == cuts[k + 1].first) continue;
      std::size_t a = vid(cuts[k].second), b = vid(cuts[k + 1].second);
      raw.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  arr.edges = raw;

  const std::size_t nv = arr.vertices.size();
  std::vector<std::vector<std::size_t>> around(nv);
  for (auto [a, b] : raw) {
    around[a].push_back(b);
    around[b].push_back(a);
  }
  for (std::size_t v = 0; v < nv; ++v) {
    const Point& o = arr.vertices[v];
    std::sort(around[v].begin(), around[v].end(),
              [&](std::size_t a, std::size_t b) {
                return direction_less(arr.vertices[a] - o,
                                      arr.vertices[b] - o);
              });
  }
  auto position = [&](std::size_t v, std::size_t nb) {
    auto it = std::find(around[v].begin(), around[v].end(), nb);
    return static_cast<std::size_t>(it - around[v].begin());
  };
  // Visited flags per half-edge (a -> b).
  std::map<std::pair<std::size_t, std::size_t>, bool> used;
  for (auto [a, b] : raw) {
    used[{a, b}] = false;
    used[{b, a}] = false;
  }
  for (auto& [he, seen] : used) {
    if (seen) continue;
    std::vector<Point> ring;
    auto cur = he;
    while (!used[cur]) {
      used[cur] = true;
      ring.push_back(arr.vertices[cur.first]);
      std::size_t b = cur.second;
      const auto& nbs = around[b];
      std::size_t k = position(b, cur.first);
      std::size_t c = nbs[(k + nbs.size() - 1) % nbs.size()];
      cur = {b, c};
    }
    if (ring.size() >= 3 && sgn(signed_area2(ring)) > 0)
      arr.faces.push_back(std::move(ring));
  }
  return arr;
}

}  // namespace wvguard
