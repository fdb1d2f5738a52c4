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

// Deterministic fixture generators. All coordinates are integers.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wvguard/errors.hpp"
#include "wvguard/geometry.hpp"
#include "wvguard/guards.hpp"
#include "wvguard/oracle.hpp"
#include "wvguard/polygon.hpp"
#include "wvguard/weak_visibility.hpp"
#include "wvguard/wv_polygon.hpp"

namespace wvguard {

enum class Family { kComb, kStaircase, kSpikes, kRandomRejection };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::kComb:
      return "comb";
    case Family::kStaircase:
      return "staircase";
    case Family::kSpikes:
      return "spikes";
    case Family::kRandomRejection:
      return "random";
  }
  return "?";
}

inline Family family_from_string(const std::string& s) {
  if (s == "comb") return Family::kComb;
  if (s == "staircase") return Family::kStaircase;
  if (s == "spikes") return Family::kSpikes;
  if (s == "random" || s == "random_rejection") return Family::kRandomRejection;
  throw Error("unknown family: " + s);
}

namespace detail {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen_);
  }
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 gen_;
};

// k teeth: 4k + 2 vertices. The leftmost tooth is flush with the wall at u,
// a ledge separates the rightmost tooth from v.
inline std::vector<Point> comb_ring(std::size_t k, Rng& rng) {
  if (k == 0) k = 1;
  const long w = 3 * static_cast<long>(k);
  std::vector<Point> ring{{0, 0}, {w, 0}, {w, 1}};
  for (std::size_t j = k; j-- > 1;) {
    long x = 3 * static_cast<long>(j);
    long h = rng.uniform(3, 7);
    ring.push_back({x + 1, 1});
    ring.push_back({x + 1, h});
    ring.push_back({x, h});
    ring.push_back({x, 1});
  }
  long h0 = rng.uniform(3, 7);
  ring.push_back({1, 1});
  ring.push_back({1, h0});
  ring.push_back({0, h0});
  return ring;
}

// Heights strictly increasing from v towards u; 2 + 2m vertices.
inline std::vector<Point> staircase_ring(std::size_t m, Rng& rng) {
  if (m == 0) m = 1;
  std::vector<long> widths, rises;
  long length = 0;
  for (std::size_t i = 0; i < m; ++i) {
    widths.push_back(rng.uniform(1, 3));
    rises.push_back(rng.uniform(1, 3));
    length += widths.back();
  }
  std::vector<Point> ring{{0, 0}, {length, 0}};
  long x = length, y = 0;
  for (std::size_t i = 0; i < m; ++i) {
    y += rises[i];
    ring.push_back({x, y});
    x -= widths[i];
    ring.push_back({x, y});
  }
  return ring;
}

// x-monotone chain over the base alternating low valleys and tall spikes;
// 2 + m vertices.
inline std::vector<Point> spikes_ring(std::size_t m, Rng& rng) {
  if (m < 2) m = 2;
  std::vector<long> xs{0};
  for (std::size_t i = 1; i < m; ++i) xs.push_back(xs.back() + rng.uniform(1, 4));
  const long length = xs.back();
  std::vector<Point> ring{{0, 0}, {length, 0}};
  for (std::size_t i = m; i-- > 0;) {
    bool spike = (i % 2) == 1;
    long y = spike ? rng.uniform(6, 20) : rng.uniform(1, 5);
    ring.push_back({xs[i], y});
  }
  return ring;
}

// An x-monotone polygon whose lower chain is the base uv plus short raised
// parts beyond u and v; overhanging parts can hide points from uv. Exactly
// n vertices.
inline std::vector<Point> monotone_ring(std::size_t n, Rng& rng) {
  if (n < 4) n = 4;
  const std::size_t extra = n - 2;
  const long cap = static_cast<long>(std::min<std::size_t>(3, extra / 4));
  const std::size_t left = rng.uniform(0, cap), right = rng.uniform(0, cap);
  const std::size_t upper = extra - left - right;
  const long length = rng.uniform(4, 12) + 2 * static_cast<long>(upper);
  // Lower chain, left to right.
  std::vector<Point> lower;
  long x = 0;
  for (std::size_t i = 0; i < left; ++i) {
    x -= rng.uniform(1, 4);
    lower.insert(lower.begin(), Point{x, rng.uniform(1, 6)});
  }
  const long xmin = x - (left > 0 ? rng.uniform(1, 3) : 0);
  lower.push_back({0, 0});
  lower.push_back({length, 0});
  x = length;
  for (std::size_t i = 0; i < right; ++i) {
    x += rng.uniform(1, 4);
    lower.push_back({x, rng.uniform(1, 6)});
  }
  const long xmax = x + (right > 0 ? rng.uniform(1, 3) : 0);
  // Upper chain: distinct x in [xmin, xmax] including both extremes so that
  // the chains meet. The span exceeds `upper`, so sampling terminates.
  std::vector<long> ux{xmax, xmin};
  while (ux.size() < upper) {
    long c = rng.uniform(xmin + 1, xmax - 1);
    if (std::find(ux.begin(), ux.end(), c) == ux.end()) ux.push_back(c);
  }
  std::sort(ux.begin(), ux.end(), std::greater<>());
  std::vector<Point> ring;
  // Start at u: the part of the lower chain from u to the right end.
  std::size_t iu = left;
  for (std::size_t i = iu; i < lower.size(); ++i) ring.push_back(lower[i]);
  for (long cx : ux) {
    if ((cx == xmax && right == 0) || (cx == xmin && left == 0)) {
      // Vertical wall at the end of the base.
      ring.push_back({cx, rng.uniform(3, 14)});
      continue;
    }
    ring.push_back({cx, rng.uniform(7, 16)});
  }
  for (std::size_t i = 0; i < iu; ++i) ring.push_back(lower[i]);
  return ring;
}

}  // namespace detail

// A weakly visible polygon (edge mode, u = vertex 0, v = vertex 1 of the
// generated ring) of the given family. Comb uses k = (n - 2) / 4 teeth,
// staircase (n - 2) / 2 steps. RANDOM_REJECTION retries up to `attempts`
// times; throws GenerationFailedError.
inline std::vector<Point> generate_ring(std::uint64_t seed, std::size_t n,
                                        Family family,
                                        std::size_t attempts = 200) {
  if (n < 3) throw Error("n must be at least 3");
  detail::Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<int>(family));
  switch (family) {
    case Family::kComb:
      return detail::comb_ring(n >= 6 ? (n - 2) / 4 : 1, rng);
    case Family::kStaircase:
      return detail::staircase_ring(n >= 4 ? (n - 2) / 2 : 1, rng);
    case Family::kSpikes:
      return detail::spikes_ring(n - 2, rng);
    case Family::kRandomRejection:
      for (std::size_t a = 0; a < attempts; ++a) {
        std::vector<Point> ring = detail::monotone_ring(n, rng);
        try {
          SimplePolygon poly(ring);
          if (poly.was_reversed()) continue;
          if (is_weakly_visible(poly, 0, 1)) return ring;
        } catch (const Error&) {
        }
      }
      throw GenerationFailedError("rejection budget exhausted");
  }
  throw Error("unknown family");
}

inline WVPolygon generate_wv_polygon(std::uint64_t seed, std::size_t n,
                                     Family family) {
  return make_edge_wv(generate_ring(seed, n, family), 0, 1);
}

// A polygon weakly visible from a chord, with the chord's endpoints in
// input terms.
struct ChordFixture {
  std::vector<Point> ring;
  ChordEndpoint first;
  ChordEndpoint second;
  // Vertex indices of a boundary-guarding set, when the fixture has one.
  std::vector<std::size_t> guards;
};

namespace detail {

// Integer rotation-scaling plus translation.
inline void random_similarity(std::vector<Point>& ring, Rng& rng) {
  long a = rng.uniform(1, 3), b = rng.uniform(-2, 2);
  long tx = rng.uniform(-5, 5), ty = rng.uniform(-5, 5);
  for (Point& p : ring) {
    Rational x = a * p.x - b * p.y + tx;
    Rational y = b * p.x + a * p.y + ty;
    p = Point(x, y);
  }
}

}  // namespace detail

// Two spike terrains glued along a horizontal chord, one above and one
// mirrored below. With `on_edges` the chord endpoints lie inside vertical
// edges; otherwise they are vertices. A random rational similarity moves
// the whole fixture off the axis.
inline ChordFixture generate_chord_fixture(std::uint64_t seed, std::size_t n,
                                           bool on_edges) {
  detail::Rng rng(seed * 0xD1B54A32D192ED03ULL + 7);
  std::size_t m = std::max<std::size_t>(2, (n - 2) / 2);
  std::vector<long> xs{0};
  for (std::size_t i = 1; i < m; ++i)
    xs.push_back(xs.back() + 2 * rng.uniform(1, 4));
  const long length = xs.back();
  std::vector<long> top(m), bottom(m);
  for (std::size_t i = 0; i < m; ++i) {
    top[i] = (i % 2) ? rng.uniform(6, 18) : rng.uniform(1, 5);
    bottom[i] = (i % 2 == 0) ? rng.uniform(6, 18) : rng.uniform(1, 5);
  }
  std::vector<Point> ring;
  if (!on_edges) ring.push_back({0, 0});
  // Bottom chain left to right (mirrored terrain), then top chain back.
  for (std::size_t i = 0; i < m; ++i) ring.push_back({xs[i], -bottom[i]});
  if (!on_edges) ring.push_back({length, 0});
  for (std::size_t i = m; i-- > 0;) ring.push_back({xs[i], top[i]});
  if (!on_edges) {
    // Corners at u and v: shift the chains' end columns inwards.
    ring[1].x += 1;
    ring[m].x -= 1;
    ring[m + 2].x -= 1;
    ring.back().x += 1;
  }
  detail::random_similarity(ring, rng);
  ChordFixture f;
  f.ring = ring;
  const std::size_t k = ring.size();
  if (on_edges) {
    // Edge from the last top vertex (x = 0) to the first bottom vertex, and
    // from the last bottom vertex to the first top vertex (x = length).
    f.first = {k - 1, ratio(top[0], top[0] + bottom[0])};
    f.second = {m - 1, ratio(bottom[m - 1], bottom[m - 1] + top[m - 1])};
  } else {
    f.first = {0, Rational(0)};
    f.second = {m + 1, Rational(0)};
  }
  return f;
}

enum class DipSide { kU, kV, kBoth };

// A spike terrain whose boundary dips below the axis next to u, v or both,
// making the interior angle there reflex. Rejection-checked for weak
// visibility; throws GenerationFailedError.
inline std::vector<Point> generate_dip_ring(std::uint64_t seed, std::size_t n,
                                            DipSide side,
                                            std::size_t attempts = 200) {
  detail::Rng rng(seed * 0x94D049BB133111EBULL + 11);
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    std::size_t m = std::max<std::size_t>(2, n > 8 ? n - 8 : 2);
    std::vector<Point> terrain = detail::spikes_ring(m, rng);
    const long length = terrain[1].x.get_num().get_si();
    std::vector<Point> ring{terrain[0], terrain[1]};
    bool at_v = side != DipSide::kU;
    bool at_u = side != DipSide::kV;
    if (at_v) {
      long w = rng.uniform(2, 4), d = rng.uniform(1, 4);
      long steps = rng.uniform(1, 2);
      for (long s = 1; s <= steps; ++s)
        ring.push_back({length + (w * s) / (steps + 1), -d - rng.uniform(0, 1)});
      ring.push_back({length + w, -d});
      ring.push_back({length + w, rng.uniform(2, 6)});
    }
    for (std::size_t i = 2; i < terrain.size(); ++i) ring.push_back(terrain[i]);
    if (at_u) {
      long w = rng.uniform(2, 4), d = rng.uniform(1, 4);
      ring.push_back({-w, rng.uniform(2, 6)});
      ring.push_back({-w, -d});
      long steps = rng.uniform(1, 2);
      for (long s = steps; s >= 1; --s)
        ring.push_back({-(w * s) / (steps + 1), -d - rng.uniform(0, 1)});
    }
    try {
      SimplePolygon poly(ring);
      if (poly.was_reversed()) continue;
      if (is_weakly_visible(poly, 0, 1)) return ring;
    } catch (const Error&) {
    }
  }
  throw GenerationFailedError("dip fixture rejection budget exhausted");
}

// A polygon with a vertex set that sees the whole boundary but leaves an
// interior hole. Two bumps beyond u and v cast crossing upper windows onto
// uv, and a shelf lip next to u cuts u's view below their crossing.
struct HoleFixture {
  std::vector<Point> ring;
  // Indices into `ring`: the guards above the bumps and u.
  std::vector<std::size_t> guards;
};

// `extra` adds vertices to the ceiling. Rejection-checked for simplicity,
// weak visibility, boundary coverage and a hole of at least a thousandth
// of the area; throws
// GenerationFailedError.
inline HoleFixture generate_hole_fixture(std::uint64_t seed,
                                         std::size_t extra = 0,
                                         std::size_t attempts = 200) {
  detail::Rng rng(seed * 0xBF58476D1CE4E5B9ULL + 13);
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    const long length = rng.uniform(40, 80);
    const long x1 = rng.uniform(length / 4, length / 2 - 2);
    const long x2 = rng.uniform(length / 2 + 2, 3 * length / 4);
    const long d1x = rng.uniform(2, 5), d1y = rng.uniform(3, 8);
    const long d2x = -rng.uniform(2, 5), d2y = rng.uniform(3, 8);
    const long t1 = (length - x1) / d1x + 1 + rng.uniform(0, 1);
    const long t2 = x2 / -d2x + 1 + rng.uniform(0, 1);
    const Point b1(x1 + t1 * d1x, t1 * d1y);
    const Point b2(x2 + t2 * d2x, t2 * d2y);
    const long k1 = rng.uniform(1, 2), k2 = rng.uniform(1, 2);
    const Point g1 = b1 + Point(k1 * d1x, k1 * d1y);
    const Point g2 = b2 + Point(k2 * d2x, k2 * d2y);
    const long lip_y = rng.uniform(1, 3);
    const Point lip(rng.uniform(2 * lip_y, 6 * lip_y), lip_y);
    const Rational top = std::max(g1.y, g2.y) + rng.uniform(5, 20);

    HoleFixture f;
    f.ring = {{0, 0}, {length, 0}, b1, g1, {g1.x, top}};
    std::vector<long> xs;
    const long left = g2.x.get_num().get_si(), right = g1.x.get_num().get_si();
    for (std::size_t t = 0; xs.size() < extra && t < 1000; ++t) {
      long c = rng.uniform(left + 1, right - 1);
      if (std::find(xs.begin(), xs.end(), c) == xs.end()) xs.push_back(c);
    }
    std::sort(xs.begin(), xs.end(), std::greater<>());
    for (long c : xs) f.ring.push_back({c, top - rng.uniform(0, 6)});
    f.ring.push_back({g2.x, top});
    f.ring.push_back(g2);
    f.ring.push_back(b2);
    f.ring.push_back(lip);
    f.guards = {3, f.ring.size() - 3, 0};
    try {
      SimplePolygon poly(f.ring);
      if (poly.was_reversed() || !is_weakly_visible(poly, 0, 1)) continue;
      WVPolygon wv = make_edge_wv(f.ring, 0, 1);
      GuardSet g;
      for (std::size_t i : f.guards)
        g.add(vertex_guard(wv.polygon(), i, Provenance::kUserSupplied));
      CoverageReport rep = verify_coverage(wv, g);
      // Holes below a thousandth of the area are too thin to sample.
      if (rep.uncovered_boundary.empty() && !rep.holes.empty() &&
          rep.hole_area2 * 1000 >= wv.polygon().area2())
        return f;
    } catch (const Error&) {
    }
  }
  throw GenerationFailedError("hole fixture rejection budget exhausted");
}

// The hole fixture with a shallow triangle glued below uv, which becomes a
// chord between two vertices. The fixture's guards still see the boundary
// and the hole stays above the chord.
inline ChordFixture generate_chord_hole_fixture(std::uint64_t seed,
                                                std::size_t extra = 0) {
  HoleFixture h = generate_hole_fixture(seed, extra);
  detail::Rng rng(seed * 0x2545F4914F6CDD1DULL + 17);
  ChordFixture f;
  f.ring = h.ring;
  const Point& v = f.ring[1];
  f.ring.insert(f.ring.begin() + 1,
                Point(v.x / 2 + rng.uniform(-3, 3), -rng.uniform(1, 4)));
  f.first = {0, Rational(0)};
  f.second = {2, Rational(0)};
  for (std::size_t i : h.guards) f.guards.push_back(i == 0 ? 0 : i + 1);
  detail::random_similarity(f.ring, rng);
  return f;
}

}  // namespace wvguard
