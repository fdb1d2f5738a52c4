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

#include <gtest/gtest.h>

#include "wvguard/generators.hpp"
#include "wvguard/oracle.hpp"
#include "wvguard/weak_visibility.hpp"

namespace wvguard {
namespace {

// Does q see any point of uv? Checked against the ray-shooting engine's
// visibility polygon, independent of the sweep used by the library.
bool sees_uv(const WVPolygon& wv, const Point& q) {
  VisibilityPolygon vis =
      visibility_polygon(wv.polygon(), q, VisibilityEngine::kRayShooting);
  for (std::size_t i = 0; i < vis.size(); ++i) {
    auto x = segment_intersection(vis.edge(i), wv.uv());
    if (!std::holds_alternative<NoIntersection>(x)) return true;
  }
  return vis.contains(wv.u()) || vis.contains(wv.v());
}

// Every cell between vertex-pair lines on every edge, each midpoint tested
// with the ray-shooting engine.
bool naive_weakly_visible(const SimplePolygon& poly, const Point& a,
                          const Point& b) {
  for (std::size_t e = 0; e < poly.size(); ++e) {
    std::vector<Rational> ts = detail::critical_params(poly, e);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      Point m = lerp(poly.vertex(e), poly.vertex(e + 1), (ts[i] + ts[i + 1]) / 2);
      VisibilityPolygon vis =
          visibility_polygon(poly, m, VisibilityEngine::kRayShooting);
      if (!detail::ring_meets_segment(vis.ring, a, b)) return false;
    }
  }
  return true;
}

TEST(WeakVisibility, LShape) {
  WVPolygon wv = make_edge_wv({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}, 0, 1);
  EXPECT_TRUE(is_weakly_visible(wv).visible);
}

TEST(WeakVisibility, SquareAnyEdge) {
  std::vector<Point> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (std::size_t i = 0; i < 4; ++i)
    EXPECT_TRUE(is_weakly_visible(make_edge_wv(sq, i, (i + 1) % 4)).visible);
}

TEST(WeakVisibility, TShapeHasWitnessInArm) {
  std::vector<Point> t{{1, 0}, {3, 0}, {3, 2}, {4, 2}, {4, 3}, {0, 3}, {0, 2}, {1, 2}};
  WVPolygon wv = make_edge_wv(t, 0, 1);
  WeakVisibilityResult r = is_weakly_visible(wv);
  ASSERT_FALSE(r.visible);
  ASSERT_TRUE(r.witness);
  Point w = wv.frame().invert(*r.witness);
  EXPECT_TRUE(w.x > 3 || w.x < 1) << w;
  EXPECT_GE(w.y, 2);
  EXPECT_FALSE(sees_uv(wv, *r.witness));
}

TEST(WeakVisibility, GeneratedFamiliesAreVisibleEverywhere) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    for (Family f : {Family::kComb, Family::kStaircase, Family::kSpikes,
                     Family::kRandomRejection}) {
      WVPolygon wv = generate_wv_polygon(seed, 8 + 2 * seed, f);
      ASSERT_TRUE(is_weakly_visible(wv).visible) << to_string(f) << seed;
      for (const Point& q : sample_interior(wv.polygon(), 40, seed))
        EXPECT_TRUE(sees_uv(wv, q));
    }
  }
}

// Pulling a comb tooth sideways over its neighbour hides a corner from uv.
TEST(WeakVisibility, PerturbedFixturesAgreeWithSampling) {
  std::size_t rejected = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    std::vector<Point> ring = generate_ring(seed, 12, Family::kRandomRejection);
    detail::Rng rng(seed);
    // Shear a random top vertex far to one side.
    std::size_t k = 2 + rng.uniform(0, static_cast<long>(ring.size()) - 3);
    ring[k] = ring[k] + Point(rng.uniform(-30, 30), 0);
    WVPolygon wv;
    try {
      wv = make_edge_wv(ring, 0, 1);
    } catch (const Error&) {  // perturbation broke simplicity
      continue;
    }
    WeakVisibilityResult r = is_weakly_visible(wv);
    if (r.visible) {
      for (const Point& q : sample_interior(wv.polygon(), 60, seed))
        EXPECT_TRUE(sees_uv(wv, q));
      for (const Point& q : wv.polygon().vertices()) EXPECT_TRUE(sees_uv(wv, q));
    } else {
      ++rejected;
      ASSERT_TRUE(r.witness);
      EXPECT_TRUE(wv.polygon().contains(*r.witness));
      EXPECT_FALSE(sees_uv(wv, *r.witness));
    }
  }
  EXPECT_GT(rejected, 0u);
}

TEST(WeakVisibility, ChordFixtures) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    ChordFixture f = generate_chord_fixture(seed, 12 + seed, seed % 2 == 0);
    WVPolygon wv = make_chord_wv(f.ring, f.first, f.second);
    EXPECT_TRUE(is_weakly_visible(wv).visible);
    for (const Point& q : sample_interior(wv.polygon(), 40, seed))
      EXPECT_TRUE(sees_uv(wv, q));
  }
}

TEST(WeakVisibility, EveryEdgeAgreesWithNaiveCells) {
  std::size_t visible = 0, checked = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    detail::Rng rng(seed);
    std::vector<Point> ring;
    switch (seed % 4) {
      case 0: ring = detail::monotone_ring(8 + seed % 6, rng); break;
      case 1: ring = detail::comb_ring(2 + seed % 2, rng); break;
      case 2: ring = detail::staircase_ring(3 + seed % 3, rng); break;
      default: ring = detail::spikes_ring(6 + seed % 5, rng);
    }
    SimplePolygon poly;
    try {
      poly = SimplePolygon(ring);
    } catch (const Error&) {
      continue;
    }
    for (std::size_t e = 0; e < poly.size(); ++e) {
      const Point& a = poly.vertex(e);
      const Point& b = poly.vertex(e + 1);
      WeakVisibilityResult r = weakly_visible_from(poly, a, b);
      ++checked;
      visible += r.visible;
      EXPECT_EQ(r.visible, naive_weakly_visible(poly, a, b))
          << "seed " << seed << " edge " << e;
      if (!r.visible) {
        ASSERT_TRUE(r.witness);
        VisibilityPolygon vis = visibility_polygon(
            poly, *r.witness, VisibilityEngine::kRayShooting);
        EXPECT_FALSE(detail::ring_meets_segment(vis.ring, a, b));
      }
    }
  }
  EXPECT_GT(visible, 0u);
  EXPECT_LT(visible, checked);
}

}  // namespace
}  // namespace wvguard
