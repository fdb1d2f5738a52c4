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

#include <algorithm>

#include "wvguard/generators.hpp"
#include "wvguard/guards.hpp"
#include "wvguard/set_cover.hpp"

namespace wvguard {
namespace {

const std::vector<Point> kSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
const std::vector<Point> kL{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};

std::vector<Point> comb3() {
  return {{0, 0}, {10, 0}, {10, 4}, {9, 4}, {9, 1}, {7, 1}, {7, 4},
          {6, 4}, {6, 1}, {4, 1}, {4, 4}, {3, 4}, {3, 1}, {0, 1}};
}

std::vector<std::size_t> all_vertices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

TEST(Witnesses, SquareOnePerEdgeSeenByAll) {
  WVPolygon wv = make_edge_wv(kSquare, 0, 1);
  auto ws = boundary_witnesses(wv, all_vertices(4));
  ASSERT_EQ(ws.size(), 4u);
  for (const BoundaryWitness& w : ws) EXPECT_EQ(w.seen_by.size(), 4u);
}

TEST(Witnesses, LTopLeftEdgeHiddenFromRightSide) {
  SimplePolygon p(kL);
  std::vector<GuardView> views = make_views(p, p.vertices());
  for (const BoundaryWitness& w : boundary_witnesses(p, views)) {
    if (w.edge_index != 4) continue;  // (1,2) -> (0,2)
    EXPECT_EQ(std::count(w.seen_by.begin(), w.seen_by.end(), 1), 0);
    EXPECT_EQ(std::count(w.seen_by.begin(), w.seen_by.end(), 2), 0);
    EXPECT_FALSE(w.seen_by.empty());
  }
}

TEST(Witnesses, CombToothTipsSeenOnlyFromTheirTooth) {
  SimplePolygon p(comb3());
  std::vector<GuardView> views = make_views(p, p.vertices());
  // Tooth tips are edges 2 (x 9..10), 6 (x 6..7) and 10 (x 3..4).
  for (std::size_t tip : {2u, 6u, 10u}) {
    for (const BoundaryWitness& w : boundary_witnesses(p, views)) {
      if (w.edge_index != tip) continue;
      Rational lo = std::min(p.vertex(tip).x, p.vertex(tip + 1).x);
      for (std::size_t c : w.seen_by) {
        const Point& g = p.vertex(c);
        // A vertex seeing the whole tip lies in that tooth's column
        // (the base corners directly below it included).
        EXPECT_TRUE(g.x >= lo && g.x <= lo + 1) << g;
      }
    }
  }
}

// Every witness piece is seen by exactly the candidates that see its
// midpoint (checked by direct segment tests).
TEST(Witnesses, SeenByMatchesSegmentTests) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    WVPolygon wv = generate_wv_polygon(seed, 16, Family::kRandomRejection);
    const SimplePolygon& p = wv.polygon();
    std::vector<GuardView> views = make_views(p, p.vertices());
    for (const BoundaryWitness& w : boundary_witnesses(p, views)) {
      Point m = w.point(p);
      for (std::size_t c = 0; c < p.size(); ++c) {
        bool listed = std::count(w.seen_by.begin(), w.seen_by.end(), c) > 0;
        EXPECT_EQ(listed, sees(p, p.vertex(c), m));
      }
    }
  }
}

TEST(Phase1, SquareAndL) {
  EXPECT_EQ(guard_boundary(make_edge_wv(kSquare, 0, 1), Phase1::kGreedy).size(), 1u);
  EXPECT_EQ(guard_boundary(make_edge_wv(kSquare, 0, 1), Phase1::kExact, {}, 2).size(), 1u);
  WVPolygon l = make_edge_wv(kL, 0, 1);
  GuardSet g = guard_boundary(l, Phase1::kGreedy);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(l.frame().invert(g[0].position), Point(0, 0));
  EXPECT_EQ(guard_boundary(l, Phase1::kExact, {}, 2).size(), 1u);
}

TEST(Phase1, CombNeedsOnePerTooth) {
  WVPolygon wv = make_edge_wv(comb3(), 0, 1);
  EXPECT_EQ(guard_boundary(wv, Phase1::kGreedy).size(), 3u);
  EXPECT_EQ(guard_boundary(wv, Phase1::kExact, {}, 4).size(), 3u);
  EXPECT_THROW(guard_boundary(wv, Phase1::kExact, {}, 2), LimitExceededError);
  for (std::size_t k = 2; k <= 6; ++k) {
    WVPolygon c = make_edge_wv(generate_ring(k, 4 * k + 2, Family::kComb), 0, 1);
    EXPECT_EQ(c.size(), 4 * k + 2);
    EXPECT_EQ(guard_boundary(c, Phase1::kExact, {}, k + 1).size(), k);
  }
}

TEST(Phase1, ResultSeesTheBoundary) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (Family f : {Family::kStaircase, Family::kSpikes, Family::kRandomRejection}) {
      WVPolygon wv = generate_wv_polygon(seed, 20, f);
      for (Phase1 m : {Phase1::kGreedy, Phase1::kExact}) {
        GuardSet g = guard_boundary(wv, m);
        auto ws = boundary_witnesses(wv.polygon(), make_views(wv.polygon(), g.positions()));
        for (const BoundaryWitness& w : ws) EXPECT_FALSE(w.seen_by.empty());
      }
      EXPECT_LE(guard_boundary(wv, Phase1::kExact).size(),
                guard_boundary(wv, Phase1::kGreedy).size());
    }
  }
}

TEST(GuardSetTest, DeduplicatesPositions) {
  GuardSet g;
  EXPECT_TRUE(g.add({Point(0, 0), 0, Provenance::kComputedGreedy}));
  EXPECT_FALSE(g.add({Point(0, 0), 0, Provenance::kCompletion}));
  EXPECT_TRUE(g.add({Point(1, 0), 1, Provenance::kCompletion}));
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.count(Provenance::kComputedGreedy), 1u);
  EXPECT_TRUE(g.contains({1, 0}));
}

TEST(GuardSetTest, PositionValidation) {
  WVPolygon wv = make_edge_wv(kL, 0, 1);
  GuardSet inside({{Point(1, 1), std::nullopt, Provenance::kUserSupplied}});
  EXPECT_THROW(validate_guard_positions(wv, inside), Error);
  GuardSet on_uv({{Point(1, 0), std::nullopt, Provenance::kUserSupplied}});
  EXPECT_THROW(validate_guard_positions(wv, on_uv), Error);
  EXPECT_NO_THROW(validate_guard_positions(wv, on_uv, true));
  GuardSet corner({{wv.u(), 0, Provenance::kUserSupplied}});
  EXPECT_NO_THROW(validate_guard_positions(wv, corner));
}

// Exhaustive minimum cover over all subsets.
std::size_t brute_cover(const CoverInstance& inst) {
  const std::size_t m = inst.sets.size();
  std::size_t best = m + 1;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<bool> cov(inst.universe, false);
    for (std::size_t s = 0; s < m; ++s)
      if (mask >> s & 1)
        for (std::size_t e : inst.sets[s]) cov[e] = true;
    if (std::all_of(cov.begin(), cov.end(), [](bool b) { return b; }))
      best = std::min<std::size_t>(best, __builtin_popcount(mask));
  }
  return best;
}

TEST(SetCover, ExactMatchesExhaustiveAndGreedyIsValid) {
  detail::Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    CoverInstance inst;
    inst.universe = rng.uniform(1, 12);
    std::size_t m = rng.uniform(1, 10);
    inst.sets.resize(m);
    for (auto& s : inst.sets)
      for (std::size_t e = 0; e < inst.universe; ++e)
        if (rng.uniform(0, 3) == 0) s.push_back(e);
    // Make it coverable.
    for (std::size_t e = 0; e < inst.universe; ++e)
      inst.sets[rng.uniform(0, m - 1)].push_back(e);
    for (auto& s : inst.sets) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    std::size_t opt = brute_cover(inst);
    std::vector<std::size_t> exact = exact_set_cover(inst, m);
    EXPECT_EQ(exact.size(), opt);
    std::vector<std::size_t> greedy = greedy_set_cover(inst);
    EXPECT_GE(greedy.size(), opt);
    for (const auto* sol : {&exact, &greedy}) {
      std::vector<bool> cov(inst.universe, false);
      for (std::size_t s : *sol)
        for (std::size_t e : inst.sets[s]) cov[e] = true;
      EXPECT_TRUE(std::all_of(cov.begin(), cov.end(), [](bool b) { return b; }));
    }
  }
}

TEST(SetCover, Errors) {
  CoverInstance inst{3, {{0}, {1}}};
  EXPECT_THROW(greedy_set_cover(inst), UncoverableWitnessError);
  EXPECT_THROW(exact_set_cover(inst, 5), UncoverableWitnessError);
  CoverInstance chain{4, {{0}, {1}, {2}, {3}}};
  EXPECT_THROW(exact_set_cover(chain, 3), LimitExceededError);
  EXPECT_EQ(exact_set_cover(chain, 4).size(), 4u);
}

}  // namespace
}  // namespace wvguard
