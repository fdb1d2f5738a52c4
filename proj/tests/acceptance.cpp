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

// Acceptance run. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. All comparisons are exact.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wvguard/wvguard.hpp"

namespace {

using namespace wvguard;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& what) {
    if (ok) first_failure = what;
    ok = false;
  }
};

struct Fixture {
  std::string name;
  WVPolygon wv;
  // Boundary guards shipped with the fixture; empty means run Phase 1.
  GuardSet given;
};

struct Solved {
  Fixture fixture;
  Solution solution;
};

std::string describe(const Fixture& f) {
  return f.name + " (n=" + std::to_string(f.wv.size()) + ")";
}

// --- fixtures ---------------------------------------------------------------

// A family polygon with lo <= size <= hi, growing n until the family's
// rounding lands in range. Rejection failures move on to the next seed.
Fixture family_fixture(Family family, std::uint64_t seed, std::size_t n,
                       std::size_t lo, std::size_t hi) {
  for (std::uint64_t s = seed;; s += 7919) {
    for (std::size_t m = n; m <= hi + 4; ++m) {
      try {
        WVPolygon wv = generate_wv_polygon(s, m, family);
        if (wv.size() > hi) break;
        if (wv.size() < lo) continue;
        return {std::string(to_string(family)) + " seed " + std::to_string(s),
                std::move(wv), {}};
      } catch (const GenerationFailedError&) {
        break;
      }
    }
  }
}

Fixture hole_fixture(std::uint64_t seed, std::size_t extra) {
  HoleFixture h = generate_hole_fixture(seed, extra);
  Fixture f{"hole seed " + std::to_string(seed), make_edge_wv(h.ring, 0, 1), {}};
  for (std::size_t i : h.guards)
    f.given.add(vertex_guard(f.wv.polygon(), i, Provenance::kUserSupplied));
  return f;
}

Solution solve_fixture(const Fixture& f) {
  SolveOptions opt;
  if (!f.given.empty()) {
    opt.phase1 = Phase1Source::kUser;
    opt.user_guards = f.given;
  }
  return solve(f.wv, opt);
}

// --- independent oracles ----------------------------------------------------

Rational param_along(const Point& a, const Point& b, const Point& p) {
  Point d = b - a;
  return sgn(d.x) != 0 ? (p.x - a.x) / d.x : (p.y - a.y) / d.y;
}

// Sorted parameters on ab where it meets the ring's edges, plus 0 and 1.
std::vector<Rational> cuts_on_segment(std::span<const Point> ring,
                                      const Point& a, const Point& b) {
  std::vector<Rational> ts{Rational(0), Rational(1)};
  for (std::size_t i = 0; i < ring.size(); ++i) {
    SegmentIntersection x =
        segment_intersection(a, b, ring[i], ring[(i + 1) % ring.size()]);
    if (const Point* p = std::get_if<Point>(&x)) {
      ts.push_back(param_along(a, b, *p));
    } else if (const Segment* s = std::get_if<Segment>(&x)) {
      ts.push_back(param_along(a, b, s->a));
      ts.push_back(param_along(a, b, s->b));
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

// Is the intersection of the closed ring region with segment ab a single
// nonempty connected piece?
bool meets_segment_connected(std::span<const Point> ring, const Point& a,
                             const Point& b) {
  std::vector<Rational> ts = cuts_on_segment(ring, a, b);
  std::vector<bool> seq;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    seq.push_back(locate_in_ring(ring, lerp(a, b, ts[i])) != Location::kOutside);
    if (i + 1 < ts.size())
      seq.push_back(locate_in_ring(ring, lerp(a, b, (ts[i] + ts[i + 1]) / 2)) !=
                    Location::kOutside);
  }
  int runs = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] && (i == 0 || !seq[i - 1])) ++runs;
  return runs == 1;
}

// Is the closed region `s` (simple ring) inside the closed region `r`? True
// when no piece of r's boundary enters the interior of s and one interior
// point of s lies in r.
bool region_in_ring(std::span<const Point> r, std::span<const Point> s) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Point& a = r[i];
    const Point& b = r[(i + 1) % r.size()];
    std::vector<Rational> ts = cuts_on_segment(s, a, b);
    for (std::size_t k = 0; k + 1 < ts.size(); ++k)
      if (locate_in_ring(s, lerp(a, b, (ts[k] + ts[k + 1]) / 2)) ==
          Location::kInside)
        return false;
  }
  std::vector<std::array<Point, 3>> tris = triangulate(s);
  for (const auto& t : tris) {
    if (sgn(signed_area2(t)) == 0) continue;
    return locate_in_ring(r, centroid_of(t)) != Location::kOutside;
  }
  return false;
}

bool guards_region(const SimplePolygon& poly, const Point& w,
                   std::span<const Point> s) {
  return region_in_ring(visibility_polygon(poly, w).ring, s);
}

template <typename T>
bool cyclic_equal(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t shift = 0; shift < b.size(); ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i)
      same = a[i] == b[(i + shift) % b.size()];
    if (same) return true;
  }
  return false;
}

// Vertices, rational boundary points and interior samples, in rotation.
std::vector<Point> viewpoints(const SimplePolygon& poly, std::size_t count,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> inner = sample_interior(poly, count / 3 + 1, seed);
  std::vector<Point> out;
  for (std::size_t k = 0; k < count; ++k) {
    switch (k % 3) {
      case 0:
        out.push_back(poly.vertex(rng() % poly.size()));
        break;
      case 1: {
        std::size_t e = rng() % poly.size();
        long num = 1 + static_cast<long>(rng() % 96);
        out.push_back(lerp(poly.vertex(e), poly.vertex(e + 1), ratio(num, 97)));
        break;
      }
      default:
        out.push_back(inner[k / 3]);
    }
  }
  return out;
}

bool boundary_guarded(const SimplePolygon& poly, const GuardSet& g) {
  std::vector<GuardView> views = make_views(poly, g.positions());
  for (const BoundaryWitness& w : boundary_witnesses(poly, views))
    if (w.seen_by.empty()) return false;
  return true;
}

// --- shared state -----------------------------------------------------------

std::vector<Solved> g_family;  // criterion 1 fixtures, solved
std::vector<Solved> g_holes;   // hole fixtures with their given guards

std::vector<const Solved*> mixed(std::size_t family_count) {
  std::vector<const Solved*> out;
  for (std::size_t i = 0; i < g_family.size() && out.size() < family_count;
       i += std::max<std::size_t>(1, g_family.size() / family_count))
    out.push_back(&g_family[i]);
  for (const Solved& s : g_holes) out.push_back(&s);
  return out;
}

// --- criteria ---------------------------------------------------------------

Outcome cardinality_bound() {
  Outcome o;
  const Family families[] = {Family::kComb, Family::kStaircase, Family::kSpikes,
                             Family::kRandomRejection};
  for (std::size_t fi = 0; fi < 4; ++fi) {
    for (std::size_t i = 0; i < 50; ++i) {
      std::size_t n = 8 + (i * 13) % 53;
      Fixture f = family_fixture(families[fi], 1000 * (fi + 1) + i, n, 8, 60);
      g_family.push_back({f, solve_fixture(f)});
    }
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Fixture f = hole_fixture(seed, (seed * 3) % 8);
    g_holes.push_back({f, solve_fixture(f)});
  }
  std::size_t added = 0, boundary = 0;
  auto check = [&](const Solved& s) {
    const Solution& sol = s.solution;
    added += sol.added.size();
    boundary += sol.boundary.size();
    if (sol.added.size() > sol.boundary.size())
      o.fail(describe(s.fixture) + ": |G'| > |G|");
    if (!sol.coverage.fully_guarded || !sol.coverage.holes.empty())
      o.fail(describe(s.fixture) + ": not fully guarded");
  };
  for (const Solved& s : g_family) check(s);
  for (const Solved& s : g_holes) check(s);
  std::ostringstream d;
  d << g_family.size() << " family polygons + " << g_holes.size()
    << " hole fixtures, sum |G|=" << boundary << " sum |G'|=" << added;
  o.detail = d.str();
  return o;
}

Outcome factor_two() {
  Outcome o;
  std::vector<Fixture> fixtures;
  const Family families[] = {Family::kComb, Family::kStaircase, Family::kSpikes,
                             Family::kRandomRejection};
  for (std::size_t fi = 0; fi < 4; ++fi)
    for (std::size_t i = 0; i < 10; ++i)
      fixtures.push_back(
          family_fixture(families[fi], 5000 + 100 * fi + i, 8 + i % 7, 8, 14));
  for (std::uint64_t seed = 101; fixtures.size() < 50; ++seed) {
    HoleFixture h = generate_hole_fixture(seed, seed % 6);
    if (h.ring.size() > 14) continue;
    fixtures.push_back({"hole seed " + std::to_string(seed),
                        make_edge_wv(h.ring, 0, 1), {}});
  }
  std::size_t sum_all = 0, sum_opt = 0, with_added = 0;
  for (const Fixture& f : fixtures) {
    GuardSet g = brute_force_opt(f.wv, OptMode::kBoundary);
    CompletionResult c = complete_guards(f.wv, g);
    GuardSet all = g;
    all.merge(c.added);
    if (!c.added.empty()) ++with_added;
    if (!verify_coverage(f.wv, all).fully_guarded)
      o.fail(describe(f) + ": G u G' does not guard P");
    std::size_t opt = brute_force_opt(f.wv, OptMode::kFull).size();
    sum_all += all.size();
    sum_opt += opt;
    if (all.size() > 2 * opt)
      o.fail(describe(f) + ": |G u G'|=" + std::to_string(all.size()) +
             " > 2*" + std::to_string(opt));
  }
  std::ostringstream d;
  d << fixtures.size() << " instances (n<=14), sum |G u G'|=" << sum_all
    << " sum opt=" << sum_opt << ", " << with_added << " needed G'";
  o.detail = d.str();
  return o;
}

Outcome single_segment() {
  Outcome o;
  std::vector<const Solved*> pool = mixed(40);
  std::vector<WVPolygon> chords;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    ChordFixture c = generate_chord_fixture(seed, 10 + 2 * seed, seed % 2 == 0);
    chords.push_back(make_chord_wv(c.ring, c.first, c.second));
  }
  const std::size_t total = 1000;
  const std::size_t per_chord = 20;
  const std::size_t edge_total = total - per_chord * chords.size();
  std::size_t done = 0, windows_on_uv = 0;
  auto check = [&](const WVPolygon& wv, const Point& p, const std::string& name) {
    VisibilityPolygon vis = visibility_polygon(wv, p);
    if (!meets_segment_connected(vis.ring, wv.u(), wv.v()))
      o.fail(name + ": Vis(p) meets uv in other than one piece");
    if (wv.mode() == WVMode::kEdge) {
      std::size_t upper = 0;
      for (const ConstructedEdge& w : vis.windows) {
        if (!wv.on_uv(w.x) && !wv.on_uv(w.y)) continue;
        ++windows_on_uv;
        if (w.kind == WindowKind::kUpper) ++upper;
      }
      if (upper > 1) o.fail(name + ": two upper windows end on uv");
    }
    ++done;
  };
  for (std::size_t k = 0; k < pool.size(); ++k) {
    std::size_t share = edge_total / pool.size() +
                        (k < edge_total % pool.size() ? 1 : 0);
    const WVPolygon& wv = pool[k]->fixture.wv;
    for (const Point& p : viewpoints(wv.polygon(), share, 31 + k))
      check(wv, p, describe(pool[k]->fixture));
  }
  for (std::size_t k = 0; k < chords.size(); ++k)
    for (const Point& p : viewpoints(chords[k].polygon(), per_chord, 77 + k))
      check(chords[k], p, "chord fixture " + std::to_string(k + 1));
  std::ostringstream d;
  d << done << " viewpoints over " << pool.size() << " edge and "
    << chords.size() << " chord polygons, " << windows_on_uv
    << " windows ending on uv";
  o.detail = d.str();
  return o;
}

Outcome pocket_properties() {
  Outcome o;
  std::size_t windows = 0, pairs = 0, endpoints = 0;
  for (const Solved* s : mixed(60)) {
    const WVPolygon& wv = s->solution.working;
    const std::string name = describe(s->fixture);
    std::vector<Point> pts = s->solution.all.positions();
    for (const Point& p : sample_interior(wv.polygon(), 4, wv.size()))
      pts.push_back(p);
    struct Entry {
      ConstructedEdge w;
      Pocket pocket;
      std::size_t view;
    };
    std::vector<Entry> all;
    for (std::size_t v = 0; v < pts.size(); ++v) {
      if (wv.polygon().locate(pts[v]) == Location::kOutside) continue;
      for (const ConstructedEdge& w : visibility_polygon(wv, pts[v]).windows)
        all.push_back({w, pocket_of(wv, w), v});
    }
    for (const Entry& e : all) {
      ++windows;
      const std::vector<Point>& arc = e.pocket.boundary_arc;
      const bool strict = !wv.on_uv(e.w.x);
      for (std::size_t i = 0; i < arc.size(); ++i) {
        const Point& q = arc[i];
        if (q == e.w.x) continue;
        int c = cmp(q.y, e.w.x.y);
        bool endpoint = q == e.w.y;
        if (c < 0 || (c == 0 && strict && !endpoint))
          o.fail(name + ": pocket vertex not above the line through x");
      }
    }
    for (const Entry& a : all) {
      for (const Entry& b : all) {
        if (a.view == b.view) continue;
        SegmentIntersection hit = segment_intersection(a.w.segment(), b.w.segment());
        const Point* q = std::get_if<Point>(&hit);
        if (!q || *q == a.w.x || *q == a.w.y || *q == b.w.x || *q == b.w.y)
          continue;
        ++pairs;
        for (const Point& e : {b.w.x, b.w.y}) {
          if (!a.w.on_pocket_side(e)) continue;
          ++endpoints;
          if (a.pocket.region.locate(e) != Location::kBoundary)
            o.fail(name + ": crossing endpoint not on the pocket boundary");
        }
      }
    }
  }
  std::ostringstream d;
  d << windows << " pockets, " << pairs << " crossing pairs, " << endpoints
    << " endpoints on the pocket side";
  o.detail = d.str();
  return o;
}

Outcome hole_structure() {
  Outcome o;
  std::size_t sets = 0, skipped = 0, holes = 0, contained = 0;
  for (const Solved* s : mixed(40)) {
    const WVPolygon& wv = s->solution.working;
    const GuardSet& g = s->solution.boundary;
    const std::string name = describe(s->fixture);
    std::vector<GuardSet> weakened{g};
    GuardSet full = g;
    full.merge(s->solution.added);
    for (std::size_t drop = 0; drop < full.size(); ++drop) {
      GuardSet w;
      for (std::size_t i = 0; i < full.size(); ++i)
        if (i != drop) w.add(full[i]);
      weakened.push_back(std::move(w));
    }
    std::vector<TriangleTask> tasks = complete_guards(wv, g).tasks;
    for (std::size_t k = 0; k < weakened.size(); ++k) {
      if (!boundary_guarded(wv.polygon(), weakened[k])) {
        ++skipped;
        continue;
      }
      ++sets;
      for (const Hole& h : extract_holes(wv, weakened[k])) {
        ++holes;
        if (!h.is_convex()) o.fail(name + ": hole is not convex");
        if (!h.leans_on(WindowKind::kUpper) || !h.leans_on(WindowKind::kLower))
          o.fail(name + ": hole misses an upper or lower window");
        if (k != 0) continue;
        bool inside = std::any_of(tasks.begin(), tasks.end(),
                                  [&](const TriangleTask& t) {
                                    return region_in_ring(t.triangle,
                                                          h.region.ring());
                                  });
        if (inside) {
          ++contained;
        } else {
          o.fail(name + ": hole of G outside every triangle");
        }
      }
    }
  }
  if (holes == 0) o.fail("no holes were produced");
  std::ostringstream d;
  d << sets << " boundary-guarding sets (" << skipped
    << " weakened sets lost the boundary), " << holes << " holes, "
    << contained << " holes of G inside a triangle";
  o.detail = d.str();
  return o;
}

Outcome convex_guard() {
  Outcome o;
  std::mt19937_64 rng(606);
  std::vector<const Solved*> pool = mixed(40);
  auto inside = [&](const std::array<Point, 3>& t) {
    long a = 1 + static_cast<long>(rng() % 62);
    long b = 1 + static_cast<long>(rng() % (63 - a));
    Rational ra = ratio(a, 64), rb = ratio(b, 64);
    return t[0] + ra * (t[1] - t[0]) + rb * (t[2] - t[0]);
  };
  std::size_t regions = 0, attempts = 0, shared = 0;
  while (regions < 100) {
    const Solved* s = pool[attempts % pool.size()];
    const SimplePolygon& poly = s->solution.working.polygon();
    std::vector<std::array<Point, 3>> tris = triangulate(poly.ring());
    const std::array<Point, 3>& t = tris[(attempts * 7) % tris.size()];
    std::vector<Point> pts;
    switch (attempts++ % 4) {
      case 0:
        pts.assign(t.begin(), t.end());
        break;
      case 1:
        pts = {inside(t), inside(t), inside(t)};
        break;
      case 2:
        for (int k = 0; k < 6; ++k) pts.push_back(inside(t));
        break;
      default:
        pts = {midpoint(t[0], t[1]), inside(t), inside(t)};
    }
    std::vector<Point> region = convex_hull(pts);
    if (region.size() < 3 || sgn(signed_area2(region)) == 0) continue;
    ++regions;
    std::size_t w = convex_region_guard(poly, region);
    if (poly.vertex_index(region[0]) || poly.vertex_index(region[1]) ||
        poly.vertex_index(region[2]))
      ++shared;
    if (!guards_region(poly, poly.vertex(w), region))
      o.fail(describe(s->fixture) + ": convex_region_guard vertex misses S");
  }
  std::size_t tasks = 0;
  for (const Solved* s : pool) {
    const WVPolygon& wv = s->solution.working;
    for (const TriangleTask& t : s->solution.tasks) {
      ++tasks;
      if (!guards_region(wv.polygon(), wv.vertex(t.guard_vertex), t.triangle))
        o.fail(describe(s->fixture) + ": triangle_guard_vertex misses its triangle");
      std::vector<Point> tri = convex_hull({t.triangle.begin(), t.triangle.end()});
      std::size_t w = convex_region_guard(wv.polygon(), tri);
      if (!guards_region(wv.polygon(), wv.vertex(w), tri))
        o.fail(describe(s->fixture) + ": convex_region_guard misses a task triangle");
    }
  }
  std::ostringstream d;
  d << regions << " regions (" << shared << " touching a vertex), " << tasks
    << " task triangles cross-checked";
  o.detail = d.str();
  return o;
}

Outcome chord_mode() {
  Outcome o;
  std::vector<Fixture> fixtures;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    ChordFixture c = generate_chord_fixture(seed, 8 + seed % 33, seed % 2 == 0);
    fixtures.push_back({"chord seed " + std::to_string(seed),
                        make_chord_wv(c.ring, c.first, c.second), {}});
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    ChordFixture c = generate_chord_hole_fixture(seed, seed % 5);
    Fixture f{"chord-hole seed " + std::to_string(seed),
              make_chord_wv(c.ring, c.first, c.second), {}};
    for (std::size_t i : c.guards)
      f.given.add(vertex_guard(f.wv.polygon(), *f.wv.from_input_index(i),
                               Provenance::kUserSupplied));
    fixtures.push_back(std::move(f));
  }
  std::size_t switches = 0, added = 0, boundary = 0;
  for (const Fixture& f : fixtures) {
    GuardSet g = f.given.empty() ? guard_boundary(f.wv, Phase1::kGreedy)
                                 : f.given;
    ChordCompletionResult c = complete_guards_chord(f.wv, g);
    GuardSet all = g;
    all.merge(c.added);
    added += c.added.size();
    boundary += g.size();
    if (c.added.size() > 2 * g.size())
      o.fail(describe(f) + ": |G' u G''| > 2|G|");
    if (c.added_above.size() > g.size() || c.added_below.size() > g.size())
      o.fail(describe(f) + ": one side added more than |G|");
    if (!verify_coverage(f.wv, all).fully_guarded)
      o.fail(describe(f) + ": not fully guarded");
    for (const RoleSwitch& r : c.switches) {
      ++switches;
      if (r.above == r.below)
        o.fail(describe(f) + ": crossing window keeps its kind on both sides");
    }
  }
  if (switches == 0) o.fail("no window crossed a chord");
  std::ostringstream d;
  d << fixtures.size() << " chord polygons, sum |G|=" << boundary
    << " sum |G' u G''|=" << added << ", " << switches << " role switches";
  o.detail = d.str();
  return o;
}

Outcome differential() {
  Outcome o;
  std::vector<const Solved*> pool = mixed(40);
  std::size_t pairs = 0;
  for (std::size_t k = 0; pairs < 500; ++k) {
    const Solved* s = pool[k % pool.size()];
    const SimplePolygon& poly = s->fixture.wv.polygon();
    for (const Point& p : viewpoints(poly, 5, 900 + k)) {
      if (pairs == 500) break;
      ++pairs;
      VisibilityPolygon a = visibility_polygon(poly, p, VisibilityEngine::kSweep);
      VisibilityPolygon b =
          visibility_polygon(poly, p, VisibilityEngine::kRayShooting);
      if (!cyclic_equal(a.ring, b.ring) || !cyclic_equal(a.tags, b.tags))
        o.fail(describe(s->fixture) + ": sweep and ray shooting disagree");
    }
  }
  std::size_t sets = 0, with_holes = 0;
  for (const Solved* s : mixed(20)) {
    const WVPolygon& wv = s->solution.working;
    GuardSet full = s->solution.boundary;
    full.merge(s->solution.added);
    for (const GuardSet* g : {&s->solution.boundary, const_cast<const GuardSet*>(&full)}) {
      ++sets;
      bool no_holes = extract_holes(wv, *g).empty();
      if (!no_holes) ++with_holes;
      std::vector<GuardView> views = make_views(wv.polygon(), g->positions());
      SampleReport r = dense_sample_check(wv.polygon(), views, 10000, 17 + sets);
      if (no_holes != r.unseen.empty())
        o.fail(describe(s->fixture) + ": holes and dense sample disagree");
    }
  }
  std::ostringstream d;
  d << pairs << " sweep/ray pairs; " << sets << " guard sets sampled at 10^4 ("
    << with_holes << " with holes)";
  o.detail = d.str();
  return o;
}

Outcome preprocessing() {
  Outcome o;
  const DipSide sides[] = {DipSide::kU, DipSide::kV, DipSide::kBoth};
  std::size_t forced = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    DipSide side = sides[seed % 3];
    std::size_t expect = side == DipSide::kBoth ? 2 : 1;
    WVPolygon wv = make_edge_wv(generate_dip_ring(seed, 10 + seed, side), 0, 1);
    const std::string name = "dip seed " + std::to_string(seed);
    Solution s = solve_edge(wv);
    const PreprocessReport& rep = s.preprocess;
    forced += rep.forced_guards.size();
    if (rep.forced_guards.size() != expect)
      o.fail(name + ": wrong number of forced guards");
    if (s.stats.forced_guards != rep.forced_guards.size())
      o.fail(name + ": forced guards missing from G");
    for (std::size_t i = 0; i < rep.removed_regions.size(); ++i)
      if (!guards_region(wv.polygon(), rep.forced_guards[i],
                         rep.removed_regions[i].ring()))
        o.fail(name + ": removed region not visible from its forced guard");
    if (!s.coverage.fully_guarded || s.stats.holes_after != 0)
      o.fail(name + ": not fully guarded");
  }
  o.detail = "20 dip polygons, " + std::to_string(forced) + " forced guards";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"cardinality |G'| <= |G|, zero holes", cardinality_bound},
      {"factor 2 against exact optimum", factor_two},
      {"Vis(p) meets uv in one segment", single_segment},
      {"pocket geometry", pocket_properties},
      {"hole structure", hole_structure},
      {"convex region guard", convex_guard},
      {"chord mode", chord_mode},
      {"differential oracles", differential},
      {"concave endpoint preprocessing", preprocessing},
  };
  bool all_ok = true;
  int id = 0;
  for (const Criterion& c : criteria) {
    ++id;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    all_ok = all_ok && o.ok;
    std::printf("%s %d %s: %s [%.1fs]%s%s\n", o.ok ? "PASS" : "FAIL", id,
                c.name, o.detail.c_str(), secs, o.ok ? "" : " first failure: ",
                o.first_failure.c_str());
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
