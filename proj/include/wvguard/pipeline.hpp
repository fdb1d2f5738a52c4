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

// End-to-end guarding: preprocessing, boundary guards, interior completion
// and verification.
#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "wvguard/completion.hpp"
#include "wvguard/errors.hpp"
#include "wvguard/guards.hpp"
#include "wvguard/oracle.hpp"
#include "wvguard/wv_polygon.hpp"

namespace wvguard {

enum class Phase1Source { kGreedy, kExact, kUser };

struct SolveOptions {
  Phase1Source phase1 = Phase1Source::kGreedy;
  // Positions in the canonical frame; used with kUser.
  GuardSet user_guards;
  std::size_t exact_limit = 64;
  // Edge mode: accept user guards inside the open segment uv.
  bool allow_uv_interior = false;
  // Chord mode: let inserted chord endpoints be candidates.
  bool with_chord_endpoints = false;
};

struct SolveStats {
  std::size_t boundary_guards = 0;  // |G|, forced guards included
  std::size_t forced_guards = 0;
  std::size_t added_guards = 0;     // |G'|
  std::size_t upper_on_uv = 0;
  std::size_t windows = 0;
  std::size_t tasks = 0;
  std::size_t holes_before = 0;
  std::size_t holes_after = 0;
  double phase1_ms = 0;
  double phase2_ms = 0;
  double verify_ms = 0;
};

struct Solution {
  // The polygon Phase 2 ran on (after preprocessing in edge mode).
  WVPolygon working;
  PreprocessReport preprocess;
  GuardSet boundary;  // G
  GuardSet added;     // G'
  GuardSet all;       // G and G'
  std::vector<TriangleTask> tasks;
  std::vector<RoleSwitch> switches;
  CoverageReport coverage;  // of `all`, on the input polygon
  SolveStats stats;
};

namespace detail {

class Stopwatch {
 public:
  double lap_ms() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ =
      std::chrono::steady_clock::now();
};

inline GuardSet phase1(const WVPolygon& wv, const SolveOptions& opt,
                       const GuardSet& forced) {
  switch (opt.phase1) {
    case Phase1Source::kGreedy:
      return guard_boundary(wv, Phase1::kGreedy, forced, opt.exact_limit,
                            opt.with_chord_endpoints);
    case Phase1Source::kExact:
      return guard_boundary(wv, Phase1::kExact, forced, opt.exact_limit,
                            opt.with_chord_endpoints);
    case Phase1Source::kUser: {
      GuardSet g = forced;
      for (const Guard& guard : opt.user_guards) {
        // Guards cut away by preprocessing cannot take part in Phase 2.
        if (wv.polygon().locate(guard.position) == Location::kOutside)
          continue;
        Guard copy = guard;
        copy.vertex = wv.polygon().vertex_index(guard.position);
        g.add(std::move(copy));
      }
      return g;
    }
  }
  return forced;
}

}  // namespace detail

// Edge mode. Throws InputNotBoundaryGuardingError when user guards miss part
// of the boundary.
inline Solution solve_edge(const WVPolygon& wv, const SolveOptions& opt = {}) {
  if (wv.mode() != WVMode::kEdge) throw Error("solve_edge needs edge mode");
  if (opt.phase1 == Phase1Source::kUser)
    validate_guard_positions(wv, opt.user_guards, opt.allow_uv_interior);
  Solution s;
  detail::Stopwatch clock;
  auto [reduced, report] = preprocess_concave_endpoints(wv);
  s.working = std::move(reduced);
  s.preprocess = std::move(report);
  GuardSet forced;
  for (const Point& q : s.preprocess.forced_guards)
    forced.add(Guard{q, s.working.polygon().vertex_index(q),
                     Provenance::kForcedPreprocess});
  s.boundary = detail::phase1(s.working, opt, forced);
  s.stats.phase1_ms = clock.lap_ms();

  CompletionResult c = complete_guards(s.working, s.boundary);
  s.stats.phase2_ms = clock.lap_ms();
  s.added = c.added;
  s.tasks = std::move(c.tasks);
  s.all = s.boundary;
  s.all.merge(s.added);
  // User guards removed by preprocessing still count for coverage.
  if (opt.phase1 == Phase1Source::kUser) s.all.merge(opt.user_guards);

  s.stats.boundary_guards = s.boundary.size();
  s.stats.forced_guards = forced.size();
  s.stats.added_guards = s.added.size();
  s.stats.upper_on_uv = c.upper_on_uv;
  s.stats.windows = c.windows.all.size();
  s.stats.tasks = s.tasks.size();
  s.stats.holes_before = extract_holes(wv, s.boundary).size();
  s.coverage = verify_coverage(wv, s.all);
  s.stats.holes_after = s.coverage.holes.size();
  s.stats.verify_ms = clock.lap_ms();
  return s;
}

// Chord mode.
inline Solution solve_chord(const WVPolygon& wv,
                            const SolveOptions& opt = {}) {
  if (wv.mode() != WVMode::kChord) throw NotAChordError("not in chord mode");
  if (opt.phase1 == Phase1Source::kUser)
    validate_guard_positions(wv, opt.user_guards);
  Solution s;
  detail::Stopwatch clock;
  s.working = wv;
  s.boundary = detail::phase1(wv, opt, {});
  s.stats.phase1_ms = clock.lap_ms();

  ChordCompletionResult c = complete_guards_chord(wv, s.boundary);
  s.stats.phase2_ms = clock.lap_ms();
  s.added = c.added;
  s.tasks = std::move(c.tasks);
  s.switches = std::move(c.switches);
  s.all = s.boundary;
  s.all.merge(s.added);

  s.stats.boundary_guards = s.boundary.size();
  s.stats.added_guards = s.added.size();
  s.stats.upper_on_uv = c.upper_on_uv;
  s.stats.windows = c.windows.all.size();
  s.stats.tasks = s.tasks.size();
  s.stats.holes_before = extract_holes(wv, s.boundary).size();
  s.coverage = verify_coverage(wv, s.all);
  s.stats.holes_after = s.coverage.holes.size();
  s.stats.verify_ms = clock.lap_ms();
  return s;
}

inline Solution solve(const WVPolygon& wv, const SolveOptions& opt = {}) {
  return wv.mode() == WVMode::kEdge ? solve_edge(wv, opt)
                                    : solve_chord(wv, opt);
}

}  // namespace wvguard
