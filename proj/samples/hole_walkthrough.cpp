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

// Three boundary guards that leave an unseen triangle above uv, and the
// vertex the completion step adds for it.

#include <iostream>

#include "wvguard/wvguard.hpp"

int main() {
  using namespace wvguard;
  std::vector<Point> ring{{0, 0},   {60, 0},   {66, 70},  {75, 84}, {75, 120},
                          {-15, 120}, {-15, 84}, {-6, 70}, {9, 3}};
  WVPolygon wv = make_edge_wv(ring, 0, 1);
  GuardSet g;
  for (std::size_t i : {3, 6, 0}) g.add(vertex_guard(wv.polygon(), i, Provenance::kUserSupplied));

  CoverageReport before = verify_coverage(wv, g);
  std::cout << "boundary seen: " << before.uncovered_boundary.empty() << "\n"
            << "holes: " << before.holes.size() << "\n";
  for (const Hole& h : before.holes) {
    std::cout << "  hole";
    for (const Point& p : h.region.ring()) std::cout << " " << wv.frame().invert(p);
    std::cout << "\n";
  }

  CompletionResult c = complete_guards(wv, g);
  for (const TriangleTask& t : c.tasks)
    std::cout << "triangle " << wv.frame().invert(t.triangle[0]) << " "
              << wv.frame().invert(t.triangle[1]) << " "
              << wv.frame().invert(t.triangle[2]) << " -> vertex "
              << wv.frame().invert(t.guard_position) << "\n";
  GuardSet all = g;
  all.merge(c.added);
  CoverageReport after = verify_coverage(wv, all);
  std::cout << "added " << c.added.size() << ", holes after: "
            << after.holes.size() << "\n";
  return after.fully_guarded && !before.holes.empty() ? 0 : 1;
}
