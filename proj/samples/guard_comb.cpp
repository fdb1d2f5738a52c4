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

// Guards a three-tooth comb seen from its base edge.

#include <iostream>

#include "wvguard/wvguard.hpp"

int main() {
  using namespace wvguard;
  std::vector<Point> ring{{0, 0}, {10, 0}, {10, 4}, {9, 4}, {9, 1},
                          {7, 1}, {7, 4},  {6, 4},  {6, 1}, {4, 1},
                          {4, 4}, {3, 4},  {3, 1},  {0, 1}};
  WVPolygon wv = make_edge_wv(ring, 0, 1);
  if (!is_weakly_visible(wv).visible) return 1;

  Solution s = solve(wv);
  std::cout << "boundary guards: " << s.boundary.size() << "\n"
            << "added guards:    " << s.added.size() << "\n";
  for (const Guard& g : s.all)
    std::cout << "  " << wv.frame().invert(g.position) << "  "
              << to_string(g.provenance) << "\n";
  std::cout << (s.coverage.fully_guarded ? "guarded\n" : "NOT guarded\n");
  return s.coverage.fully_guarded ? 0 : 1;
}
