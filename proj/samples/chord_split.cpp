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

// Guards a polygon seen from a chord and reports windows that change kind
// across it.

#include <iostream>

#include "wvguard/wvguard.hpp"

int main() {
  using namespace wvguard;
  ChordFixture f = generate_chord_fixture(7, 16, true);
  WVPolygon wv = make_chord_wv(f.ring, f.first, f.second);
  auto [top, bottom] = split_at_chord(wv);
  std::cout << "halves: " << top.size() << " and " << bottom.size()
            << " vertices\n";

  Solution s = solve(wv);
  std::cout << "G: " << s.boundary.size() << ", G': " << s.added.size()
            << ", role switches: " << s.switches.size() << "\n";
  for (const RoleSwitch& r : s.switches)
    std::cout << "  " << r.window.x << "-" << r.window.y << ": "
              << to_string(r.above) << " above, " << to_string(r.below)
              << " below\n";
  return s.coverage.fully_guarded ? 0 : 1;
}
