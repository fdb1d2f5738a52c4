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

// Greedy and exact minimum set cover over small universes.
#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "wvguard/errors.hpp"

namespace wvguard {

// sets[i] lists the elements (0 .. universe-1) covered by set i.
struct CoverInstance {
  std::size_t universe = 0;
  std::vector<std::vector<std::size_t>> sets;
};

namespace detail {

using Bits = boost::dynamic_bitset<>;

inline std::vector<Bits> to_bits(const CoverInstance& inst) {
  std::vector<Bits> out;
  out.reserve(inst.sets.size());
  for (const auto& s : inst.sets) {
    Bits b(inst.universe);
    for (std::size_t e : s) b.set(e);
    out.push_back(std::move(b));
  }
  return out;
}

inline void require_coverable(const CoverInstance& inst,
                              const std::vector<Bits>& bits) {
  Bits all(inst.universe);
  for (const Bits& b : bits) all |= b;
  if (!all.all()) {
    std::size_t missing = 0;
    while (all.test(missing)) ++missing;
    throw UncoverableWitnessError("element " + std::to_string(missing) +
                                  " is not covered by any set");
  }
}

}  // namespace detail

// Classic greedy: repeatedly take the set covering the most uncovered
// elements (lowest index on ties). Throws UncoverableWitnessError.
inline std::vector<std::size_t> greedy_set_cover(const CoverInstance& inst) {
  std::vector<detail::Bits> bits = detail::to_bits(inst);
  detail::require_coverable(inst, bits);
  detail::Bits covered(inst.universe);
  std::vector<std::size_t> chosen;
  while (!covered.all()) {
    std::size_t best = 0, best_gain = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      std::size_t gain = (bits[i] - covered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    chosen.push_back(best);
    covered |= bits[best];
  }
  return chosen;
}

// Minimum-cardinality cover by iterative deepening: branch on the uncovered
// element with the fewest covering sets. Throws LimitExceededError when the
// optimum exceeds `limit`, BudgetExceededError after `node_budget` search
// nodes, UncoverableWitnessError when no cover exists.
inline std::vector<std::size_t> exact_set_cover(
    const CoverInstance& inst, std::size_t limit,
    std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max()) {
  using detail::Bits;
  std::vector<Bits> bits = detail::to_bits(inst);
  detail::require_coverable(inst, bits);
  if (inst.universe == 0) return {};

  // Drop sets contained in another set; they never improve a cover.
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    bool dominated = bits[i].none();
    for (std::size_t j = 0; j < bits.size() && !dominated; ++j) {
      if (i == j) continue;
      if (bits[i].is_subset_of(bits[j]) && (bits[i] != bits[j] || j < i))
        dominated = true;
    }
    if (!dominated) live.push_back(i);
  }
  std::vector<std::vector<std::size_t>> covering(inst.universe);
  std::size_t max_size = 0;
  for (std::size_t i : live) {
    max_size = std::max(max_size, bits[i].count());
    for (std::size_t e = bits[i].find_first(); e != Bits::npos;
         e = bits[i].find_next(e))
      covering[e].push_back(i);
  }

  std::uint64_t nodes = 0;
  std::vector<std::size_t> stack;
  auto search = [&](auto&& self, const Bits& covered, std::size_t k) -> bool {
    if (++nodes > node_budget)
      throw BudgetExceededError("exact cover search budget exhausted");
    Bits open = ~covered;
    std::size_t remaining = open.count();
    if (remaining == 0) return true;
    if (k == 0) return false;
    if (remaining > k * max_size) return false;
    std::size_t pick = Bits::npos, fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t e = open.find_first(); e != Bits::npos;
         e = open.find_next(e)) {
      if (covering[e].size() < fewest) {
        fewest = covering[e].size();
        pick = e;
      }
    }
    std::vector<std::size_t> options = covering[pick];
    std::stable_sort(options.begin(), options.end(),
                     [&](std::size_t a, std::size_t b) {
                       return (bits[a] - covered).count() >
                              (bits[b] - covered).count();
                     });
    for (std::size_t s : options) {
      stack.push_back(s);
      if (self(self, covered | bits[s], k - 1)) return true;
      stack.pop_back();
    }
    return false;
  };
  for (std::size_t k = 1; k <= limit; ++k) {
    stack.clear();
    if (search(search, Bits(inst.universe), k)) {
      std::sort(stack.begin(), stack.end());
      return stack;
    }
  }
  throw LimitExceededError("no cover of size <= " + std::to_string(limit));
}

}  // namespace wvguard
