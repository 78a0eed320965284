// Copyright 2026 The eternal-guard Authors
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


#pragma once

#include <cstdint>
#include <queue>
#include <set>
#include <vector>

#include "eternal/grid.hpp"

namespace eternal::grid::testing {

/// Breadth-first closure of the origin under each pattern's generating
/// moves, confined to a box of half-width `box`.
inline std::set<Coord> generative_closure(GridModel m, std::int64_t box) {
  std::vector<Coord> steps;
  switch (m) {
    case GridModel::T4: steps = {{2, 1}, {-1, 2}, {-2, -1}, {1, -2}}; break;
    case GridModel::T8: steps = {{0, 3}, {0, -3}, {3, 0}, {-3, 0}}; break;
    case GridModel::T3: steps = {{2, 2}, {3, -1}, {1, -3}, {-2, -2}, {-3, 1}, {-1, 3}}; break;
    case GridModel::T6: steps = {{3, 1}, {-1, 2}, {-3, -1}, {1, -2}}; break;
  }
  std::set<Coord> seen{{0, 0}};
  std::queue<Coord> queue;
  queue.push({0, 0});
  while (!queue.empty()) {
    Coord p = queue.front();
    queue.pop();
    std::vector<Coord> next;
    for (Coord s : steps) next.push_back(p + s);
    if (m == GridModel::T3 && even_sum(p)) next.push_back(p - Coord{1, 0});
    for (Coord q : next) {
      if (chebyshev(q) > box || seen.count(q)) continue;
      seen.insert(q);
      queue.push(q);
    }
  }
  return seen;
}

/// Window cells where the closed form and the closure disagree.
inline std::int64_t closure_mismatches(GridModel m, std::int64_t radius) {
  auto closure = generative_closure(m, radius + 6);
  std::int64_t mismatches = 0;
  for (std::int64_t y = -radius; y <= radius; ++y) {
    for (std::int64_t x = -radius; x <= radius; ++x) {
      if (pattern_member(m, {0, 0}, {x, y}) != (closure.count({x, y}) == 1)) ++mismatches;
    }
  }
  return mismatches;
}

}  // namespace eternal::grid::testing
