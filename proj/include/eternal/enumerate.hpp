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

#include <algorithm>
#include <vector>

namespace eternal {

/// Number of count vectors of length n summing to `weight` with every entry
/// in [0, cap] (cap < 0: unbounded). Returned as a double so callers can
/// compare huge estimates against a budget without overflow.
inline double count_configurations(int n, int weight, int cap) {
  if (weight < 0 || n < 0) return 0.0;
  std::vector<double> ways(static_cast<std::size_t>(weight) + 1, 0.0);
  ways[0] = 1.0;
  for (int v = 0; v < n; ++v) {
    std::vector<double> next(ways.size(), 0.0);
    for (int w = 0; w <= weight; ++w) {
      if (ways[w] == 0.0) continue;
      int top = cap < 0 ? weight - w : std::min(cap, weight - w);
      for (int c = 0; c <= top; ++c) next[w + c] += ways[w];
    }
    ways = std::move(next);
  }
  return ways[weight];
}

/// Visits every count vector of length n with the given weight and per-vertex
/// cap, in lexicographic order of the sorted guard-position tuple. For sets
/// this is plain lexicographic order on combinations. `visit` receives the
/// count vector and returns false to stop early. Returns false iff stopped.
template <class Visit>
bool for_each_configuration(int n, int weight, int cap, Visit&& visit) {
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  if (weight == 0) return visit(static_cast<const std::vector<int>&>(counts));
  if (n == 0) return true;
  std::vector<int> pos(static_cast<std::size_t>(weight), 0);

  // Fill pos[from..] with the smallest admissible non-decreasing positions,
  // given pos[from-1] (or 0). Returns false if none exist.
  auto fill_from = [&](int from) {
    for (int i = from; i < weight; ++i) {
      int p = i == 0 ? 0 : pos[i - 1];
      while (p < n && cap >= 0 && counts[p] >= cap) ++p;
      if (p >= n) {
        for (int j = from; j < i; ++j) --counts[pos[j]];
        return false;
      }
      pos[i] = p;
      ++counts[p];
    }
    return true;
  };

  if (!fill_from(0)) return true;
  while (true) {
    if (!visit(static_cast<const std::vector<int>&>(counts))) return false;
    // Advance the rightmost position that can move forward.
    int i = weight - 1;
    while (i >= 0) {
      --counts[pos[i]];
      int p = pos[i] + 1;
      while (p < n && cap >= 0 && counts[p] >= cap) ++p;
      if (p < n) {
        pos[i] = p;
        ++counts[p];
        if (fill_from(i + 1)) break;
        // A larger pos[i] only shrinks the room for the suffix.
        --counts[p];
      }
      --i;
    }
    if (i < 0) return true;
  }
}

}  // namespace eternal
