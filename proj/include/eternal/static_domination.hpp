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

#include <optional>
#include <string>
#include <vector>

#include "eternal/enumerate.hpp"
#include "eternal/graph.hpp"

namespace eternal {

inline constexpr int kDefaultPlainVertexLimit = 20;
inline constexpr int kDefaultWeightedVertexLimit = 16;

struct StaticOptions {
  /// Overrides the default brute-force vertex limit (20 plain, 16 otherwise).
  std::optional<int> max_vertices;
};

struct StaticResult {
  int weight = 0;
  GuardConfig witness;
};

namespace detail {

inline void check_static_limit(const Graph& g, const Variant& v, const StaticOptions& opts) {
  int limit = opts.max_vertices.value_or(v.kind == Kind::Domination ? kDefaultPlainVertexLimit
                                                                    : kDefaultWeightedVertexLimit);
  if (g.n() > limit) {
    throw CapabilityError("graph has " + std::to_string(g.n()) +
                              " vertices; brute-force limit for " + to_string(v.kind) + " is " +
                              std::to_string(limit),
                          static_cast<double>(g.n()));
  }
}

}  // namespace detail

/// Minimum weight of a valid configuration for `v` (gamma, gamma_R, gamma_I
/// or a connected counterpart) by exhaustive search in increasing weight.
/// The witness is the first valid configuration in guard-tuple order.
inline StaticResult static_number(const Graph& g, const Variant& v, const StaticOptions& opts = {}) {
  if (g.n() == 0) throw DomainError("static number of the empty graph is undefined");
  detail::check_static_limit(g, v, opts);
  // Statically a second guard on one vertex never helps the plain game.
  int cap = v.kind == Kind::Domination ? 1 : 2;
  for (int weight = 1; weight <= g.n(); ++weight) {
    std::optional<GuardConfig> found;
    for_each_configuration(g.n(), weight, cap, [&](const std::vector<int>& counts) {
      GuardConfig c(counts);
      if (validate_config(g, c, v)) {
        found = std::move(c);
        return false;
      }
      return true;
    });
    if (found) return {weight, std::move(*found)};
  }
  // Only reachable for connected variants on a disconnected graph.
  throw DomainError("no valid " + to_string(v) + " configuration exists");
}

/// Minimum connected dominating set, first in lexicographic order.
inline std::vector<Vertex> min_connected_dominating_set(const Graph& g,
                                                        const StaticOptions& opts = {}) {
  if (g.n() == 0 || !is_connected(g)) {
    throw DomainError("a connected dominating set needs a connected, non-empty graph");
  }
  return static_number(g, Variant{Kind::Domination, true}, opts).witness.support();
}

}  // namespace eternal
