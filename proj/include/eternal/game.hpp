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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eternal/graph.hpp"
#include "eternal/matching.hpp"

namespace eternal {

struct GuardMove {
  Vertex from = 0;
  Vertex to = 0;

  bool stays() const noexcept { return from == to; }
  friend bool operator==(const GuardMove&, const GuardMove&) = default;
  friend auto operator<=>(const GuardMove&, const GuardMove&) = default;
};

/// One (from, to) pair per guard; a guard that stays has from == to.
struct DefenseMove {
  std::vector<GuardMove> moves;

  /// The pairs with from != to, sorted.
  std::vector<GuardMove> moving() const {
    std::vector<GuardMove> out;
    for (const auto& m : moves) {
      if (!m.stays()) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const DefenseMove&, const DefenseMove&) = default;
};

/// Vertices the attacker may assail: exactly those without a guard.
inline std::vector<Vertex> legal_attacks(const Graph& g, const GuardConfig& c) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (c[v] == 0) out.push_back(v);
  }
  return out;
}

namespace detail {

inline std::vector<Vertex> expand_units(const GuardConfig& c) {
  std::vector<Vertex> units;
  for (Vertex v = 0; v < c.size(); ++v) units.insert(units.end(), static_cast<std::size_t>(c[v]), v);
  return units;
}

}  // namespace detail

/// A concrete guard routing from `c` onto `c2` where every guard stays or
/// crosses one edge, if any exists. Ignores which vertex was attacked.
inline std::optional<DefenseMove> route_guards(const Graph& g, const GuardConfig& c,
                                               const GuardConfig& c2) {
  auto from_units = detail::expand_units(c);
  auto to_units = detail::expand_units(c2);
  if (from_units.size() != to_units.size()) return std::nullopt;
  const int k = static_cast<int>(from_units.size());
  BipartiteMatcher matcher(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      Vertex u = from_units[i];
      Vertex w = to_units[j];
      if (u == w || g.adjacent(u, w)) matcher.add_edge(i, j);
    }
  }
  if (matcher.solve() != k) return std::nullopt;
  DefenseMove d;
  for (int i = 0; i < k; ++i) {
    d.moves.push_back({from_units[i], to_units[matcher.partner_of_left(i)]});
  }
  return d;
}

/// Whether guards on `c` can all move (or stay) so as to occupy `c2`.
/// Symmetric in c and c2 because guards travel on an undirected graph.
inline bool can_route(const Graph& g, const GuardConfig& c, const GuardConfig& c2) {
  return route_guards(g, c, c2).has_value();
}

/// Whether the defender may answer an attack on `attacked` in `c` by moving
/// into `c2`. Requires equal totals and an unguarded attacked vertex.
inline bool transition_feasible(const Graph& g, const GuardConfig& c, const GuardConfig& c2,
                                Vertex attacked) {
  if (c.total() != c2.total()) {
    throw DomainError("transition between totals " + std::to_string(c.total()) + " and " +
                      std::to_string(c2.total()));
  }
  if (attacked < 0 || attacked >= g.n() || c[attacked] != 0) {
    throw DomainError("vertex " + std::to_string(attacked) + " is not a legal attack");
  }
  return c2[attacked] >= 1 && can_route(g, c, c2);
}

/// Executes `d` against the attack on `attacked`. Throws IllegalMoveError if
/// the sources do not match `c`, a move is not along an edge, nothing lands
/// on the attacked vertex, or the result exceeds the variant's cap.
inline GuardConfig apply_defense(const Graph& g, const GuardConfig& c, const DefenseMove& d,
                                 Vertex attacked, const Variant& variant = {}) {
  std::vector<int> sources(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> result(static_cast<std::size_t>(g.n()), 0);
  bool covered = false;
  for (const auto& m : d.moves) {
    if (m.from < 0 || m.from >= g.n() || m.to < 0 || m.to >= g.n()) {
      throw IllegalMoveError("move endpoint outside the graph", m.from, m.to);
    }
    if (!m.stays() && !g.adjacent(m.from, m.to)) {
      throw IllegalMoveError("move " + std::to_string(m.from) + "->" + std::to_string(m.to) +
                                 " is not along an edge",
                             m.from, m.to);
    }
    ++sources[m.from];
    ++result[m.to];
    if (m.to == attacked && !m.stays()) covered = true;
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (sources[v] != c[v]) {
      throw IllegalMoveError("move sources do not match the configuration at vertex " +
                                 std::to_string(v),
                             v, v);
    }
  }
  if (!covered) {
    throw IllegalMoveError("no guard moves onto attacked vertex " + std::to_string(attacked),
                           attacked, attacked);
  }
  if (variant.cap() >= 0) {
    for (Vertex v = 0; v < g.n(); ++v) {
      if (result[v] > variant.cap()) {
        for (const auto& m : d.moves) {
          if (m.to == v) {
            throw IllegalMoveError("vertex " + std::to_string(v) + " would hold " +
                                       std::to_string(result[v]) + " guards",
                                   m.from, m.to);
          }
        }
      }
    }
  }
  return GuardConfig(std::move(result));
}

/// Every configuration reachable from `c` in one defender turn (each guard
/// stays or crosses one edge), by explicit enumeration of guard destinations.
/// Results respect `cap` (< 0: unbounded) and come back sorted. Throws
/// CapabilityError if more than `max_tuples` destination tuples would be
/// visited.
inline std::vector<GuardConfig> reachable_configs(const Graph& g, const GuardConfig& c,
                                                  int cap = -1, double max_tuples = 5e6) {
  auto units = detail::expand_units(c);
  double tuples = 1.0;
  for (Vertex u : units) tuples *= static_cast<double>(g.degree(u) + 1);
  if (tuples > max_tuples) {
    throw CapabilityError("move enumeration would visit " + std::to_string(tuples) + " tuples",
                          tuples);
  }
  std::set<std::vector<int>> seen;
  std::vector<int> counts(static_cast<std::size_t>(g.n()), 0);
  auto choices = [&](Vertex u) {
    std::vector<Vertex> out{u};
    out.insert(out.end(), g.neighbors(u).begin(), g.neighbors(u).end());
    return out;
  };
  std::vector<std::vector<Vertex>> options;
  options.reserve(units.size());
  for (Vertex u : units) options.push_back(choices(u));

  // Odometer over per-guard choices.
  std::vector<std::size_t> digit(units.size(), 0);
  while (true) {
    std::fill(counts.begin(), counts.end(), 0);
    bool ok = true;
    for (std::size_t i = 0; i < units.size(); ++i) {
      int& slot = counts[options[i][digit[i]]];
      ++slot;
      if (cap >= 0 && slot > cap) ok = false;
    }
    if (ok) seen.insert(counts);
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == options[i].size()) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  std::vector<GuardConfig> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.emplace_back(s);
  return out;
}

}  // namespace eternal
