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
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <ostream>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eternal/errors.hpp"

namespace eternal {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on dense ids 0..n-1. Immutable once built;
/// neighbor lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Throws ValidationError on self-loops, duplicate edges or ids out of range.
  Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels = {})
      : adjacency_(static_cast<std::size_t>(n)), labels_(std::move(labels)) {
    if (n < 0) throw ValidationError("negative vertex count");
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n)) {
      throw ValidationError("label count does not match vertex count");
    }
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an id outside [0," + std::to_string(n) + ")");
      }
      if (u == v) throw ValidationError("self-loop at " + std::to_string(u));
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
      auto& adj = adjacency_[v];
      std::sort(adj.begin(), adj.end());
      auto dup = std::adjacent_find(adj.begin(), adj.end());
      if (dup != adj.end()) {
        throw ValidationError("duplicate edge (" + std::to_string(v) + "," +
                              std::to_string(*dup) + ")");
      }
    }
    edge_count_ = static_cast<int>(edges.size());
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int n() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < n(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::string label(Vertex v) const {
    if (labels_.empty()) return std::to_string(v);
    return labels_[v];
  }

  /// Bitmask of N[v]; only meaningful for n <= 64.
  std::uint64_t closed_mask(Vertex v) const {
    std::uint64_t m = std::uint64_t{1} << v;
    for (Vertex u : adjacency_[v]) m |= std::uint64_t{1} << u;
    return m;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  int edge_count_ = 0;
};

/// BFS distances from `source`; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

/// True iff the vertices flagged in `members` induce a connected subgraph.
/// The empty set counts as connected.
inline bool induces_connected(const Graph& g, const std::vector<bool>& members) {
  Vertex start = -1;
  int size = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (members[v]) {
      ++size;
      if (start < 0) start = v;
    }
  }
  if (size == 0) return true;
  std::vector<bool> seen(members.size(), false);
  std::vector<Vertex> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (members[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == size;
}

inline bool is_connected(const Graph& g) {
  return induces_connected(g, std::vector<bool>(static_cast<std::size_t>(g.n()), true));
}

/// A proper 2-colouring (0/1 per vertex) if one exists.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          queue.push(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

/// Largest finite BFS distance; -1 for a disconnected graph.
inline int diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d < 0) return -1;
      best = std::max(best, d);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Game variants and configurations

enum class Kind { Domination, Roman, Italian };

struct Variant {
  Kind kind = Kind::Domination;
  bool connected = false;

  /// Largest number of guards a single vertex may hold, or -1 if unbounded.
  int cap() const noexcept { return kind == Kind::Domination ? -1 : 2; }

  friend bool operator==(const Variant&, const Variant&) = default;
};

inline std::string to_string(Kind k) {
  switch (k) {
    case Kind::Domination: return "domination";
    case Kind::Roman: return "roman";
    case Kind::Italian: return "italian";
  }
  return "?";
}

inline std::string to_string(const Variant& v) {
  return (v.connected ? "connected-" : "") + to_string(v.kind);
}

/// Guard placement: a multiplicity per vertex. For Roman and Italian games
/// the count doubles as the function value f(v).
class GuardConfig {
 public:
  GuardConfig() = default;
  explicit GuardConfig(std::vector<int> counts) : counts_(std::move(counts)) {}

  static GuardConfig from_support(int n, std::initializer_list<Vertex> support) {
    return from_support(n, std::span<const Vertex>(support.begin(), support.size()));
  }

  static GuardConfig from_support(int n, std::span<const Vertex> support) {
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    for (Vertex v : support) counts.at(static_cast<std::size_t>(v)) += 1;
    return GuardConfig(std::move(counts));
  }

  int size() const noexcept { return static_cast<int>(counts_.size()); }
  int operator[](Vertex v) const { return counts_[v]; }
  const std::vector<int>& counts() const noexcept { return counts_; }

  int total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

  std::vector<Vertex> support() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < size(); ++v) {
      if (counts_[v] > 0) out.push_back(v);
    }
    return out;
  }

  std::vector<bool> support_flags() const {
    std::vector<bool> out(counts_.size());
    for (std::size_t v = 0; v < counts_.size(); ++v) out[v] = counts_[v] > 0;
    return out;
  }

  friend bool operator==(const GuardConfig&, const GuardConfig&) = default;
  friend auto operator<=>(const GuardConfig&, const GuardConfig&) = default;

 private:
  std::vector<int> counts_;
};

inline std::ostream& operator<<(std::ostream& os, const GuardConfig& c) {
  os << '(';
  for (int v = 0; v < c.size(); ++v) os << (v ? "," : "") << c[v];
  return os << ')';
}

/// Throws ValidationError unless `c` is a well-formed configuration for `v`
/// on `g`: one count per vertex, no negatives, and no count above the cap.
inline void require_well_formed(const Graph& g, const GuardConfig& c, const Variant& v) {
  if (c.size() != g.n()) {
    throw ValidationError("configuration has " + std::to_string(c.size()) +
                          " entries for a graph on " + std::to_string(g.n()) + " vertices");
  }
  for (Vertex u = 0; u < g.n(); ++u) {
    if (c[u] < 0) throw ValidationError("negative guard count at " + std::to_string(u));
    if (v.cap() >= 0 && c[u] > v.cap()) {
      throw ValidationError("vertex " + std::to_string(u) + " holds " + std::to_string(c[u]) +
                            " guards; " + to_string(v.kind) + " allows at most 2");
    }
  }
}

/// Whether `c` satisfies the dominating condition of `v` (and support
/// connectivity when `v.connected`). Malformed input throws instead.
inline bool validate_config(const Graph& g, const GuardConfig& c, const Variant& v) {
  require_well_formed(g, c, v);
  for (Vertex u = 0; u < g.n(); ++u) {
    if (c[u] > 0) continue;
    bool ok = false;
    switch (v.kind) {
      case Kind::Domination:
        for (Vertex w : g.neighbors(u)) ok = ok || c[w] > 0;
        break;
      case Kind::Roman:
        for (Vertex w : g.neighbors(u)) ok = ok || c[w] == 2;
        break;
      case Kind::Italian: {
        int sum = 0;
        for (Vertex w : g.neighbors(u)) sum += c[w];
        ok = sum >= 2;
        break;
      }
    }
    if (!ok) return false;
  }
  if (v.connected && !induces_connected(g, c.support_flags())) return false;
  return true;
}

}  // namespace eternal
