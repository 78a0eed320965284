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
#include <utility>
#include <vector>

#include "eternal/enumerate.hpp"
#include "eternal/graph.hpp"
#include "eternal/solver.hpp"
#include "eternal/static_domination.hpp"
#include "eternal/strategy.hpp"

namespace eternal {

/// The three gadgets:
///   Bipartite      dominating set -> eternal domination on a bipartite
///                  graph of diameter at most 4
///   SplitRoman     dominating set -> eternal Roman domination on a split graph
///   SplitItalian   Italian domination -> eternal Italian domination on a
///                  split graph
enum class Gadget { Bipartite, SplitRoman, SplitItalian };

inline std::string to_string(Gadget t) {
  switch (t) {
    case Gadget::Bipartite: return "bipartite";
    case Gadget::SplitRoman: return "split-roman";
    case Gadget::SplitItalian: return "split-italian";
  }
  return "?";
}

inline Gadget parse_gadget(const std::string& s) {
  if (s == "bipartite") return Gadget::Bipartite;
  if (s == "split-roman") return Gadget::SplitRoman;
  if (s == "split-italian") return Gadget::SplitItalian;
  throw DomainError("unknown gadget '" + s + "' (expected bipartite, split-roman or split-italian)");
}

struct Block {
  std::string name;
  std::vector<Vertex> vertices;
};

/// Target value = multiplier * source parameter + addend.
struct Relation {
  Kind source_kind = Kind::Domination;
  Variant target_variant;
  int multiplier = 1;
  int addend = 0;

  int expected(int source_value) const { return multiplier * source_value + addend; }
};

struct ReductionInstance {
  Graph source;
  Graph target;
  Gadget gadget = Gadget::Bipartite;
  /// Bipartite: U, P, W, w. Split: A then one block per copy of V.
  std::vector<Block> layout;
  Relation relation;

  /// Copy blocks of a split gadget (empty for the bipartite one).
  std::vector<const Block*> copy_blocks() const {
    std::vector<const Block*> out;
    if (gadget == Gadget::Bipartite) return out;
    for (std::size_t j = 1; j < layout.size(); ++j) out.push_back(&layout[j]);
    return out;
  }
};

namespace detail {

inline bool in_closed_neighborhood(const Graph& g, Vertex i, Vertex k) {
  return i == k || g.adjacent(i, k);
}

inline ReductionInstance build_bipartite(const Graph& g) {
  const int n = g.n();
  // u_1..u_n, p_1..p_{n+1}, w_1..w_n, then w.
  const Vertex p0 = n, w0 = 2 * n + 1, hub = 3 * n + 1;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i + 1));
  for (int j = 0; j <= n; ++j) labels.push_back("p" + std::to_string(j + 1));
  for (int i = 0; i < n; ++i) labels.push_back("w" + std::to_string(i + 1));
  labels.push_back("w");
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (in_closed_neighborhood(g, i, j)) edges.emplace_back(i, w0 + j);
    }
  }
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, hub);
  for (Vertex j = 0; j <= n; ++j) edges.emplace_back(p0 + j, hub);

  ReductionInstance r;
  r.source = g;
  r.target = Graph(3 * n + 2, edges, std::move(labels));
  r.gadget = Gadget::Bipartite;
  Block u{"U", {}}, p{"P", {}}, w{"W", {}};
  for (Vertex i = 0; i < n; ++i) u.vertices.push_back(i);
  for (Vertex j = 0; j <= n; ++j) p.vertices.push_back(p0 + j);
  for (Vertex i = 0; i < n; ++i) w.vertices.push_back(w0 + i);
  r.layout = {u, p, w, Block{"w", {hub}}};
  r.relation = {Kind::Domination, Variant{Kind::Domination, false}, 1, 2};
  return r;
}

inline ReductionInstance build_split(const Graph& g, Gadget t) {
  const int n = g.n();
  const int copies = t == Gadget::SplitRoman ? 2 * n + 2 : n + 2;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i + 1));
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex k = i + 1; k < n; ++k) edges.emplace_back(i, k);
  }
  ReductionInstance r;
  r.source = g;
  r.gadget = t;
  Block a{"A", {}};
  for (Vertex i = 0; i < n; ++i) a.vertices.push_back(i);
  r.layout.push_back(a);
  for (int j = 0; j < copies; ++j) {
    Block b{"W" + std::to_string(j + 1), {}};
    for (Vertex k = 0; k < n; ++k) {
      Vertex w = n + j * n + k;
      labels.push_back("w" + std::to_string(k + 1) + "." + std::to_string(j + 1));
      b.vertices.push_back(w);
      for (Vertex i = 0; i < n; ++i) {
        if (in_closed_neighborhood(g, i, k)) edges.emplace_back(i, w);
      }
    }
    r.layout.push_back(std::move(b));
  }
  r.target = Graph(n + copies * n, edges, std::move(labels));
  if (t == Gadget::SplitRoman) {
    r.relation = {Kind::Domination, Variant{Kind::Roman, false}, 2, 1};
  } else {
    r.relation = {Kind::Italian, Variant{Kind::Italian, false}, 1, 1};
  }
  return r;
}

}  // namespace detail

/// Builds the gadget graph for `g`. Throws DomainError for an empty graph.
inline ReductionInstance build_reduction(const Graph& g, Gadget t) {
  if (g.n() < 1) throw DomainError("reduction needs at least one source vertex");
  return t == Gadget::Bipartite ? detail::build_bipartite(g) : detail::build_split(g, t);
}

// ---------------------------------------------------------------------------
// Verification

struct StructureCheck {
  int vertices = 0;
  int expected_vertices = 0;
  /// Bipartite gadget: proper 2-colouring with U and P on one side.
  std::optional<bool> bipartite;
  std::optional<int> diameter;
  /// Split gadgets: A is a clique and the copy blocks are independent.
  std::optional<bool> split;
  bool ok = true;
};

struct ReductionReport {
  Gadget gadget = Gadget::Bipartite;
  StructureCheck structure;
  int source_parameter = 0;
  int expected_value = 0;
  /// Everything below is empty when the solver budget was exceeded.
  bool partial = false;
  std::string partial_reason;
  std::optional<int> target_value;
  std::optional<bool> relation_holds;
  std::optional<int> connected_value;
  /// Every configuration in the connected witness family has a connected
  /// support.
  std::optional<bool> connected_supports;
  /// Floating-guard strategy built from a minimum source solution, checked
  /// for connected supports over a random run.
  std::optional<bool> forward_strategy_connected;
  std::optional<int> forward_strategy_budget;
  /// Split gadgets: configurations of the relation's weight that were
  /// checked for an all-zero copy block, and whether every one had one.
  std::optional<long> pigeonhole_checked;
  std::optional<bool> pigeonhole_holds;

  bool ok() const {
    return structure.ok && !partial && relation_holds.value_or(false) &&
           connected_value == target_value && connected_supports.value_or(false) &&
           forward_strategy_connected.value_or(true) && pigeonhole_holds.value_or(true);
  }
};

struct ReductionOptions {
  double budget = kDefaultConfigBudget;
  int forward_rounds = 200;
  std::uint64_t seed = 1;
};

inline StructureCheck check_structure(const ReductionInstance& r) {
  StructureCheck s;
  const Graph& h = r.target;
  const int n = r.source.n();
  s.vertices = h.n();
  if (r.gadget == Gadget::Bipartite) {
    s.expected_vertices = 3 * n + 2;
    auto colour = two_coloring(h);
    bool sides = colour.has_value();
    if (sides) {
      // U and P share a colour; W and w take the other.
      int a_side = (*colour)[r.layout[0].vertices.front()];
      for (const auto& b : r.layout) {
        bool a_part = b.name == "U" || b.name == "P";
        for (Vertex v : b.vertices) sides = sides && ((*colour)[v] == a_side) == a_part;
      }
    }
    s.bipartite = sides;
    s.diameter = diameter(h);
    s.ok = sides && *s.diameter >= 0 && *s.diameter <= 4;
  } else {
    const int copies = r.gadget == Gadget::SplitRoman ? 2 * n + 2 : n + 2;
    s.expected_vertices = n + n * copies;
    bool split = true;
    const auto& a = r.layout[0].vertices;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) split = split && h.adjacent(a[i], a[j]);
    }
    for (Vertex v = n; v < h.n(); ++v) {
      for (Vertex u : h.neighbors(v)) split = split && u < n;
    }
    s.split = split;
    s.ok = split;
  }
  s.ok = s.ok && s.vertices == s.expected_vertices;
  return s;
}

namespace detail {

// Every valid configuration of the given weight leaves some copy block empty.
inline std::pair<long, bool> pigeonhole(const ReductionInstance& r, int weight, double budget) {
  const Variant v = r.relation.target_variant;
  const double count = count_configurations(r.target.n(), weight, v.cap());
  if (count > budget) {
    throw CapabilityError("pigeonhole enumeration of " + std::to_string(count) +
                              " configurations exceeds the budget",
                          count);
  }
  long checked = 0;
  bool holds = true;
  const auto blocks = r.copy_blocks();
  for_each_configuration(r.target.n(), weight, v.cap(), [&](const std::vector<int>& c) {
    if (!validate_config(r.target, GuardConfig(c), v)) return true;
    ++checked;
    bool empty_block = false;
    for (const Block* b : blocks) {
      bool zero = true;
      for (Vertex w : b->vertices) zero = zero && c[w] == 0;
      empty_block = empty_block || zero;
    }
    holds = holds && empty_block;
    return true;
  });
  return {checked, holds};
}

inline Policy forward_policy(const ReductionInstance& r, const StaticResult& source_min) {
  const Graph& h = r.target;
  switch (r.gadget) {
    case Gadget::Bipartite: {
      std::vector<Vertex> z = source_min.witness.support();
      z.push_back(r.layout[3].vertices.front());
      return make_floating_policy(h, Kind::Domination, z);
    }
    case Gadget::SplitRoman:
      return make_floating_policy(h, Kind::Roman, source_min.witness.support());
    case Gadget::SplitItalian: {
      // A minimum Italian function of the source copied onto A need not
      // dominate the copy blocks, so use the lightest connected-support
      // Italian function of the target itself.
      auto f = static_number(h, Variant{Kind::Italian, true}, {kSolverVertexLimit});
      return make_floating_policy(h, f.witness);
    }
  }
  throw DomainError("unknown gadget");
}

}  // namespace detail

/// Builds the gadget for `g` and checks it: structure, the source parameter
/// by brute force, the target's eternal number by the exact solver (plain
/// and connected variants), a forward floating-guard run, and for split
/// gadgets the empty-block property. Solver work over budget yields a
/// partial report with structure checks only.
inline ReductionReport verify_reduction(const Graph& g, Gadget t, const ReductionOptions& opts = {}) {
  ReductionInstance r = build_reduction(g, t);
  ReductionReport rep;
  rep.gadget = t;
  rep.structure = check_structure(r);
  const Variant source_variant{r.relation.source_kind, false};
  StaticResult source_min = static_number(g, source_variant, {kSolverVertexLimit});
  rep.source_parameter = source_min.weight;
  rep.expected_value = r.relation.expected(rep.source_parameter);

  SolverOptions so;
  so.budget = opts.budget;
  try {
    Variant tv = r.relation.target_variant;
    auto plain = eternal_number(r.target, tv, rep.expected_value + 1, so);
    Variant cv{tv.kind, true};
    auto connected = eternal_number(r.target, cv, rep.expected_value + 1, so);
    rep.target_value = plain.value;
    rep.relation_holds = plain.value == rep.expected_value;
    rep.connected_value = connected.value;
    bool supports = connected.value.has_value();
    for (const auto& c : connected.witness.configs) {
      supports = supports && induces_connected(r.target, c.support_flags());
    }
    rep.connected_supports = supports;
    if (t != Gadget::Bipartite) {
      auto [checked, holds] = detail::pigeonhole(r, rep.expected_value, opts.budget);
      rep.pigeonhole_checked = checked;
      rep.pigeonhole_holds = holds;
    }
  } catch (const CapabilityError& e) {
    rep.partial = true;
    rep.partial_reason = e.what();
    rep.target_value.reset();
    rep.relation_holds.reset();
    rep.connected_value.reset();
    rep.connected_supports.reset();
    rep.pigeonhole_checked.reset();
    rep.pigeonhole_holds.reset();
    return rep;
  }

  // Forward direction: the floating strategy from a minimum source
  // solution only ever visits connected supports.
  try {
    Policy p = detail::forward_policy(r, source_min);
    rep.forward_strategy_budget = p.budget();
    auto run = simulate(r.target, p, AttackerSpec::random(opts.seed), opts.forward_rounds);
    bool connected = run.defender_survived &&
                     induces_connected(r.target, p.config().support_flags());
    for (const auto& round : run.rounds) {
      connected = connected && induces_connected(r.target, round.after.support_flags());
    }
    rep.forward_strategy_connected = connected;
  } catch (const DomainError&) {
    // The core covers every target vertex; there is no floating guard.
    rep.forward_strategy_connected.reset();
  }
  return rep;
}

}  // namespace eternal
