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
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "eternal/game.hpp"
#include "eternal/graph.hpp"

namespace eternal {

enum class PolicyKind { FloatingPlain, FloatingRoman, FloatingItalian };

inline std::string to_string(PolicyKind k) {
  switch (k) {
    case PolicyKind::FloatingPlain: return "floating-plain";
    case PolicyKind::FloatingRoman: return "floating-roman";
    case PolicyKind::FloatingItalian: return "floating-italian";
  }
  return "?";
}

/// Floating-guard defender. A fixed core (guards on a connected dominating
/// set Z, doubled for Roman, or an Italian function f with connected
/// support) stays occupied between turns; one extra guard floats. An attack
/// is answered by shifting one guard along each edge of a path from the
/// float through the core to the attacked vertex, which becomes the new float.
class Policy {
 public:
  PolicyKind kind() const noexcept { return kind_; }
  Variant variant() const noexcept {
    switch (kind_) {
      case PolicyKind::FloatingPlain: return {Kind::Domination, false};
      case PolicyKind::FloatingRoman: return {Kind::Roman, false};
      case PolicyKind::FloatingItalian: return {Kind::Italian, false};
    }
    return {};
  }

  /// Guards the core keeps occupied between turns.
  const GuardConfig& core() const noexcept { return core_; }
  Vertex float_at() const noexcept { return float_at_; }
  int budget() const { return core_.total() + 1; }

  GuardConfig config() const {
    std::vector<int> c = core_.counts();
    ++c[float_at_];
    return GuardConfig(std::move(c));
  }

  /// Answers an attack and advances the policy. Throws IllegalAttackError if
  /// the vertex holds a guard.
  DefenseMove defend(const Graph& g, Vertex attacked) {
    if (attacked < 0 || attacked >= g.n() || attacked == float_at_ || core_[attacked] > 0) {
      throw IllegalAttackError("vertex " + std::to_string(attacked) + " is guarded");
    }
    auto path = shortest_core_path(g, attacked);
    DefenseMove d;
    const GuardConfig before = config();
    std::vector<int> leaving(static_cast<std::size_t>(g.n()), 0);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      d.moves.push_back({path[i], path[i + 1]});
      ++leaving[path[i]];
    }
    for (Vertex v = 0; v < g.n(); ++v) {
      for (int i = leaving[v]; i < before[v]; ++i) d.moves.push_back({v, v});
    }
    float_at_ = attacked;
    return d;
  }

 private:
  friend Policy make_floating_policy(const Graph&, Kind, const std::vector<Vertex>&);
  friend Policy make_floating_policy(const Graph&, const GuardConfig&);

  Policy(PolicyKind kind, GuardConfig core, Vertex float_at)
      : kind_(kind), core_(std::move(core)), float_at_(float_at) {}

  // BFS from the float whose interior stays inside the core support;
  // neighbours are scanned in ascending id order.
  std::vector<Vertex> shortest_core_path(const Graph& g, Vertex target) const {
    std::vector<Vertex> parent(static_cast<std::size_t>(g.n()), -1);
    std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
    std::queue<Vertex> queue;
    queue.push(float_at_);
    seen[float_at_] = true;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (seen[w]) continue;
        if (w != target && core_[w] == 0) continue;
        seen[w] = true;
        parent[w] = u;
        if (w == target) {
          std::vector<Vertex> path{w};
          while (path.back() != float_at_) path.push_back(parent[path.back()]);
          std::reverse(path.begin(), path.end());
          return path;
        }
        queue.push(w);
      }
    }
    throw InvariantViolation("no path through the core from " + std::to_string(float_at_) +
                             " to " + std::to_string(target));
  }

  PolicyKind kind_;
  GuardConfig core_;
  Vertex float_at_;
};

namespace detail {

inline Vertex first_outside(const GuardConfig& core) {
  for (Vertex v = 0; v < core.size(); ++v) {
    if (core[v] == 0) return v;
  }
  throw DomainError("the core occupies every vertex; there is nowhere to place the floating guard");
}

}  // namespace detail

/// Plain or Roman floating policy around the connected dominating set `z`.
/// The float starts on the lowest id outside z.
inline Policy make_floating_policy(const Graph& g, Kind kind, const std::vector<Vertex>& z) {
  if (kind == Kind::Italian) {
    throw DomainError("the Italian policy takes a base function, not a vertex set");
  }
  for (Vertex v : z) {
    if (v < 0 || v >= g.n()) throw DomainError("core vertex out of range");
  }
  GuardConfig set = GuardConfig::from_support(g.n(), std::span<const Vertex>(z));
  for (int c : set.counts()) {
    if (c > 1) throw DomainError("core lists a vertex twice");
  }
  if (z.empty() || !validate_config(g, set, Variant{Kind::Domination, true})) {
    throw DomainError("core is not a connected dominating set");
  }
  std::vector<int> counts = set.counts();
  if (kind == Kind::Roman) {
    for (int& c : counts) c *= 2;
  }
  GuardConfig core(std::move(counts));
  Vertex start = detail::first_outside(core);
  return Policy(kind == Kind::Roman ? PolicyKind::FloatingRoman : PolicyKind::FloatingPlain,
                std::move(core), start);
}

/// Italian floating policy around the base function `f`, which must be an
/// Italian dominating function whose non-zero vertices induce a connected
/// subgraph.
inline Policy make_floating_policy(const Graph& g, const GuardConfig& f) {
  Variant italian{Kind::Italian, true};
  if (f.total() == 0 || !validate_config(g, f, italian)) {
    throw DomainError("base function is not an Italian dominating function with connected support");
  }
  Vertex start = detail::first_outside(f);
  return Policy(PolicyKind::FloatingItalian, f, start);
}

inline DefenseMove policy_defend(Policy& p, const Graph& g, Vertex attacked) {
  return p.defend(g, attacked);
}

// ---------------------------------------------------------------------------
// Simulation harness

struct AttackerSpec {
  enum class Mode { Script, Random, Adversarial };
  Mode mode = Mode::Script;
  std::vector<Vertex> script;
  std::uint64_t seed = 0;
  int depth = 1;

  static AttackerSpec scripted(std::vector<Vertex> s) { return {Mode::Script, std::move(s), 0, 1}; }
  static AttackerSpec random(std::uint64_t seed) { return {Mode::Random, {}, seed, 1}; }
  static AttackerSpec adversarial(int depth) { return {Mode::Adversarial, {}, 0, depth}; }
};

struct Round {
  GuardConfig before;
  Vertex attack = -1;
  /// Scripted attack on a guarded vertex: the attacker forfeits the round.
  bool skipped = false;
  DefenseMove defense;
  GuardConfig after;
  bool valid = true;
};

struct Transcript {
  std::vector<Round> rounds;
  bool defender_survived = true;
};

namespace detail {

/// Attack choice that leaves the defender the fewest valid answers, looking
/// `depth` turns ahead; ties go to the lowest vertex id.
class AdversarialChooser {
 public:
  AdversarialChooser(const Graph& g, Variant v, int depth) : g_(g), v_(v), depth_(depth) {}

  Vertex choose(const GuardConfig& c) {
    Vertex best = -1;
    long best_score = std::numeric_limits<long>::max();
    for (Vertex a : legal_attacks(g_, c)) {
      long s = score(c, a, depth_);
      if (s < best_score) {
        best_score = s;
        best = a;
      }
    }
    return best;
  }

 private:
  // Responses to attack `a` on `c` that are valid and, for depth > 1, still
  // have an answer to every further attack within depth - 1 turns.
  long score(const GuardConfig& c, Vertex a, int depth) {
    auto key = std::make_tuple(c.counts(), a, depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    long count = 0;
    for (const auto& c2 : reachable_configs(g_, c, v_.cap())) {
      if (c2[a] == 0 || !validate_config(g_, c2, v_)) continue;
      bool survives = true;
      if (depth > 1) {
        for (Vertex b : legal_attacks(g_, c2)) {
          if (score(c2, b, depth - 1) == 0) {
            survives = false;
            break;
          }
        }
      }
      if (survives) ++count;
    }
    memo_.emplace(std::move(key), count);
    return count;
  }

  const Graph& g_;
  Variant v_;
  int depth_;
  std::map<std::tuple<std::vector<int>, Vertex, int>, long> memo_;
};

}  // namespace detail

/// Plays `policy` against `attacker` for at most `rounds` rounds. The run
/// stops early when the attacker has no legal move, the script runs out, or
/// a defense leaves an invalid configuration.
inline Transcript simulate(const Graph& g, Policy policy, const AttackerSpec& attacker, int rounds) {
  Transcript t;
  std::mt19937_64 rng(attacker.seed);
  detail::AdversarialChooser adversary(g, policy.variant(), std::max(1, attacker.depth));
  const Variant variant = policy.variant();
  for (int r = 0; r < rounds; ++r) {
    GuardConfig before = policy.config();
    Vertex target = -1;
    if (attacker.mode == AttackerSpec::Mode::Script) {
      if (static_cast<std::size_t>(r) >= attacker.script.size()) break;
      target = attacker.script[r];
      if (target < 0 || target >= g.n()) {
        throw DomainError("scripted attack on unknown vertex " + std::to_string(target));
      }
      if (before[target] > 0) {
        t.rounds.push_back({before, target, true, {}, before, true});
        continue;
      }
    } else {
      auto options = legal_attacks(g, before);
      if (options.empty()) break;
      if (attacker.mode == AttackerSpec::Mode::Random) {
        target = options[rng() % options.size()];
      } else {
        target = adversary.choose(before);
      }
    }
    DefenseMove d = policy.defend(g, target);
    GuardConfig after = apply_defense(g, before, d, target, variant);
    if (after != policy.config()) throw InvariantViolation("policy state diverged from its moves");
    bool ok = validate_config(g, after, variant);
    t.rounds.push_back({std::move(before), target, false, std::move(d), std::move(after), ok});
    if (!ok) {
      t.defender_survived = false;
      break;
    }
  }
  return t;
}

}  // namespace eternal
