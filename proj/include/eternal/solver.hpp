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
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eternal/enumerate.hpp"
#include "eternal/game.hpp"
#include "eternal/graph.hpp"
#include "eternal/static_domination.hpp"

namespace eternal {

inline constexpr double kDefaultConfigBudget = 2e6;
inline constexpr double kDefaultOracleCap = 2e4;
inline constexpr int kSolverVertexLimit = 64;

struct SolverOptions {
  /// Maximum number of weight-k configurations the solver may enumerate.
  double budget = kDefaultConfigBudget;
  /// Plain game only: allow several guards on one vertex. Roman and Italian
  /// games always cap a vertex at two.
  bool stacking = true;
};

/// Surviving configurations of the elimination for one (graph, variant, k).
struct SafeFamily {
  Variant variant;
  int k = 0;
  std::vector<GuardConfig> configs;
  bool defender_win = false;
  /// Valid configurations of weight k before elimination.
  std::size_t universe = 0;
  /// Elimination rounds that deleted something.
  int rounds = 0;
};

/// Per-vertex cap for configurations of `v` under `opts`; -1 is unbounded.
inline int config_cap(const Variant& v, const SolverOptions& opts) {
  if (v.kind != Kind::Domination) return 2;
  return opts.stacking ? -1 : 1;
}

namespace detail {

/// Checks whether one configuration's guards can be routed onto another's.
/// Reuses buffers across calls; configurations are raw count rows.
class Router {
 public:
  explicit Router(const Graph& g) : n_(g.n()) {
    closed_.reserve(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) closed_.push_back(g.closed_mask(v));
  }

  std::uint64_t closed(Vertex v) const { return closed_[v]; }

  std::uint64_t closed_of(std::uint64_t mask) const {
    std::uint64_t out = 0;
    while (mask) {
      int v = __builtin_ctzll(mask);
      out |= closed_[v];
      mask &= mask - 1;
    }
    return out;
  }

  bool routable(const std::uint8_t* a, const std::uint8_t* b) {
    left_.clear();
    right_.clear();
    for (int v = 0; v < n_; ++v) {
      left_.insert(left_.end(), a[v], v);
      right_.insert(right_.end(), b[v], v);
    }
    const int k = static_cast<int>(left_.size());
    if (static_cast<int>(right_.size()) != k) return false;
    match_right_.assign(static_cast<std::size_t>(k), -1);
    stamp_.assign(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
      ++round_;
      if (!augment(i)) return false;
    }
    return true;
  }

 private:
  bool augment(int i) {
    std::uint64_t reach = closed_[left_[i]];
    for (int j = 0; j < static_cast<int>(right_.size()); ++j) {
      if (!((reach >> right_[j]) & 1U) || stamp_[j] == round_) continue;
      stamp_[j] = round_;
      if (match_right_[j] < 0 || augment(match_right_[j])) {
        match_right_[j] = i;
        return true;
      }
    }
    return false;
  }

  int n_;
  std::vector<std::uint64_t> closed_;
  std::vector<int> left_, right_, match_right_, stamp_;
  int round_ = 0;
};

inline void check_solver_size(const Graph& g, int k, const Variant& v, int cap, double budget) {
  if (g.n() > kSolverVertexLimit) {
    throw CapabilityError("solver supports at most 64 vertices", static_cast<double>(g.n()));
  }
  double estimate = count_configurations(g.n(), k, cap);
  if (estimate > budget) {
    throw CapabilityError("k=" + std::to_string(k) + " " + to_string(v) + " on " +
                              std::to_string(g.n()) + " vertices needs " +
                              std::to_string(static_cast<long long>(estimate)) +
                              " configurations; budget is " +
                              std::to_string(static_cast<long long>(budget)),
                          estimate);
  }
}

}  // namespace detail

/// Greatest fixed point of "valid and every attack has a feasible answer
/// inside the family". Elimination is round-synchronous: round i deletes
/// against the family left by round i-1.
inline SafeFamily safe_family(const Graph& g, const Variant& v, int k,
                              const SolverOptions& opts = {}) {
  if (k < 1) throw DomainError("guard budget must be at least 1");
  const int cap = config_cap(v, opts);
  detail::check_solver_size(g, k, v, cap, opts.budget);
  const int n = g.n();

  std::vector<std::uint8_t> rows;  // F x n counts
  std::vector<std::uint64_t> support;
  for_each_configuration(n, k, cap, [&](const std::vector<int>& counts) {
    if (validate_config(g, GuardConfig(counts), v)) {
      std::uint64_t mask = 0;
      for (int u = 0; u < n; ++u) {
        rows.push_back(static_cast<std::uint8_t>(counts[u]));
        if (counts[u] > 0) mask |= std::uint64_t{1} << u;
      }
      support.push_back(mask);
    }
    return true;
  });
  const std::size_t family_size = support.size();
  auto row = [&](std::size_t i) { return rows.data() + i * static_cast<std::size_t>(n); };

  detail::Router router(g);
  std::vector<std::uint64_t> reach(family_size);
  for (std::size_t i = 0; i < family_size; ++i) reach[i] = router.closed_of(support[i]);

  // One witness cursor per (config, attacked vertex). Cursors only move
  // forward: anything skipped is infeasible or already deleted, and both
  // facts are permanent.
  std::vector<std::size_t> attack_begin(family_size + 1, 0);
  std::vector<Vertex> attack_vertex;
  for (std::size_t i = 0; i < family_size; ++i) {
    attack_begin[i] = attack_vertex.size();
    for (int u = 0; u < n; ++u) {
      if (row(i)[u] == 0) attack_vertex.push_back(u);
    }
  }
  attack_begin[family_size] = attack_vertex.size();
  std::vector<std::size_t> cursor(attack_vertex.size(), 0);

  std::unordered_map<std::uint64_t, bool> memo;
  auto feasible = [&](std::size_t i, std::size_t j) {
    // Every guard must end next to where it started, in both directions.
    if ((support[j] & ~reach[i]) != 0 || (support[i] & ~reach[j]) != 0) return false;
    std::uint64_t key = (static_cast<std::uint64_t>(std::min(i, j)) << 32) | std::max(i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = router.routable(row(i), row(j));
    memo.emplace(key, ok);
    return ok;
  };

  std::vector<char> alive(family_size, 1);
  SafeFamily out{v, k, {}, false, family_size, 0};
  std::vector<std::size_t> doomed;
  while (true) {
    doomed.clear();
    for (std::size_t i = 0; i < family_size; ++i) {
      if (!alive[i]) continue;
      for (std::size_t a = attack_begin[i]; a < attack_begin[i + 1]; ++a) {
        const Vertex target = attack_vertex[a];
        std::size_t j = cursor[a];
        while (j < family_size && !(alive[j] && row(j)[target] > 0 && feasible(i, j))) ++j;
        cursor[a] = j;
        if (j == family_size) {
          doomed.push_back(i);
          break;
        }
      }
    }
    if (doomed.empty()) break;
    for (std::size_t i : doomed) alive[i] = 0;
    ++out.rounds;
  }

  for (std::size_t i = 0; i < family_size; ++i) {
    if (!alive[i]) continue;
    out.configs.emplace_back(std::vector<int>(row(i), row(i) + n));
  }
  out.defender_win = !out.configs.empty();
  return out;
}

/// Re-checks the two SafeFamily invariants directly: every member is valid,
/// and every legal attack on a member has a feasible answer in the family.
inline bool check_closure(const Graph& g, const SafeFamily& fam) {
  for (const auto& c : fam.configs) {
    if (!validate_config(g, c, fam.variant)) return false;
    for (Vertex a : legal_attacks(g, c)) {
      bool answered = false;
      for (const auto& c2 : fam.configs) {
        if (transition_feasible(g, c, c2, a)) {
          answered = true;
          break;
        }
      }
      if (!answered) return false;
    }
  }
  return true;
}

struct KOutcome {
  enum class Status { Win, Loss, OverBudget };
  int k = 0;
  Status status = Status::Loss;
  std::size_t universe = 0;
  std::size_t family = 0;
};

inline std::string to_string(KOutcome::Status s) {
  switch (s) {
    case KOutcome::Status::Win: return "win";
    case KOutcome::Status::Loss: return "loss";
    case KOutcome::Status::OverBudget: return "over-budget";
  }
  return "?";
}

struct EternalResult {
  /// Smallest winning k, or empty when nothing up to k_max wins.
  std::optional<int> value;
  int lower_bound = 0;
  int k_max = 0;
  SafeFamily witness;
  std::vector<KOutcome> scanned;
  /// Connected variants only: some k above the minimum was observed losing.
  bool non_monotone = false;

  bool bounded_failure() const noexcept { return !value.has_value(); }
};

/// Eternal number of `v` on the connected graph `g`, searching k <= k_max.
/// Plain, Roman and Italian games stop at the first win above the static
/// number; connected variants evaluate every k in range because winning is
/// not known to be monotone in k there.
inline EternalResult eternal_number(const Graph& g, const Variant& v, int k_max,
                                    const SolverOptions& opts = {}) {
  if (g.n() == 0 || !is_connected(g)) throw DomainError("eternal number needs a connected graph");
  EternalResult out;
  out.k_max = k_max;
  out.lower_bound = static_number(g, v, {kSolverVertexLimit}).weight;
  const int cap = config_cap(v, opts);
  for (int k = out.lower_bound; k <= k_max; ++k) {
    if (cap > 0 && k > cap * g.n()) break;  // no configurations of this weight
    SafeFamily fam;
    try {
      fam = safe_family(g, v, k, opts);
    } catch (const CapabilityError&) {
      if (!v.connected || !out.value) throw;
      out.scanned.push_back({k, KOutcome::Status::OverBudget, 0, 0});
      break;
    }
    out.scanned.push_back({k, fam.defender_win ? KOutcome::Status::Win : KOutcome::Status::Loss,
                           fam.universe, fam.configs.size()});
    if (fam.defender_win && !out.value) {
      out.value = k;
      out.witness = std::move(fam);
      if (!v.connected) break;
    } else if (!fam.defender_win && out.value) {
      out.non_monotone = true;
    }
  }
  return out;
}

struct OracleOptions {
  /// Largest configuration universe the oracle accepts.
  double cap = kDefaultOracleCap;
  bool stacking = true;
};

/// Independent defender-win decision for tiny instances. Starts from every
/// valid configuration as a candidate winner and recomputes the whole
/// candidate set from scratch until it stops changing; moves are generated
/// by enumerating each guard's destination rather than by matching.
inline bool oracle_minimax(const Graph& g, const Variant& v, int k, const OracleOptions& opts = {}) {
  if (k < 1) throw DomainError("guard budget must be at least 1");
  const int cap = config_cap(v, SolverOptions{opts.cap, opts.stacking});
  const double universe = count_configurations(g.n(), k, cap);
  if (universe > opts.cap) {
    throw CapabilityError("oracle universe of " + std::to_string(universe) +
                              " configurations exceeds its cap",
                          universe);
  }
  std::map<std::vector<int>, bool> winning;  // config -> still a candidate
  for_each_configuration(g.n(), k, cap, [&](const std::vector<int>& counts) {
    winning[counts] = validate_config(g, GuardConfig(counts), v);
    return true;
  });
  std::map<std::vector<int>, std::vector<GuardConfig>> moves;
  for (const auto& [counts, ok] : winning) {
    if (ok) moves[counts] = reachable_configs(g, GuardConfig(counts), cap);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::vector<int>, bool> next = winning;
    for (const auto& [counts, ok] : winning) {
      if (!ok) continue;
      for (Vertex a = 0; a < g.n(); ++a) {
        if (counts[a] != 0) continue;
        bool answered = false;
        for (const auto& c2 : moves[counts]) {
          if (c2[a] > 0 && winning.at(c2.counts())) {
            answered = true;
            break;
          }
        }
        if (!answered) {
          next[counts] = false;
          changed = true;
          break;
        }
      }
    }
    winning = std::move(next);
  }
  for (const auto& [counts, ok] : winning) {
    if (ok) return true;
  }
  return false;
}

}  // namespace eternal
