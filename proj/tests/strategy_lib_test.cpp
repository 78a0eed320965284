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

#include <bit>
#include <random>

#include "eternal/static_domination.hpp"
#include "eternal/strategy.hpp"
#include "graph_catalog.hpp"
#include "gtest/gtest.h"

namespace eternal {
namespace {

using testing::complete;
using testing::path;
using testing::star;

constexpr Vertex a = 0, b = 1, c = 2, d = 3;

GuardConfig counts(std::vector<int> v) { return GuardConfig(std::move(v)); }

TEST(MakeFloatingPolicyTest, InitialConfigurations) {
  Graph p4 = path(4);
  auto plain = make_floating_policy(p4, Kind::Domination, {b, c});
  EXPECT_EQ(plain.config(), GuardConfig::from_support(4, {a, b, c}));
  EXPECT_EQ(plain.budget(), 3);
  EXPECT_EQ(plain.float_at(), a);

  auto roman = make_floating_policy(p4, Kind::Roman, {b, c});
  EXPECT_EQ(roman.config(), counts({1, 2, 2, 0}));
  EXPECT_EQ(roman.budget(), 5);

  auto italian = make_floating_policy(complete(3), counts({2, 0, 0}));
  EXPECT_EQ(italian.config(), counts({2, 1, 0}));
  EXPECT_EQ(italian.budget(), 3);
}

TEST(MakeFloatingPolicyTest, RejectsBadCores) {
  Graph p4 = path(4);
  EXPECT_THROW(make_floating_policy(p4, Kind::Domination, {a, d}), DomainError);  // not connected
  EXPECT_THROW(make_floating_policy(p4, Kind::Domination, {b}), DomainError);     // misses d
  EXPECT_THROW(make_floating_policy(p4, Kind::Domination, {}), DomainError);
  EXPECT_THROW(make_floating_policy(p4, Kind::Italian, {b, c}), DomainError);
  EXPECT_THROW(make_floating_policy(p4, counts({1, 0, 0, 1})), DomainError);
  // Core covers everything: nowhere for the float.
  EXPECT_THROW(make_floating_policy(path(2), Kind::Domination, {0, 1}), DomainError);
}

TEST(PolicyDefendTest, ChainShiftAlongPath) {
  Graph p4 = path(4);
  auto p = make_floating_policy(p4, Kind::Domination, {b, c});
  auto before = p.config();
  auto move = policy_defend(p, p4, d);
  EXPECT_EQ(move.moving(), (std::vector<GuardMove>{{a, b}, {b, c}, {c, d}}));
  EXPECT_EQ(apply_defense(p4, before, move, d), GuardConfig::from_support(4, {b, c, d}));
  EXPECT_EQ(p.float_at(), d);
}

TEST(PolicyDefendTest, TriangleThroughCentre) {
  Graph k3 = complete(3);
  auto p = make_floating_policy(k3, Kind::Domination, {1});
  ASSERT_EQ(p.float_at(), 0);
  auto move = policy_defend(p, k3, 2);
  // Shortest float-to-target path is the direct edge.
  EXPECT_EQ(move.moving(), (std::vector<GuardMove>{{0, 2}}));
  EXPECT_EQ(p.config(), GuardConfig::from_support(3, {1, 2}));
}

TEST(PolicyDefendTest, PathOfThreeRoutesThroughCore) {
  // On P3 with Z = {1} and the float on 0, attacking 2 needs the chain 0-1-2.
  Graph p3 = path(3);
  auto p = make_floating_policy(p3, Kind::Domination, {1});
  auto before = p.config();
  auto move = policy_defend(p, p3, 2);
  EXPECT_EQ(move.moving(), (std::vector<GuardMove>{{0, 1}, {1, 2}}));
  EXPECT_EQ(apply_defense(p3, before, move, 2), GuardConfig::from_support(3, {1, 2}));
}

TEST(PolicyDefendTest, RomanShiftsOneGuardPerEdge) {
  Graph p4 = path(4);
  Variant roman{Kind::Roman, false};
  auto p = make_floating_policy(p4, Kind::Roman, {b, c});
  auto before = p.config();
  auto move = policy_defend(p, p4, d);
  auto after = apply_defense(p4, before, move, d, roman);
  EXPECT_EQ(after, counts({0, 2, 2, 1}));
  EXPECT_TRUE(validate_config(p4, after, roman));
}

TEST(PolicyDefendTest, GuardedVertexIsIllegal) {
  Graph p4 = path(4);
  auto p = make_floating_policy(p4, Kind::Domination, {b, c});
  EXPECT_THROW(policy_defend(p, p4, a), IllegalAttackError);
  EXPECT_THROW(policy_defend(p, p4, b), IllegalAttackError);
}

TEST(SimulateTest, ScriptedRun) {
  Graph p4 = path(4);
  auto p = make_floating_policy(p4, Kind::Domination, {b, c});
  auto t = simulate(p4, p, AttackerSpec::scripted({d, a, d}), 3);
  ASSERT_EQ(t.rounds.size(), 3U);
  EXPECT_TRUE(t.defender_survived);
  for (const auto& r : t.rounds) {
    EXPECT_TRUE(r.valid);
    EXPECT_FALSE(r.skipped);
    EXPECT_EQ(apply_defense(p4, r.before, r.defense, r.attack), r.after);
  }
  EXPECT_EQ(t.rounds.back().after, GuardConfig::from_support(4, {b, c, d}));
}

TEST(SimulateTest, EmptyScriptAndForfeits) {
  Graph p4 = path(4);
  auto p = make_floating_policy(p4, Kind::Domination, {b, c});
  auto empty = simulate(p4, p, AttackerSpec::scripted({}), 10);
  EXPECT_TRUE(empty.rounds.empty());
  EXPECT_TRUE(empty.defender_survived);

  auto t = simulate(p4, p, AttackerSpec::scripted({b, d}), 5);
  ASSERT_EQ(t.rounds.size(), 2U);
  EXPECT_TRUE(t.rounds[0].skipped);
  EXPECT_EQ(t.rounds[0].after, t.rounds[0].before);
  EXPECT_FALSE(t.rounds[1].skipped);
  EXPECT_TRUE(t.defender_survived);
}

TEST(SimulateTest, StarRandomEndurance) {
  Graph s = star(5);
  auto p = make_floating_policy(s, Kind::Domination, {0});
  auto t = simulate(s, p, AttackerSpec::random(1), 500);
  EXPECT_EQ(t.rounds.size(), 500U);
  EXPECT_TRUE(t.defender_survived);
}

TEST(SimulateTest, RandomIsReproducible) {
  Graph g = testing::fig1();
  auto p = make_floating_policy(g, Kind::Roman, {0, 1});
  auto t1 = simulate(g, p, AttackerSpec::random(42), 50);
  auto t2 = simulate(g, p, AttackerSpec::random(42), 50);
  ASSERT_EQ(t1.rounds.size(), t2.rounds.size());
  for (std::size_t i = 0; i < t1.rounds.size(); ++i) {
    EXPECT_EQ(t1.rounds[i].attack, t2.rounds[i].attack);
    EXPECT_EQ(t1.rounds[i].after, t2.rounds[i].after);
  }
}

TEST(SimulateTest, AdversarialAttackerPicksFewestAnswers) {
  Graph p4 = path(4);
  auto p = make_floating_policy(p4, Kind::Domination, {b, c});
  // From {a,b,c} only d is open.
  auto t = simulate(p4, p, AttackerSpec::adversarial(2), 6);
  ASSERT_EQ(t.rounds.size(), 6U);
  EXPECT_EQ(t.rounds[0].attack, d);
  EXPECT_TRUE(t.defender_survived);
}

// Brute-force list of all minimum connected dominating sets (n <= 10).
std::vector<std::vector<Vertex>> all_min_cds(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<Vertex>> best;
  int best_size = n + 1;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    int size = std::popcount(mask);
    if (size > best_size) continue;
    std::vector<int> f(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) f[v] = (mask >> v) & 1U;
    if (!testing::oracle_dominating(g, f) || !testing::oracle_connected_support(g, f)) continue;
    if (size < best_size) {
      best_size = size;
      best.clear();
    }
    std::vector<Vertex> z;
    for (int v = 0; v < n; ++v) {
      if (f[v]) z.push_back(v);
    }
    best.push_back(z);
  }
  return best;
}

void replay_all(const Graph& g, std::uint64_t seed, int& runs) {
  for (const auto& z : all_min_cds(g)) {
    if (static_cast<int>(z.size()) == g.n()) continue;
    for (Kind kind : {Kind::Domination, Kind::Roman}) {
      auto p = make_floating_policy(g, kind, z);
      EXPECT_EQ(p.budget(), (kind == Kind::Roman ? 2 : 1) * static_cast<int>(z.size()) + 1);
      auto t = simulate(g, p, AttackerSpec::random(seed), 500);
      EXPECT_TRUE(t.defender_survived);
      for (const auto& r : t.rounds) {
        // Interior path vertices lie in Z; every moving guard starts at the
        // float or in Z.
        for (const auto& m : r.defense.moving()) {
          bool from_core = std::find(z.begin(), z.end(), m.from) != z.end();
          EXPECT_TRUE(from_core || r.before[m.from] == 1);
          bool to_core = std::find(z.begin(), z.end(), m.to) != z.end();
          EXPECT_TRUE(to_core || m.to == r.attack);
        }
      }
      ++runs;
    }
  }
}

// The floating policy never fails validation, for every minimum connected
// dominating set: exhaustively for n <= 6, on random graphs for 7 <= n <= 10.
TEST(FloatingPolicyProperty, ReplayNeverFails) {
  int runs = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : testing::all_connected_unlabelled(n)) replay_all(g, 5, runs);
  }
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    int n = 7 + static_cast<int>(rng() % 4);
    replay_all(testing::random_connected(n, 0.2, rng), rng(), runs);
  }
  EXPECT_GT(runs, 200);
}

// Italian policy around every minimum-weight f with connected support.
TEST(FloatingPolicyProperty, ItalianReplay) {
  std::mt19937_64 rng(23);
  Variant ci{Kind::Italian, true};
  for (int i = 0; i < 40; ++i) {
    int n = 3 + static_cast<int>(rng() % 5);
    Graph g = testing::random_connected(n, 0.25, rng);
    auto f = static_number(g, ci).witness;
    if (f.support().size() == static_cast<std::size_t>(n)) continue;
    auto p = make_floating_policy(g, f);
    EXPECT_EQ(p.budget(), f.total() + 1);
    auto t = simulate(g, p, AttackerSpec::random(i), 300);
    EXPECT_TRUE(t.defender_survived);
  }
}

}  // namespace
}  // namespace eternal
