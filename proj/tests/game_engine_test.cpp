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

#include <functional>
#include <random>
#include <set>

#include "eternal/enumerate.hpp"
#include "eternal/game.hpp"
#include "graph_catalog.hpp"
#include "gtest/gtest.h"

namespace eternal {
namespace {

using testing::complete;
using testing::cycle;
using testing::fig1;
using testing::path;

GuardConfig counts(std::vector<int> c) { return GuardConfig(std::move(c)); }

TEST(LegalAttacksTest, Examples) {
  EXPECT_EQ(legal_attacks(complete(3), GuardConfig::from_support(3, {0})),
            (std::vector<Vertex>{1, 2}));
  EXPECT_TRUE(legal_attacks(path(3), counts({1, 1, 1})).empty());
  // Black vertices v2, v4 leave v1, v3, v5 open.
  EXPECT_EQ(legal_attacks(fig1(), GuardConfig::from_support(5, {1, 3})),
            (std::vector<Vertex>{0, 2, 4}));
}

TEST(TransitionFeasibleTest, Examples) {
  EXPECT_TRUE(transition_feasible(cycle(4), GuardConfig::from_support(4, {0, 1}),
                                  GuardConfig::from_support(4, {0, 2}), 2));
  EXPECT_FALSE(transition_feasible(path(3), GuardConfig::from_support(3, {1}),
                                   GuardConfig::from_support(3, {2}), 0));
  EXPECT_TRUE(transition_feasible(path(4), GuardConfig::from_support(4, {0, 3}),
                                  GuardConfig::from_support(4, {1, 2}), 1));
}

TEST(TransitionFeasibleTest, Errors) {
  EXPECT_THROW(transition_feasible(path(3), GuardConfig::from_support(3, {1}),
                                   GuardConfig::from_support(3, {0, 2}), 0),
               DomainError);
  EXPECT_THROW(transition_feasible(path(3), GuardConfig::from_support(3, {1}),
                                   GuardConfig::from_support(3, {1}), 1),
               DomainError);
}

TEST(ApplyDefenseTest, Examples) {
  Graph k3 = complete(3);
  EXPECT_EQ(apply_defense(k3, GuardConfig::from_support(3, {0}), {{{0, 1}}}, 1),
            GuardConfig::from_support(3, {1}));
  // A legal move; whether {a} dominates is a separate question.
  EXPECT_EQ(apply_defense(path(3), GuardConfig::from_support(3, {1}), {{{1, 0}}}, 0),
            GuardConfig::from_support(3, {0}));
  Variant roman{Kind::Roman, false};
  EXPECT_EQ(apply_defense(k3, counts({2, 0, 0}), {{{0, 1}, {0, 1}}}, 1, roman),
            counts({0, 2, 0}));
}

TEST(ApplyDefenseTest, Rejections) {
  Graph p3 = path(3);
  try {
    apply_defense(p3, GuardConfig::from_support(3, {0}), {{{0, 2}}}, 2);
    FAIL() << "non-edge accepted";
  } catch (const IllegalMoveError& e) {
    EXPECT_EQ(e.offending(), std::make_pair(0, 2));
  }
  // Source multiset mismatch.
  EXPECT_THROW(apply_defense(p3, GuardConfig::from_support(3, {0}), {{{1, 2}}}, 2),
               IllegalMoveError);
  // Attacked vertex left uncovered.
  EXPECT_THROW(apply_defense(p3, GuardConfig::from_support(3, {1}), {{{1, 1}}}, 0),
               IllegalMoveError);
  // Three guards on one vertex under Roman rules.
  Variant roman{Kind::Roman, false};
  try {
    apply_defense(p3, counts({2, 2, 0}), {{{0, 1}, {0, 1}, {1, 1}, {1, 2}}}, 2, roman);
    FAIL() << "cap violation accepted";
  } catch (const IllegalMoveError& e) {
    EXPECT_EQ(e.offending().second, 1);
  }
}

TEST(ReachableConfigsTest, SingleGuardOnPath) {
  auto out = reachable_configs(path(3), GuardConfig::from_support(3, {1}));
  ASSERT_EQ(out.size(), 3U);
}

// Independent enumeration of all defense moves: every guard unit picks a
// destination in its closed neighbourhood.
void for_each_move(const Graph& g, const GuardConfig& c,
                   const std::function<void(const DefenseMove&)>& visit) {
  std::vector<Vertex> units;
  for (Vertex v = 0; v < g.n(); ++v) {
    for (int i = 0; i < c[v]; ++i) units.push_back(v);
  }
  DefenseMove d;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == units.size()) {
      visit(d);
      return;
    }
    Vertex u = units[i];
    d.moves.push_back({u, u});
    rec(i + 1);
    d.moves.pop_back();
    for (Vertex w : g.neighbors(u)) {
      d.moves.push_back({u, w});
      rec(i + 1);
      d.moves.pop_back();
    }
  };
  rec(0);
}

// transition_feasible(c, c2, v) holds exactly when some DefenseMove takes c
// to c2 through apply_defense.
TEST(TransitionFeasibleProperty, MatchesExhaustiveMoves) {
  std::vector<Graph> graphs;
  for (int n = 1; n <= 4; ++n) {
    for (auto& g : testing::all_connected_unlabelled(n)) graphs.push_back(std::move(g));
  }
  graphs.push_back(cycle(5));
  graphs.push_back(testing::star(4));
  graphs.push_back(fig1());
  int checked = 0;
  for (const Graph& g : graphs) {
    for (int k = 1; k <= 3; ++k) {
      std::vector<GuardConfig> all;
      for_each_configuration(g.n(), k, -1, [&](const std::vector<int>& c) {
        all.emplace_back(c);
        return true;
      });
      for (const auto& c : all) {
        for (Vertex a : legal_attacks(g, c)) {
          std::set<std::vector<int>> reached;
          for_each_move(g, c, [&](const DefenseMove& d) {
            try {
              reached.insert(apply_defense(g, c, d, a).counts());
            } catch (const IllegalMoveError&) {
            }
          });
          for (const auto& c2 : all) {
            EXPECT_EQ(transition_feasible(g, c, c2, a), reached.count(c2.counts()) == 1)
                << c << " -> " << c2 << " attacked " << a;
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 10000);
}

TEST(CanRouteProperty, SymmetricWithoutAttackCondition) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph g = testing::random_connected(n, 0.2, rng);
    std::vector<GuardConfig> all;
    for_each_configuration(n, 3, -1, [&](const std::vector<int>& c) {
      all.emplace_back(c);
      return true;
    });
    for (const auto& a : all) {
      for (const auto& b : all) EXPECT_EQ(can_route(g, a, b), can_route(g, b, a));
    }
  }
}

TEST(RouteGuardsTest, ProducesALegalMove) {
  Graph p4 = path(4);
  auto d = route_guards(p4, GuardConfig::from_support(4, {0, 3}), GuardConfig::from_support(4, {1, 2}));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(apply_defense(p4, GuardConfig::from_support(4, {0, 3}), *d, 1),
            GuardConfig::from_support(4, {1, 2}));
  EXPECT_EQ(d->moving(), (std::vector<GuardMove>{{0, 1}, {3, 2}}));
}

}  // namespace
}  // namespace eternal
