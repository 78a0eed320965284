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

#include <random>

#include "eternal/enumerate.hpp"
#include "eternal/graph.hpp"
#include "eternal/static_domination.hpp"
#include "graph_catalog.hpp"
#include "gtest/gtest.h"

namespace eternal {
namespace {

using testing::complete;
using testing::fig1;
using testing::path;
using testing::star;

constexpr Variant kPlain{Kind::Domination, false};
constexpr Variant kRoman{Kind::Roman, false};
constexpr Variant kItalian{Kind::Italian, false};

TEST(GraphTest, RejectsSelfLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(2, {{0, 0}}), ValidationError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), ValidationError);
  EXPECT_THROW(Graph(2, {{0, 2}}), ValidationError);
}

TEST(GraphTest, AdjacencyIsSymmetricAndSorted) {
  Graph g = fig1();
  for (Vertex v = 0; v < g.n(); ++v) {
    auto adj = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(adj.begin(), adj.end()));
    for (Vertex u : adj) EXPECT_TRUE(g.adjacent(u, v));
  }
  EXPECT_EQ(g.edge_count(), 6);
}

TEST(ValidateConfigTest, PathOfThree) {
  Graph p3 = path(3);
  EXPECT_TRUE(validate_config(p3, GuardConfig::from_support(3, {1}), kPlain));
  EXPECT_FALSE(validate_config(p3, GuardConfig::from_support(3, {0}), kPlain));
}

TEST(ValidateConfigTest, FigureOneBlackVertices) {
  // Black vertices v2 and v4.
  EXPECT_TRUE(validate_config(fig1(), GuardConfig::from_support(5, {1, 3}), kPlain));
}

TEST(ValidateConfigTest, ItalianOppositeOnesOnC4) {
  Graph c4 = testing::cycle(4);
  GuardConfig f(std::vector<int>{1, 0, 1, 0});
  EXPECT_TRUE(validate_config(c4, f, kItalian));
  EXPECT_FALSE(validate_config(c4, f, kRoman));
}

TEST(ValidateConfigTest, MalformedIsAnErrorNotFalse) {
  Graph p3 = path(3);
  EXPECT_THROW(validate_config(p3, GuardConfig(std::vector<int>{3, 0, 0}), kRoman),
               ValidationError);
  EXPECT_THROW(validate_config(p3, GuardConfig(std::vector<int>{1, 0}), kPlain), ValidationError);
  // Plain games allow stacking.
  EXPECT_TRUE(validate_config(p3, GuardConfig(std::vector<int>{0, 3, 0}), kPlain));
}

TEST(ValidateConfigTest, ConnectedFlagChecksSupport) {
  Graph p4 = path(4);
  Variant cplain{Kind::Domination, true};
  EXPECT_TRUE(validate_config(p4, GuardConfig::from_support(4, {0, 3}), kPlain));
  EXPECT_FALSE(validate_config(p4, GuardConfig::from_support(4, {0, 3}), cplain));
  EXPECT_TRUE(validate_config(p4, GuardConfig::from_support(4, {1, 2}), cplain));
}

TEST(StaticNumberTest, KnownValues) {
  EXPECT_EQ(static_number(fig1(), kPlain).weight, 2);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(static_number(complete(n), kPlain).weight, 1);
  EXPECT_EQ(static_number(path(2), kItalian).weight, 2);
  // Tuple order reaches (2,0) before (1,1); both weigh 2.
  EXPECT_EQ(static_number(path(2), kItalian).witness, GuardConfig(std::vector<int>{2, 0}));
  EXPECT_TRUE(validate_config(path(2), GuardConfig(std::vector<int>{1, 1}), kItalian));
}

TEST(StaticNumberTest, WitnessIsLexicographicallyFirst) {
  // N[0] = {0,1,3,4} and N[1] = {0,1,2}, so the very first pair dominates.
  auto r = static_number(fig1(), kPlain);
  EXPECT_EQ(r.witness.support(), (std::vector<Vertex>{0, 1}));
}

TEST(StaticNumberTest, SizeLimits) {
  EXPECT_THROW(static_number(path(21), kPlain), CapabilityError);
  EXPECT_THROW(static_number(path(17), kRoman), CapabilityError);
  EXPECT_NO_THROW(static_number(path(17), kRoman, {17}));
  EXPECT_EQ(static_number(path(20), kPlain).weight, 7);
}

TEST(MinConnectedDominatingSetTest, Examples) {
  EXPECT_EQ(min_connected_dominating_set(path(4)), (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(min_connected_dominating_set(complete(3)), (std::vector<Vertex>{0}));
  EXPECT_EQ(min_connected_dominating_set(star(4)), (std::vector<Vertex>{0}));
  EXPECT_THROW(min_connected_dominating_set(Graph(2, {})), DomainError);
}

TEST(EnumerateTest, CountsMatchClosedForms) {
  // Multisets: C(n+k-1, k); sets: C(n, k).
  EXPECT_DOUBLE_EQ(count_configurations(4, 2, -1), 10.0);
  EXPECT_DOUBLE_EQ(count_configurations(17, 4, 1), 2380.0);
  EXPECT_DOUBLE_EQ(count_configurations(3, 3, 2), 7.0);
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= 6; ++k) {
      for (int cap : {-1, 1, 2}) {
        int visited = 0;
        std::vector<int> prev;
        for_each_configuration(n, k, cap, [&](const std::vector<int>& c) {
          int sum = 0;
          for (int x : c) {
            sum += x;
            if (cap >= 0) {
              EXPECT_LE(x, cap);
            }
          }
          EXPECT_EQ(sum, k);
          // Guard-tuple order is reverse lexicographic on count vectors.
          if (!prev.empty()) {
            EXPECT_GT(prev, c);
          }
          prev = c;
          ++visited;
          return true;
        });
        EXPECT_DOUBLE_EQ(visited, count_configurations(n, k, cap)) << n << " " << k << " " << cap;
      }
    }
  }
}

// static_number agrees with an independent full enumeration, and no lighter
// configuration is valid.
TEST(StaticNumberProperty, MatchesFullEnumeration) {
  std::mt19937_64 rng(2024);
  std::vector<Graph> graphs;
  for (const auto& named : testing::small_catalog()) graphs.push_back(named.graph);
  for (int i = 0; i < 40; ++i) {
    int n = 1 + static_cast<int>(rng() % 8);
    graphs.push_back(testing::random_connected(n, 0.25, rng));
  }
  graphs.emplace_back(5, std::vector<Edge>{{0, 1}, {2, 3}});  // disconnected
  for (const Graph& g : graphs) {
    for (Kind kind : {Kind::Domination, Kind::Roman, Kind::Italian}) {
      for (bool connected : {false, true}) {
        Variant v{kind, connected};
        if (connected && !is_connected(g)) {
          EXPECT_THROW(static_number(g, v), DomainError);
          continue;
        }
        auto r = static_number(g, v);
        EXPECT_TRUE(validate_config(g, r.witness, v));
        EXPECT_TRUE(testing::oracle_valid(g, r.witness.counts(), v));
        EXPECT_EQ(r.weight, r.witness.total());
        EXPECT_EQ(r.weight, testing::oracle_static_number(g, v)) << to_string(v);
      }
    }
  }
}

TEST(ValidateConfigProperty, AgreesWithOracleAndIsMonotone) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    Graph g = testing::random_connected(n, 0.3, rng);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> f(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) f[v] = (mask >> v) & 1U;
      bool valid = validate_config(g, GuardConfig(f), kPlain);
      EXPECT_EQ(valid, testing::oracle_dominating(g, f));
      if (valid) {
        for (int v = 0; v < n; ++v) {
          auto sup = f;
          sup[v] = 1;
          EXPECT_TRUE(validate_config(g, GuardConfig(sup), kPlain));
        }
      }
    }
  }
}

}  // namespace
}  // namespace eternal
