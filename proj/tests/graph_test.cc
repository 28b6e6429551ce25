// Copyright 2026 The lrmclust Authors
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

#include "lrmclust/graph.h"

#include <map>
#include <vector>

#include "gtest/gtest.h"
#include "lrmclust/random.h"
#include "oracles.h"

namespace lrmclust {
namespace {

Graph Triangle() {
  return *Graph::FromEdges(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
}

void ExpectSymmetric(const Graph& g) {
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (!g.is_alive(v)) {
      EXPECT_TRUE(g.neighbors(v).empty());
      continue;
    }
    for (const auto& [k, w] : g.neighbors(v)) {
      ASSERT_TRUE(g.is_alive(k));
      EXPECT_NE(k, v);
      EXPECT_EQ(g.EdgeWeight(k, v), w) << v << " -> " << k;
    }
  }
}

Weight DegreeSum(const Graph& g) {
  Weight sum = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (g.is_alive(v)) sum += g.degree(v);
  }
  return sum;
}

TEST(GraphBuildTest, Triangle) {
  Graph g = Triangle();
  EXPECT_EQ(g.num_nodes(), 3u);
  EXPECT_EQ(g.volume(), 6);
  EXPECT_EQ(g.num_edges(), 3);
  for (NodeId v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2);
  ExpectSymmetric(g);
}

TEST(GraphBuildTest, Empty) {
  auto g = Graph::FromLabeledEdges({});
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g->num_nodes(), 0u);
  EXPECT_EQ(g->volume(), 0);
}

TEST(GraphBuildTest, DuplicateEdgesSumWeights) {
  auto g = Graph::FromLabeledEdges({{"a", "b", 1, 1}, {"b", "a", 1, 2}});
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g->num_nodes(), 2u);
  EXPECT_EQ(g->neighbors(0).size(), 1u);
  EXPECT_EQ(g->EdgeWeight(0, 1), 2);
  EXPECT_EQ(g->volume(), 4);
}

TEST(GraphBuildTest, LabelsRemappedInOrderOfAppearance) {
  auto g = Graph::FromLabeledEdges({{"900", "17", 1, 1}, {"17", "x", 1, 2}});
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g->label(0), "900");
  EXPECT_EQ(g->label(1), "17");
  EXPECT_EQ(g->label(2), "x");
}

TEST(GraphBuildTest, RejectsBadInputWithLineNumber) {
  auto missing = Graph::FromLabeledEdges({{"a", "b", 1, 1}, {"a", "", 1, 7}});
  ASSERT_FALSE(missing.ok());
  EXPECT_NE(missing.status().message().find("line 7"), absl::string_view::npos);

  auto weight = Graph::FromLabeledEdges({{"a", "b", 0, 3}});
  ASSERT_FALSE(weight.ok());
  EXPECT_NE(weight.status().message().find("line 3"), absl::string_view::npos);

  auto loop = Graph::FromLabeledEdges({{"a", "a", 1, 4}});
  ASSERT_FALSE(loop.ok());
  EXPECT_NE(loop.status().message().find("self-loop"), absl::string_view::npos);
}

TEST(GraphBuildTest, AllowedSelfLoopBecomesInternalStubs) {
  BuildOptions options;
  options.allow_self_loops = true;
  auto g = Graph::FromLabeledEdges({{"a", "a", 1, 1}, {"a", "b", 1, 2}},
                                   options);
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g->self_loop(0), 2);
  EXPECT_EQ(g->degree(0), 3);
  EXPECT_EQ(g->volume(), 4);
}

TEST(GraphDegreeTest, Values) {
  Graph g = *Graph::FromEdges(4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  EXPECT_EQ(*g.Degree(0), 2);
  EXPECT_EQ(*g.Degree(3), 0);  // isolated
  EXPECT_EQ(g.Degree(4).status().code(), absl::StatusCode::kOutOfRange);
}

TEST(GraphDegreeTest, DirectedPair) {
  BuildOptions options;
  options.directed = true;
  Graph g = *Graph::FromEdges(3, {{0, 1, 1}, {0, 2, 2}, {2, 0, 1}}, options);
  EXPECT_EQ(*g.DirectedDegree(0), std::make_pair(Weight{1}, Weight{3}));
  EXPECT_EQ(*g.DirectedDegree(1), std::make_pair(Weight{1}, Weight{0}));
  EXPECT_EQ(g.volume(), 4);
}

TEST(GraphFoldTest, SingleEdge) {
  Graph g = *Graph::FromEdges(2, {{0, 1, 1}});
  NodeId x = *g.Fold(0, 1);
  EXPECT_EQ(g.self_loop(x), 2);
  EXPECT_EQ(g.degree(x), 2);
  EXPECT_EQ(g.num_alive(), 1u);
  EXPECT_EQ(g.volume(), 2);
}

TEST(GraphFoldTest, TriangleSequence) {
  Graph g = Triangle();
  NodeId x = *g.Fold(0, 1);
  EXPECT_EQ(g.self_loop(x), 2);
  EXPECT_EQ(g.EdgeWeight(x, 2), 2);
  EXPECT_EQ(g.degree(x), 4);
  EXPECT_EQ(g.volume(), 6);
  ExpectSymmetric(g);

  NodeId y = *g.Fold(x, 2);
  EXPECT_EQ(g.self_loop(y), 6);
  EXPECT_TRUE(g.neighbors(y).empty());
  EXPECT_EQ(g.degree(y), 6);
  EXPECT_EQ(g.volume(), 6);
  EXPECT_EQ(g.num_alive(), 1u);
}

TEST(GraphFoldTest, SurvivorHasLargerAdjacency) {
  // Star center 0 with leaves 1..3; leaf 1 also touches 4.
  Graph g = *Graph::FromEdges(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 4, 1}});
  EXPECT_EQ(*g.Fold(1, 0), 0u);
  Graph h = *Graph::FromEdges(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  EXPECT_EQ(*h.Fold(2, 1), 1u);  // tie -> smaller id
}

TEST(GraphFoldTest, Errors) {
  Graph g = Triangle();
  EXPECT_EQ(g.Fold(0, 0).status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(g.Fold(0, 9).status().code(), absl::StatusCode::kOutOfRange);
  NodeId x = *g.Fold(0, 1);
  NodeId dead = x == 0 ? 1 : 0;
  EXPECT_EQ(g.Fold(dead, 2).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST(GraphFoldTest, SummaryIdentities) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto eg = oracle::RandomEdgeGraph(rng, 12, 0.35);
    Graph g = *Graph::FromEdges(eg.n, eg.edges);
    const Weight volume = g.volume();
    while (g.num_alive() > 1) {
      std::vector<NodeId> alive;
      for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (g.is_alive(v)) alive.push_back(v);
      }
      NodeId i = alive[rng.Uniform(alive.size())];
      NodeId j;
      do {
        j = alive[rng.Uniform(alive.size())];
      } while (j == i);
      const Weight e_i = g.self_loop(i), e_j = g.self_loop(j);
      const Weight a_i = g.degree(i), a_j = g.degree(j);
      const Weight w_ij = g.EdgeWeight(i, j);
      NodeId x = *g.Fold(i, j);
      EXPECT_EQ(g.self_loop(x), e_i + e_j + 2 * w_ij);
      EXPECT_EQ(g.degree(x), a_i + a_j);
      EXPECT_EQ(g.volume(), volume);
      EXPECT_EQ(DegreeSum(g), volume);
      EXPECT_EQ(g.self_loop(x) % 2, 0);
      ExpectSymmetric(g);
    }
  }
}

// Every single fold on every graph with n <= 8 of a seeded corpus matches
// the brute-force quotient graph.
TEST(GraphFoldTest, MatchesBruteForceQuotient) {
  Rng rng(2024);
  for (NodeId n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      auto eg = oracle::RandomEdgeGraph(rng, n, 0.5);
      for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = 0; j < n; ++j) {
          if (i == j) continue;
          Graph g = *Graph::FromEdges(n, eg.edges);
          NodeId x = *g.Fold(i, j);
          std::vector<NodeId> group(n);
          for (NodeId v = 0; v < n; ++v) group[v] = (v == i || v == j) ? x : v;
          oracle::Quotient q = oracle::BruteForceQuotient(eg, group);

          std::map<std::pair<NodeId, NodeId>, Weight> actual;
          for (NodeId v = 0; v < n; ++v) {
            if (!g.is_alive(v)) continue;
            for (const auto& [k, w] : g.neighbors(v)) actual[{v, k}] = w;
            const auto it = q.self.find(v);
            EXPECT_EQ(g.self_loop(v), it == q.self.end() ? 0 : it->second);
          }
          EXPECT_EQ(actual, q.edges) << "n=" << n << " fold " << i << "," << j;
        }
      }
    }
  }
}

TEST(GraphFoldTest, DirectedFoldAggregatesArcsSeparately) {
  BuildOptions options;
  options.directed = true;
  // 0->1 (2), 1->0 (1), 0->2, 2->1, 3->0
  Graph g = *Graph::FromEdges(
      4, {{0, 1, 2}, {1, 0, 1}, {0, 2, 1}, {2, 1, 1}, {3, 0, 1}}, options);
  const Weight volume = g.volume();
  NodeId x = *g.Fold(0, 1);
  EXPECT_EQ(g.self_loop(x), 3);
  EXPECT_EQ(g.in_degree(x), 1 + 2 + 1 + 1);
  EXPECT_EQ(g.out_degree(x), 3 + 1);
  EXPECT_EQ(g.EdgeWeight(x, 2), 1);
  EXPECT_EQ(g.EdgeWeight(2, x), 1);
  EXPECT_EQ(g.EdgeWeight(3, x), 1);
  EXPECT_EQ(g.volume(), volume);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (!g.is_alive(v)) continue;
    for (const auto& [k, w] : g.out_neighbors(v)) {
      EXPECT_EQ(g.in_neighbors(k).at(v), w);
    }
  }
}

TEST(GraphCompactTest, RenumbersAliveNodes) {
  Graph g = *Graph::FromEdges(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  NodeId x = *g.Fold(1, 2);
  std::vector<NodeId> mapping;
  Graph c = g.Compact(&mapping);
  EXPECT_EQ(c.num_nodes(), 3u);
  EXPECT_EQ(c.volume(), g.volume());
  EXPECT_EQ(c.self_loop(mapping[x]), 2);
  EXPECT_EQ(c.EdgeWeight(mapping[0], mapping[x]), 1);
  EXPECT_EQ(c.EdgeWeight(mapping[3], mapping[x]), 1);
}

}  // namespace
}  // namespace lrmclust
