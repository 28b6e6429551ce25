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

#include <cmath>
#include <numeric>
#include <vector>

#include "audit.h"
#include "gtest/gtest.h"
#include "lrmclust/engine.h"
#include "lrmclust/evaluation.h"
#include "lrmclust/metrics.h"
#include "lrmclust/random.h"
#include "lrmclust/synth.h"
#include "oracles.h"

namespace lrmclust {
namespace {

Graph Triangle() {
  return *Graph::FromEdges(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
}

Graph SymmetricDigraph(const std::vector<WeightedEdge>& edges, NodeId n) {
  std::vector<WeightedEdge> arcs;
  for (const auto& e : edges) {
    arcs.push_back({e.source, e.target, e.weight});
    arcs.push_back({e.target, e.source, e.weight});
  }
  BuildOptions options;
  options.directed = true;
  return *Graph::FromEdges(n, arcs, options);
}

SyntheticGraph Planted(NodeId n, NodeId k, double mu, double d,
                       uint64_t seed) {
  PlantedSpec spec;
  spec.n = n;
  spec.k = k;
  spec.mu = mu;
  spec.avg_degree = d;
  spec.seed = seed;
  return *GeneratePlanted(spec);
}

TEST(GscarfTest, TriangleStaysSingletons) {
  // Every candidate merge has dL = L(2, 4) - 2 L(0, 2) < 0 at 2m = 6.
  const double pair = (1.0 / 3.0) * std::log(0.75) + 1.0 / 9.0;
  EXPECT_LT(pair - 2.0 / 9.0, 0.0);

  auto result = ClusterGscarf(Triangle());
  ASSERT_TRUE(result.ok()) << result.status();
  EXPECT_EQ(result->partition, Partition::Singletons(3));
  EXPECT_EQ(result->stats.folds, 0);
  EXPECT_EQ(result->stats.iterations, 3);
  EXPECT_NEAR(result->stats.final_sigma_l, 3.0 / 9.0, 1e-15);
}

TEST(GscarfTest, MergesWhenGainPositive) {
  // Two 4-cliques joined by a long path: sparse enough that clique pairs
  // have positive gain.
  std::vector<WeightedEdge> edges;
  auto clique = [&](NodeId base) {
    for (NodeId u = 0; u < 4; ++u)
      for (NodeId v = u + 1; v < 4; ++v) edges.push_back({base + u, base + v, 1});
  };
  clique(0);
  clique(4);
  NodeId prev = 3;
  for (NodeId v = 8; v < 40; ++v) {
    edges.push_back({prev, v, 1});
    prev = v;
  }
  edges.push_back({prev, 4, 1});
  Graph g = *Graph::FromEdges(40, edges);
  auto result = *ClusterGscarf(g);
  EXPECT_LT(result.partition.num_clusters(), 40u);
  EXPECT_EQ(result.stats.folds, 40 - static_cast<int64_t>(
                                         result.partition.num_clusters()));
  for (NodeId v = 1; v < 4; ++v) {
    EXPECT_EQ(result.partition[v], result.partition[0]);
    EXPECT_EQ(result.partition[4 + v], result.partition[4]);
  }
  EXPECT_NE(result.partition[0], result.partition[4]);
}

TEST(GscarfTest, CacheAndFoldAreTransparent) {
  for (const PlantedSpec& spec : audit::PlantedCorpus(25, 800, 77)) {
    SyntheticGraph g = *GeneratePlanted(spec);
    EngineOptions reference;
    reference.use_cache = false;
    reference.use_fold = false;
    auto base = *ClusterGscarf(g.graph, reference);
    for (bool cache : {false, true}) {
      for (bool fold : {false, true}) {
        EngineOptions options;
        options.use_cache = cache;
        options.use_fold = fold;
        auto r = *ClusterGscarf(g.graph, options);
        ASSERT_EQ(r.partition, base.partition)
            << "n=" << spec.n << " mu=" << spec.mu << " cache=" << cache
            << " fold=" << fold;
        EXPECT_EQ(r.stats.folds, base.stats.folds);
        EXPECT_EQ(r.stats.iterations, base.stats.iterations);
        // Same lookups; the cache only splits them into hits and misses.
        EXPECT_EQ(r.stats.gain_evals + r.stats.cache_hits,
                  base.stats.gain_evals);
        if (cache) {
          EXPECT_EQ(r.stats.gain_evals, r.stats.cache_size);
        }
      }
    }
  }
}

TEST(GscarfTest, EveryFoldIncreasesObjectiveAndMatchesOriginalGraph) {
  for (const PlantedSpec& spec : audit::PlantedCorpus(20, 600, 5)) {
    SyntheticGraph g = *GeneratePlanted(spec);
    for (bool fold : {true, false}) {
      audit::FoldAudit audit(audit::ToEdgeGraph(g));
      EngineOptions options;
      options.use_fold = fold;
      options.on_fold = audit.Observer();
      auto r = *ClusterGscarf(g.graph, options);
      EXPECT_EQ(audit.folds(), r.stats.folds);
      EXPECT_GT(audit.folds(), 0);
      EXPECT_EQ(audit.monotonicity_violations(), 0);
      EXPECT_EQ(audit.membership_errors(), 0);
      EXPECT_LE(audit.max_fold_error(), 1e-12);
      EXPECT_NEAR(r.stats.final_sigma_l, *SumLogLrm(g.graph, r.partition),
                  1e-9);
      EXPECT_LE(r.stats.folds, static_cast<int64_t>(spec.n) - 1);
    }
  }
}

TEST(GscarfTest, Deterministic) {
  SyntheticGraph g = Planted(1500, 15, 0.3, 12, 9);
  auto a = *ClusterGscarf(g.graph);
  auto b = *ClusterGscarf(g.graph);
  EXPECT_EQ(a.partition, b.partition);
  EXPECT_EQ(a.stats.gain_evals, b.stats.gain_evals);
  EXPECT_EQ(a.stats.cache_hits, b.stats.cache_hits);
  EXPECT_EQ(a.stats.cache_size, b.stats.cache_size);
  EXPECT_EQ(a.stats.folds, b.stats.folds);
  EXPECT_EQ(a.stats.iterations, b.stats.iterations);
  EXPECT_EQ(a.stats.final_sigma_l, b.stats.final_sigma_l);
}

TEST(GscarfTest, PlantedAccuracy) {
  SyntheticGraph g = Planted(10000, 100, 0.1, 20, 42);
  auto r = *ClusterGscarf(g.graph);
  EXPECT_GE(*Nmi(r.partition, g.truth), 0.7);
  EXPECT_GT(r.stats.cache_hits, 0);
}

TEST(GscarfTest, SeedPermutation) {
  SyntheticGraph g = Planted(500, 5, 0.2, 8, 3);
  EngineOptions identity;
  identity.seed_order = SeedOrder::kGivenPermutation;
  identity.permutation.resize(500);
  std::iota(identity.permutation.begin(), identity.permutation.end(), 0u);
  EXPECT_EQ(ClusterGscarf(g.graph, identity)->partition,
            ClusterGscarf(g.graph)->partition);

  Rng rng(1);
  EngineOptions shuffled = identity;
  rng.Shuffle(shuffled.permutation);
  audit::FoldAudit audit(audit::ToEdgeGraph(g));
  shuffled.on_fold = audit.Observer();
  auto r = ClusterGscarf(g.graph, shuffled);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(audit.monotonicity_violations(), 0);
  EXPECT_EQ(r->partition.num_nodes(), 500u);

  EngineOptions bad = identity;
  bad.permutation[3] = 4;
  EXPECT_EQ(ClusterGscarf(g.graph, bad).status().code(),
            absl::StatusCode::kInvalidArgument);
  bad.permutation.pop_back();
  EXPECT_FALSE(ClusterGscarf(g.graph, bad).ok());
}

TEST(GscarfTest, ConfigurationErrors) {
  EngineOptions directed;
  directed.directed = true;
  EXPECT_EQ(ClusterGscarf(Triangle(), directed).status().code(),
            absl::StatusCode::kInvalidArgument);

  Graph digraph = SymmetricDigraph({{0, 1, 1}}, 2);
  EXPECT_FALSE(ClusterGscarf(digraph).ok());

  EXPECT_FALSE(ClusterGscarf(Graph()).ok());

  Graph folded = Triangle();
  ASSERT_TRUE(folded.Fold(0, 1).ok());
  EXPECT_FALSE(ClusterGscarf(folded).ok());
}

TEST(GscarfTest, IsolatedNodesStaySingletons) {
  Graph g = *Graph::FromEdges(5, {{0, 1, 1}});
  auto r = *ClusterGscarf(g);
  EXPECT_EQ(r.partition.num_clusters(), 5u);
}

TEST(GscarfDirectedTest, SymmetricDigraphMatchesUndirected) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    SyntheticGraph g = Planted(300, 6, 0.1 * seed - 0.05, 8, seed);
    Graph digraph = SymmetricDigraph(g.edges, g.num_nodes);
    EXPECT_EQ(digraph.volume(), g.graph.volume());
    for (bool fold : {true, false}) {
      EngineOptions undirected;
      undirected.use_fold = fold;
      EngineOptions directed = undirected;
      directed.directed = true;
      auto u = *ClusterGscarf(g.graph, undirected);
      auto d = *ClusterGscarf(digraph, directed);
      ASSERT_EQ(u.partition, d.partition) << "seed " << seed;
      EXPECT_EQ(u.stats.folds, d.stats.folds);
      EXPECT_EQ(u.stats.final_sigma_l, d.stats.final_sigma_l);
    }
  }
}

TEST(GscarfDirectedTest, SingleArc) {
  BuildOptions options;
  options.directed = true;
  Graph g = *Graph::FromEdges(2, {{0, 1, 1}}, options);
  EngineOptions engine;
  engine.directed = true;
  engine.use_cache = false;
  auto r = *ClusterGscarf(g, engine);
  // One evaluation per endpoint; dL = 0 is not an improvement.
  EXPECT_EQ(r.stats.gain_evals, 2);
  EXPECT_EQ(r.partition.num_clusters(), 2u);
  EXPECT_EQ(
      LrmGain(DirectedStructTuple{0, 0, 1, 0, 1, 0, 1}, g.volume()), 0.0);
}

TEST(GscarfDirectedTest, SinksAndSourcesAreTransparent) {
  // Sources (a_in = 0) and sinks (a_out = 0) hanging off directed cycles.
  BuildOptions options;
  options.directed = true;
  std::vector<WeightedEdge> arcs;
  const NodeId ring = 40;
  for (NodeId c = 0; c < 3; ++c) {
    const NodeId base = c * ring;
    for (NodeId v = 0; v < ring; ++v) {
      arcs.push_back({base + v, base + (v + 1) % ring, 1});
      arcs.push_back({base + v, base + (v + 7) % ring, 1});
    }
  }
  arcs.push_back({0, ring, 1});
  arcs.push_back({2 * ring, 0, 1});
  arcs.push_back({3 * ring, 5, 1});       // source
  arcs.push_back({ring + 3, 3 * ring + 1, 1});  // sink
  Graph g = *Graph::FromEdges(3 * ring + 2, arcs, options);
  EXPECT_EQ(g.in_degree(3 * ring), 0);
  EXPECT_EQ(g.out_degree(3 * ring + 1), 0);
  EngineOptions base;
  base.directed = true;
  base.use_cache = false;
  base.use_fold = false;
  auto reference = *ClusterGscarf(g, base);
  EngineOptions fast;
  fast.directed = true;
  auto r = *ClusterGscarf(g, fast);
  EXPECT_EQ(r.partition, reference.partition);
  EXPECT_LT(r.partition.num_clusters(), 3 * ring + 2);
}

}  // namespace
}  // namespace lrmclust
