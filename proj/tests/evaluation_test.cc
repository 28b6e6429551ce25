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

#include "lrmclust/evaluation.h"

#include <cmath>
#include <map>
#include <vector>

#include "gtest/gtest.h"
#include "lrmclust/random.h"

namespace lrmclust {
namespace {

// 2 I / (H1 + H2) from nested maps, in long double.
double BruteForceNmi(const std::vector<int64_t>& p,
                     const std::vector<int64_t>& q) {
  const long double n = static_cast<long double>(p.size());
  std::map<int64_t, long double> pc, qc;
  std::map<std::pair<int64_t, int64_t>, long double> joint;
  for (size_t v = 0; v < p.size(); ++v) {
    pc[p[v]] += 1;
    qc[q[v]] += 1;
    joint[{p[v], q[v]}] += 1;
  }
  auto entropy = [&](const std::map<int64_t, long double>& c) {
    long double h = 0;
    for (const auto& [k, x] : c) h -= (x / n) * std::log(x / n);
    return h;
  };
  long double mi = 0;
  for (const auto& [key, x] : joint) {
    mi += (x / n) * std::log((x * n) / (pc[key.first] * qc[key.second]));
  }
  const long double h = entropy(pc) + entropy(qc);
  if (h == 0) return 1.0;
  return static_cast<double>(2 * mi / h);
}

TEST(NmiTest, Examples) {
  const Partition p = Partition::FromLabels({0, 0, 1, 1, 2});
  EXPECT_DOUBLE_EQ(*Nmi(p, p), 1.0);
  EXPECT_EQ(*Nmi(p, Partition::FromLabels({0, 0, 0, 0, 0})), 0.0);
  EXPECT_NEAR(*Nmi(Partition::FromLabels({0, 0, 1, 1}),
                   Partition::FromLabels({0, 1, 0, 1})),
              0.0, 1e-15);
  // Both trivial.
  EXPECT_EQ(*Nmi(Partition::FromLabels({0, 0}), Partition::FromLabels({5, 5})),
            1.0);
  EXPECT_FALSE(Nmi(p, Partition::Singletons(4)).ok());
}

TEST(NmiTest, MatchesBruteForceSymmetricAndLabelInvariant) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const size_t n = 2 + rng.Uniform(60);
    std::vector<int64_t> a(n), b(n), relabeled(n);
    const uint64_t ka = 1 + rng.Uniform(6), kb = 1 + rng.Uniform(6);
    for (size_t v = 0; v < n; ++v) {
      a[v] = static_cast<int64_t>(rng.Uniform(ka));
      b[v] = static_cast<int64_t>(rng.Uniform(kb));
      relabeled[v] = 1000 - 7 * a[v];
    }
    const Partition pa = Partition::FromLabels(a);
    const Partition pb = Partition::FromLabels(b);
    const double ab = *Nmi(pa, pb);
    EXPECT_NEAR(ab, BruteForceNmi(a, b), 1e-12);
    EXPECT_NEAR(ab, *Nmi(pb, pa), 1e-12);
    EXPECT_EQ(ab, *Nmi(pb, pa));
    EXPECT_EQ(ab, *Nmi(Partition::FromLabels(relabeled), pb));
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
  }
}

TEST(ContingencyTableTest, Sums) {
  auto t = *ContingencyTable::Build(Partition::FromLabels({0, 0, 1, 1, 1}),
                                    Partition::FromLabels({0, 1, 1, 1, 2}));
  EXPECT_EQ(t.total(), 5);
  EXPECT_EQ(t.row_sums(), (std::vector<int64_t>{2, 3}));
  EXPECT_EQ(t.col_sums(), (std::vector<int64_t>{1, 3, 1}));
  ASSERT_EQ(t.cells().size(), 4u);
  EXPECT_EQ(t.cells()[2].row, 1u);
  EXPECT_EQ(t.cells()[2].col, 1u);
  EXPECT_EQ(t.cells()[2].count, 2);
}

TEST(SizeStatsTest, Examples) {
  SizeStats s = ComputeSizeStats(Partition::Singletons(3));
  EXPECT_EQ(s.count, 3);
  EXPECT_EQ(s.mean_size, 1.0);
  EXPECT_EQ(s.max_size, 1);
  EXPECT_EQ(s.min_size, 1);

  s = ComputeSizeStats(Partition::FromLabels(std::vector<int64_t>(10, 4)));
  EXPECT_EQ(s.count, 1);
  EXPECT_EQ(s.mean_size, 10.0);
  EXPECT_EQ(s.max_size, 10);
  EXPECT_EQ(s.min_size, 10);

  s = ComputeSizeStats(Partition::FromLabels({0, 1, 1, 2, 2, 2, 2}));
  EXPECT_EQ(s.mean_size * s.count, 7.0);
  EXPECT_EQ(s.max_size, 4);
  EXPECT_EQ(s.min_size, 1);
}

// Node 0 is a member of both A (=10) and B (=20); its neighbors are fixed
// single-community nodes.
Graph Star(int in_a, int in_b) {
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < in_a + in_b; ++i) {
    edges.push_back({0, static_cast<NodeId>(i + 1), 1});
  }
  return *Graph::FromEdges(static_cast<NodeId>(in_a + in_b + 1), edges);
}

std::vector<std::vector<int64_t>> StarMemberships(int in_a, int in_b) {
  std::vector<std::vector<int64_t>> m = {{20, 10}};
  for (int i = 0; i < in_a; ++i) m.push_back({10});
  for (int i = 0; i < in_b; ++i) m.push_back({20});
  return m;
}

TEST(ResolveOverlapTest, Plurality) {
  Partition p = *ResolveOverlappingTruth(StarMemberships(3, 1), Star(3, 1));
  EXPECT_EQ(p[0], p[1]);
  EXPECT_NE(p[0], p[4]);
}

TEST(ResolveOverlapTest, TieGoesToSmallestId) {
  Partition p = *ResolveOverlappingTruth(StarMemberships(2, 2), Star(2, 2));
  EXPECT_EQ(p[0], p[1]);  // community 10
  p = *ResolveOverlappingTruth(StarMemberships(1, 3), Star(1, 3));
  EXPECT_EQ(p[0], p[2]);  // community 20
}

TEST(ResolveOverlapTest, SingleCandidateAndResolvedSoFar) {
  // Path 0 - 1 - 2. Node 0 is in {1, 2}, node 1 in {2, 3}, node 2 in {3}.
  Graph g = *Graph::FromEdges(3, {{0, 1, 1}, {1, 2, 1}});
  Partition p = *ResolveOverlappingTruth({{1, 2}, {2, 3}, {3}}, g);
  // Node 0 sees only unresolved node 1 -> tie -> 1. Node 1 sees 0 (in 1,
  // not a candidate) and 2 (in 3) -> 3.
  EXPECT_EQ(p[1], p[2]);
  EXPECT_NE(p[0], p[1]);
  EXPECT_EQ(p.num_clusters(), 2u);
}

TEST(ResolveOverlapTest, Errors) {
  Graph g = *Graph::FromEdges(2, {{0, 1, 1}});
  EXPECT_FALSE(ResolveOverlappingTruth({{0}, {}}, g).ok());
  EXPECT_FALSE(ResolveOverlappingTruth({{0}}, g).ok());
  EXPECT_FALSE(ResolveOverlappingTruth({{0}, {-1}}, g).ok());
}

}  // namespace
}  // namespace lrmclust
