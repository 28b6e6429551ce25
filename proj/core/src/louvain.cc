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

#include <chrono>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "lrmclust/engine.h"
#include "lrmclust/graph.h"
#include "lrmclust/metrics.h"
#include "lrmclust/partition.h"
#include "weight_accumulator.h"

namespace lrmclust {
namespace {

// Sweeps the nodes of `g` in id order until no move improves modularity.
// Returns true if any node changed community.
bool LocalMoving(const Graph& g, std::vector<NodeId>& community,
                 RunStats& stats) {
  const NodeId n = g.num_nodes();
  const double volume = static_cast<double>(g.volume());
  std::vector<Weight> total(n);
  for (NodeId v = 0; v < n; ++v) {
    community[v] = v;
    total[v] = g.degree(v);
  }
  WeightAccumulator acc(n);
  bool moved_any = false;
  bool improved = true;
  while (improved) {
    improved = false;
    ++stats.iterations;
    for (NodeId v = 0; v < n; ++v) {
      const Weight k_v = g.degree(v);
      const NodeId old = community[v];
      for (const auto& [u, w] : g.neighbors(v)) acc.Add(community[u], w);
      total[old] -= k_v;

      // Proportional to the modularity gain of inserting v into c.
      auto gain = [&](NodeId c, Weight k_vc) {
        return static_cast<double>(k_vc) -
               static_cast<double>(total[c]) * static_cast<double>(k_v) /
                   volume;
      };
      Weight k_old = 0;
      NodeId best = kInvalidNode;
      double best_gain = -std::numeric_limits<double>::infinity();
      acc.Drain([&](NodeId c, Weight k_vc) {
        ++stats.gain_evals;
        if (c == old) {
          k_old = k_vc;
          return;
        }
        const double g_c = gain(c, k_vc);
        if (g_c > best_gain || (g_c == best_gain && c < best)) {
          best = c;
          best_gain = g_c;
        }
      });
      ++stats.gain_evals;
      // Staying put wins ties.
      if (best == kInvalidNode || !(best_gain > gain(old, k_old))) best = old;

      total[best] += k_v;
      community[v] = best;
      if (best != old) {
        improved = true;
        moved_any = true;
      }
    }
  }
  return moved_any;
}

}  // namespace

absl::StatusOr<ClusteringResult> ClusterLouvain(const Graph& graph) {
  if (graph.directed()) {
    return absl::InvalidArgumentError(
        "louvain baseline supports undirected graphs only");
  }
  const auto start = std::chrono::steady_clock::now();
  ClusteringResult result;
  const NodeId n0 = graph.num_nodes();

  std::vector<NodeId> level_mapping;
  Graph current = graph.Compact(&level_mapping);
  // Original node -> node of the current level.
  std::vector<NodeId> node_of(n0);
  for (NodeId v = 0; v < n0; ++v) node_of[v] = level_mapping[v];

  RunStats& stats = result.stats;
  std::vector<NodeId> community;
  while (current.num_nodes() > 0 && current.volume() > 0) {
    community.assign(current.num_nodes(), 0);
    if (!LocalMoving(current, community, stats)) break;

    // Contract every community into its first member.
    std::vector<NodeId> anchor(current.num_nodes(), kInvalidNode);
    for (NodeId v = 0; v < current.num_nodes(); ++v) {
      NodeId& a = anchor[community[v]];
      if (a == kInvalidNode) {
        a = v;
        continue;
      }
      a = *current.Fold(a, v);
      ++stats.folds;
    }
    Graph next = current.Compact(&level_mapping);
    for (NodeId v = 0; v < n0; ++v) {
      if (node_of[v] == kInvalidNode) continue;
      node_of[v] = level_mapping[anchor[community[node_of[v]]]];
    }
    current = std::move(next);
  }

  std::vector<int64_t> labels(n0);
  for (NodeId v = 0; v < n0; ++v) {
    labels[v] = node_of[v] == kInvalidNode ? -1 - static_cast<int64_t>(v)
                                           : static_cast<int64_t>(node_of[v]);
  }
  result.partition = Partition::FromLabels(labels);
  if (graph.volume() > 0) {
    auto sigma = SumLogLrm(graph, result.partition);
    if (sigma.ok()) stats.final_sigma_l = *sigma;
  }
  stats.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace lrmclust
