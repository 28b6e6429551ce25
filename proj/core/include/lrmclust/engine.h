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

#ifndef LRMCLUST_ENGINE_H_
#define LRMCLUST_ENGINE_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "absl/status/statusor.h"
#include "lrmclust/graph.h"
#include "lrmclust/metrics.h"
#include "lrmclust/partition.h"

namespace lrmclust {

// Emitted after every accepted merge.
struct FoldEvent {
  NodeId initiator = kInvalidNode;  // cluster taken from the worklist
  NodeId partner = kInvalidNode;    // its best neighbor
  NodeId survivor = kInvalidNode;   // id the merged cluster carries on with
  double gain = 0.0;
  ClusterSummary initiator_summary;
  ClusterSummary partner_summary;
  ClusterSummary merged_summary;
  double sigma_l_before = 0.0;
  double sigma_l_after = 0.0;
  // Original nodes of the merged cluster, ascending.
  std::vector<NodeId> members;
};

using FoldObserver = std::function<void(const FoldEvent&)>;

enum class SeedOrder {
  kNodeId,
  kGivenPermutation,
};

struct EngineOptions {
  bool use_cache = true;
  bool use_fold = true;
  // Must match Graph::directed().
  bool directed = false;
  SeedOrder seed_order = SeedOrder::kNodeId;
  // Initial worklist order when seed_order == kGivenPermutation.
  std::vector<NodeId> permutation;
  // Optional; called synchronously after each merge.
  FoldObserver on_fold;
};

struct RunStats {
  // Fresh gain computations (cache misses when caching is on).
  int64_t gain_evals = 0;
  int64_t cache_hits = 0;
  int64_t cache_size = 0;
  int64_t folds = 0;
  // Clusters taken from the worklist (gScarf) or local-moving sweeps
  // (Louvain).
  int64_t iterations = 0;
  double wall_time_seconds = 0.0;
  // Sum of L over the output clusters, evaluated on the input graph.
  double final_sigma_l = 0.0;
};

struct ClusteringResult {
  Partition partition;
  RunStats stats;
};

// Greedy likelihood-ratio modularity clustering.
//
// All nodes start as singletons in a FIFO worklist (ascending id, or the
// given permutation). The head cluster C_i is compared against every
// neighboring cluster by dL; the best neighbor (ties: smallest cluster id)
// is merged with C_i when its gain is strictly positive, and the merged
// cluster is appended to the worklist in place of both. Otherwise C_i is
// retired and never taken from the worklist again, although a later
// neighbor may still merge with it.
//
// With use_fold the working graph is contracted on every merge; without it
// clusters are tracked over the untouched input and neighbor weights are
// re-aggregated from member edges on every scan. Both produce the same
// partition, as do use_cache on and off.
absl::StatusOr<ClusteringResult> ClusterGscarf(
    const Graph& graph, const EngineOptions& options = {});

// Two-phase Louvain modularity baseline: local moving in node id order to
// the best-gain neighboring community (ties: smallest label; a node stays
// unless a move strictly improves Q), then aggregation by folding, repeated
// until a level makes no move. Undirected graphs only.
absl::StatusOr<ClusteringResult> ClusterLouvain(const Graph& graph);

}  // namespace lrmclust

#endif  // LRMCLUST_ENGINE_H_
