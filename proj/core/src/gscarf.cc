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

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "lrmclust/engine.h"
#include "lrmclust/gain_cache.h"
#include "lrmclust/graph.h"
#include "lrmclust/metrics.h"
#include "lrmclust/partition.h"
#include "weight_accumulator.h"

namespace lrmclust {
namespace {

// Singly linked member lists; concatenation is O(1).
class MemberLists {
 public:
  explicit MemberLists(NodeId n) : head_(n), tail_(n), next_(n, kInvalidNode) {
    for (NodeId v = 0; v < n; ++v) head_[v] = tail_[v] = v;
  }

  // Appends the members of `from` to `into`.
  void Splice(NodeId into, NodeId from) {
    next_[tail_[into]] = head_[from];
    tail_[into] = tail_[from];
    head_[from] = tail_[from] = kInvalidNode;
  }

  template <typename Fn>
  void ForEach(NodeId cluster, Fn&& fn) const {
    for (NodeId v = head_[cluster]; v != kInvalidNode; v = next_[v]) fn(v);
  }

  std::vector<NodeId> Sorted(NodeId cluster) const {
    std::vector<NodeId> out;
    ForEach(cluster, [&](NodeId v) { out.push_back(v); });
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<NodeId> head_;
  std::vector<NodeId> tail_;
  std::vector<NodeId> next_;
};

ClusterSummary NodeSummary(const Graph& g, NodeId v) {
  return {g.self_loop(v), g.degree(v), g.in_degree(v), g.out_degree(v)};
}

// Clusters are nodes of a working copy of the graph that is contracted on
// every merge.
class FoldedState {
 public:
  explicit FoldedState(const Graph& graph)
      : graph_(graph), acc_(graph.num_nodes()) {}

  bool alive(NodeId c) const { return graph_.is_alive(c); }
  ClusterSummary summary(NodeId c) const { return NodeSummary(graph_, c); }

  template <typename Fn>
  void ForEachNeighbor(NodeId c, Fn&& fn) {
    if (!graph_.directed()) {
      for (const auto& [k, w] : graph_.neighbors(c)) fn(k, w);
      return;
    }
    for (const auto& [k, w] : graph_.out_neighbors(c)) acc_.Add(k, w);
    for (const auto& [k, w] : graph_.in_neighbors(c)) acc_.Add(k, w);
    acc_.Drain(fn);
  }

  NodeId Merge(NodeId i, NodeId j) {
    // Both endpoints are alive and distinct by construction.
    return *graph_.Fold(i, j);
  }

 private:
  Graph graph_;
  WeightAccumulator acc_;
};

// Clusters are tracked over the untouched input graph; neighbor weights are
// aggregated from member edges on every scan.
class UnfoldedState {
 public:
  UnfoldedState(const Graph& graph, const MemberLists& members)
      : graph_(graph),
        members_(members),
        parent_(graph.num_nodes()),
        cluster_of_root_(graph.num_nodes()),
        root_of_cluster_(graph.num_nodes()),
        set_size_(graph.num_nodes(), 1),
        alive_(graph.num_nodes(), 1),
        summaries_(graph.num_nodes()),
        acc_(graph.num_nodes()),
        seen_(graph.num_nodes(), 0) {
    for (NodeId v = 0; v < graph.num_nodes(); ++v) {
      parent_[v] = cluster_of_root_[v] = root_of_cluster_[v] = v;
      summaries_[v] = NodeSummary(graph, v);
    }
  }

  bool alive(NodeId c) const { return alive_[c] != 0; }
  ClusterSummary summary(NodeId c) const { return summaries_[c]; }

  template <typename Fn>
  void ForEachNeighbor(NodeId c, Fn&& fn) {
    members_.ForEach(c, [&](NodeId u) {
      for (const auto& [v, w] : graph_.out_neighbors(u)) {
        NodeId other = ClusterOf(v);
        if (other != c) acc_.Add(other, w);
      }
      for (const auto& [v, w] : graph_.in_neighbors(u)) {
        NodeId other = ClusterOf(v);
        if (other != c) acc_.Add(other, w);
      }
    });
    acc_.Drain(fn);
  }

  // Size the cluster's adjacency would have in the contracted graph.
  size_t AdjacencySize(NodeId c) {
    size_t size = CountDistinct(c, /*incoming=*/false);
    if (graph_.directed()) size += CountDistinct(c, /*incoming=*/true);
    return size;
  }

  NodeId Merge(NodeId i, NodeId j, Weight between) {
    const size_t size_i = AdjacencySize(i);
    const size_t size_j = AdjacencySize(j);
    NodeId keep = size_i != size_j ? (size_i > size_j ? i : j) : std::min(i, j);
    NodeId drop = keep == i ? j : i;

    ClusterSummary& s = summaries_[keep];
    const ClusterSummary& d = summaries_[drop];
    s.e += d.e + (graph_.directed() ? between : 2 * between);
    s.a += d.a;
    s.a_in += d.a_in;
    s.a_out += d.a_out;
    alive_[drop] = 0;

    NodeId root_keep = root_of_cluster_[keep];
    NodeId root_drop = root_of_cluster_[drop];
    if (set_size_[root_keep] < set_size_[root_drop]) {
      std::swap(root_keep, root_drop);
    }
    parent_[root_drop] = root_keep;
    set_size_[root_keep] += set_size_[root_drop];
    cluster_of_root_[root_keep] = keep;
    root_of_cluster_[keep] = root_keep;
    return keep;
  }

 private:
  NodeId ClusterOf(NodeId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return cluster_of_root_[v];
  }

  size_t CountDistinct(NodeId c, bool incoming) {
    ++epoch_;
    size_t count = 0;
    members_.ForEach(c, [&](NodeId u) {
      const NeighborMap& adj =
          incoming ? graph_.in_neighbors(u) : graph_.out_neighbors(u);
      for (const auto& [v, w] : adj) {
        NodeId other = ClusterOf(v);
        if (other == c || seen_[other] == epoch_) continue;
        seen_[other] = epoch_;
        ++count;
      }
    });
    return count;
  }

  const Graph& graph_;
  const MemberLists& members_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> cluster_of_root_;
  std::vector<NodeId> root_of_cluster_;
  std::vector<NodeId> set_size_;
  std::vector<uint8_t> alive_;
  std::vector<ClusterSummary> summaries_;
  WeightAccumulator acc_;
  std::vector<uint32_t> seen_;
  uint32_t epoch_ = 0;
};

StructTuple MakeTuple(const ClusterSummary& i, const ClusterSummary& j,
                      Weight between, StructTuple*) {
  return {i.e, i.a, j.e, j.a, between};
}

DirectedStructTuple MakeTuple(const ClusterSummary& i, const ClusterSummary& j,
                              Weight between, DirectedStructTuple*) {
  return {i.e, i.a_in, i.a_out, j.e, j.a_in, j.a_out, between};
}

absl::Status ValidateOptions(const Graph& graph, const EngineOptions& options) {
  if (options.directed != graph.directed()) {
    return absl::InvalidArgumentError(
        options.directed
            ? "directed clustering requested on an undirected graph"
            : "graph was loaded as directed; enable directed clustering");
  }
  if (options.seed_order == SeedOrder::kGivenPermutation) {
    const auto& perm = options.permutation;
    if (perm.size() != graph.num_nodes()) {
      return absl::InvalidArgumentError(
          absl::StrCat("seed permutation has ", perm.size(),
                       " entries, graph has ", graph.num_nodes(), " nodes"));
    }
    std::vector<uint8_t> seen(graph.num_nodes(), 0);
    for (NodeId v : perm) {
      if (v >= graph.num_nodes() || seen[v]) {
        return absl::InvalidArgumentError(
            absl::StrCat("seed permutation is not a permutation (entry ", v,
                         ")"));
      }
      seen[v] = 1;
    }
  }
  return absl::OkStatus();
}

// A neighboring cluster of the cluster being scanned.
template <typename Tuple>
struct Candidate {
  NodeId cluster;
  Weight between;
  Tuple tuple;
};

// Cache slots are prefetched this many candidates ahead of their lookup.
constexpr size_t kLookahead = 8;

template <typename Tuple, typename State>
ClusteringResult RunGscarf(const Graph& graph, const EngineOptions& options,
                           State& state, MemberLists& members,
                           std::chrono::steady_clock::time_point start) {
  const NodeId n = graph.num_nodes();
  const Weight volume = graph.volume();
  const bool directed = graph.directed();

  std::optional<BasicGainCache<Tuple>> cache;
  if (options.use_cache) cache.emplace(volume);

  RunStats stats;
  double sigma_l = 0.0;
  if (volume > 0) {
    for (NodeId v = 0; v < n; ++v) {
      sigma_l += LogLrm(state.summary(v), volume, directed);
    }
  }

  // Entries are (cluster, stamp); an entry is live while its stamp matches.
  std::deque<std::pair<NodeId, uint32_t>> worklist;
  std::vector<uint32_t> stamp(n, 0);
  if (options.seed_order == SeedOrder::kGivenPermutation) {
    for (NodeId v : options.permutation) worklist.emplace_back(v, 0);
  } else {
    for (NodeId v = 0; v < n; ++v) worklist.emplace_back(v, 0);
  }

  std::vector<Candidate<Tuple>> candidates;
  while (!worklist.empty()) {
    const auto [ci, entry_stamp] = worklist.front();
    worklist.pop_front();
    if (entry_stamp != stamp[ci] || !state.alive(ci)) continue;
    ++stats.iterations;

    const ClusterSummary si = state.summary(ci);
    candidates.clear();
    state.ForEachNeighbor(ci, [&](NodeId cj, Weight between) {
      candidates.push_back({cj, between,
                            MakeTuple(si, state.summary(cj), between,
                                      static_cast<Tuple*>(nullptr))});
    });

    NodeId best = kInvalidNode;
    double best_gain = -std::numeric_limits<double>::infinity();
    Weight best_between = 0;
    const size_t count = candidates.size();
    if (cache) {
      for (size_t k = 0; k < std::min(count, kLookahead); ++k) {
        cache->Prefetch(candidates[k].tuple);
      }
    }
    for (size_t k = 0; k < count; ++k) {
      const Candidate<Tuple>& c = candidates[k];
      double gain;
      if (cache) {
        if (k + kLookahead < count) {
          cache->Prefetch(candidates[k + kLookahead].tuple);
        }
        gain = cache->LookupOrCompute(c.tuple);
      } else {
        gain = LrmGain(c.tuple, volume);
        ++stats.gain_evals;
      }
      if (gain > best_gain || (gain == best_gain && c.cluster < best)) {
        best = c.cluster;
        best_gain = gain;
        best_between = c.between;
      }
    }

    ++stamp[ci];
    if (best == kInvalidNode || !(best_gain > 0.0)) continue;  // retire

    const ClusterSummary sb = state.summary(best);
    NodeId survivor;
    if constexpr (std::is_same_v<State, FoldedState>) {
      survivor = state.Merge(ci, best);
    } else {
      survivor = state.Merge(ci, best, best_between);
    }
    const NodeId absorbed = survivor == ci ? best : ci;
    members.Splice(survivor, absorbed);
    ++stamp[best];
    ++stamp[survivor];
    worklist.emplace_back(survivor, stamp[survivor]);
    ++stats.folds;

    const double before = sigma_l;
    sigma_l += best_gain;
    if (options.on_fold) {
      FoldEvent event;
      event.initiator = ci;
      event.partner = best;
      event.survivor = survivor;
      event.gain = best_gain;
      event.initiator_summary = si;
      event.partner_summary = sb;
      event.merged_summary = state.summary(survivor);
      event.sigma_l_before = before;
      event.sigma_l_after = sigma_l;
      event.members = members.Sorted(survivor);
      options.on_fold(event);
    }
  }

  std::vector<int64_t> labels(n, -1);
  for (NodeId c = 0; c < n; ++c) {
    if (!state.alive(c)) continue;
    members.ForEach(c, [&](NodeId v) { labels[v] = c; });
  }
  ClusteringResult result;
  result.partition = Partition::FromLabels(labels);

  if (cache) {
    const GainCacheStats cs = cache->stats();
    stats.gain_evals = cs.misses;
    stats.cache_hits = cs.hits;
    stats.cache_size = cs.size;
  }
  if (volume > 0) {
    double final_sigma = 0.0;
    for (NodeId c = 0; c < n; ++c) {
      if (state.alive(c)) final_sigma += LogLrm(state.summary(c), volume, directed);
    }
    stats.final_sigma_l = final_sigma;
  }
  stats.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  result.stats = stats;
  return result;
}

template <typename Tuple>
ClusteringResult Dispatch(const Graph& graph, const EngineOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  MemberLists members(graph.num_nodes());
  if (options.use_fold) {
    FoldedState state(graph);
    return RunGscarf<Tuple>(graph, options, state, members, start);
  }
  UnfoldedState state(graph, members);
  return RunGscarf<Tuple>(graph, options, state, members, start);
}

}  // namespace

absl::StatusOr<ClusteringResult> ClusterGscarf(const Graph& graph,
                                               const EngineOptions& options) {
  if (graph.num_nodes() == 0) {
    return absl::InvalidArgumentError("cannot cluster an empty graph");
  }
  if (graph.num_alive() != graph.num_nodes()) {
    return absl::InvalidArgumentError(
        "graph contains folded nodes; compact it before clustering");
  }
  if (auto status = ValidateOptions(graph, options); !status.ok()) {
    return status;
  }
  if (graph.directed()) return Dispatch<DirectedStructTuple>(graph, options);
  return Dispatch<StructTuple>(graph, options);
}

}  // namespace lrmclust
