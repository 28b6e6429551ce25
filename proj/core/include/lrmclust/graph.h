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

#ifndef LRMCLUST_GRAPH_H_
#define LRMCLUST_GRAPH_H_

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "absl/types/span.h"

namespace lrmclust {

// Dense node index in [0, num_nodes()).
using NodeId = uint32_t;
// Integer edge multiplicity. Weights stay integral so that structural tuples
// built from them compare exactly.
using Weight = int64_t;

inline constexpr NodeId kInvalidNode = std::numeric_limits<NodeId>::max();

struct WeightedEdge {
  NodeId source = 0;
  NodeId target = 0;
  Weight weight = 1;
};

// An input edge with arbitrary string labels. `line` is the 1-based source
// line used in diagnostics (0 when the edge did not come from a file).
struct LabeledEdge {
  std::string source;
  std::string target;
  Weight weight = 1;
  int64_t line = 0;
};

struct BuildOptions {
  bool directed = false;
  // When false, input self-loops are rejected. When true, a self-loop is
  // absorbed into the node's internal weight.
  bool allow_self_loops = false;
};

using NeighborMap = absl::flat_hash_map<NodeId, Weight>;

// Weighted graph supporting in-place contraction of two nodes ("folding").
//
// Self-loop convention: self_loop(v) holds the internal stub count of v. In
// undirected mode every internal unit edge contributes 2 stubs, so the value
// is even; in directed mode every internal arc contributes 1. The self-loop
// is counted once in degree(v), which keeps volume() invariant under Fold().
//
// volume() is the sum of degrees: 2m for undirected graphs, the number of
// arcs m for directed graphs.
//
// Folded-away nodes are tombstoned. Ids are never reused, so worklists
// holding node ids stay valid across folds.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from labeled edges, remapping labels densely in order of
  // first appearance. Duplicate edges have their weights summed.
  static absl::StatusOr<Graph> FromLabeledEdges(
      absl::Span<const LabeledEdge> edges, const BuildOptions& options = {});

  // Builds a graph on nodes [0, num_nodes). Labels default to the decimal
  // node ids.
  static absl::StatusOr<Graph> FromEdges(NodeId num_nodes,
                                         absl::Span<const WeightedEdge> edges,
                                         const BuildOptions& options = {});

  NodeId num_nodes() const { return static_cast<NodeId>(alive_.size()); }
  NodeId num_alive() const { return num_alive_; }
  bool is_alive(NodeId v) const { return alive_[v] != 0; }
  bool directed() const { return directed_; }
  Weight volume() const { return volume_; }
  // Weighted edge (undirected) or arc (directed) count.
  Weight num_edges() const { return directed_ ? volume_ : volume_ / 2; }

  Weight self_loop(NodeId v) const { return self_loop_[v]; }
  // Undirected degree, or in+out degree for directed graphs.
  Weight degree(NodeId v) const {
    return directed_ ? in_degree_[v] + out_degree_[v] : out_degree_[v];
  }
  Weight in_degree(NodeId v) const {
    return directed_ ? in_degree_[v] : out_degree_[v];
  }
  Weight out_degree(NodeId v) const { return out_degree_[v]; }

  // Checked variants of degree() / (in_degree(), out_degree()).
  absl::StatusOr<Weight> Degree(NodeId v) const;
  absl::StatusOr<std::pair<Weight, Weight>> DirectedDegree(NodeId v) const;

  // Undirected neighbors, or out-neighbors in directed mode. Never contains v.
  const NeighborMap& neighbors(NodeId v) const { return out_[v]; }
  const NeighborMap& out_neighbors(NodeId v) const { return out_[v]; }
  // Empty in undirected mode.
  const NeighborMap& in_neighbors(NodeId v) const;

  // Number of adjacency entries of v: |Γ(v)| undirected, |out| + |in|
  // directed. Fold() merges the smaller side into the larger.
  size_t adjacency_size(NodeId v) const {
    return out_[v].size() + (directed_ ? in_[v].size() : 0);
  }

  // Weight of edge {u, v} (undirected) or arc u->v (directed); 0 if absent.
  // For u == v returns self_loop(u).
  Weight EdgeWeight(NodeId u, NodeId v) const;

  // Contracts alive nodes i != j into one node and returns its id. The
  // survivor is the endpoint with the larger adjacency (ties: smaller id);
  // the other endpoint is tombstoned. Weight rules:
  //   self_loop(x) = 2 W(i,j) + self_loop(i) + self_loop(j)   (undirected)
  //   self_loop(x) = W(i->j) + W(j->i) + self_loop(i) + self_loop(j)
  //   W(x,k)       = W(i,k) + W(j,k)
  // Costs O(adjacency of the absorbed endpoint).
  absl::StatusOr<NodeId> Fold(NodeId i, NodeId j);

  // Id of the node Fold(i, j) would keep. Both must be alive.
  NodeId FoldSurvivor(NodeId i, NodeId j) const;

  // Returns a copy holding only the alive nodes, renumbered densely in id
  // order. If `mapping` is non-null it receives old id -> new id
  // (kInvalidNode for dead nodes). Labels are not carried over.
  Graph Compact(std::vector<NodeId>* mapping = nullptr) const;

  // Label of an original node.
  std::string label(NodeId v) const;
  // Labels in node-id order (empty when built from integer ids).
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  void Resize(NodeId n);
  void AddEdge(NodeId u, NodeId v, Weight w);

  bool directed_ = false;
  NodeId num_alive_ = 0;
  Weight volume_ = 0;
  std::vector<uint8_t> alive_;
  std::vector<Weight> self_loop_;
  // Undirected mode stores the degree in out_degree_ and leaves in_degree_
  // empty.
  std::vector<Weight> out_degree_;
  std::vector<Weight> in_degree_;
  std::vector<NeighborMap> out_;
  std::vector<NeighborMap> in_;
  std::vector<std::string> labels_;
};

}  // namespace lrmclust

#endif  // LRMCLUST_GRAPH_H_
