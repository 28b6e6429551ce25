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

#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace lrmclust {
namespace {

const NeighborMap& EmptyNeighborMap() {
  static const NeighborMap* const kEmpty = new NeighborMap();
  return *kEmpty;
}

std::string EdgeLocation(int64_t line, size_t index) {
  if (line > 0) return absl::StrCat("line ", line);
  return absl::StrCat("edge #", index);
}

// Moves the entry for `from` in `map` onto `to`.
void Rekey(NeighborMap& map, NodeId from, NodeId to) {
  auto it = map.find(from);
  if (it == map.end()) return;
  Weight w = it->second;
  map.erase(it);
  map[to] += w;
}

}  // namespace

void Graph::Resize(NodeId n) {
  num_alive_ = n;
  alive_.assign(n, 1);
  self_loop_.assign(n, 0);
  out_degree_.assign(n, 0);
  out_.assign(n, NeighborMap());
  if (directed_) {
    in_degree_.assign(n, 0);
    in_.assign(n, NeighborMap());
  } else {
    in_degree_.clear();
    in_.clear();
  }
}

void Graph::AddEdge(NodeId u, NodeId v, Weight w) {
  if (u == v) {
    if (directed_) {
      self_loop_[u] += w;
      out_degree_[u] += w;
      in_degree_[u] += w;
      volume_ += w;
    } else {
      self_loop_[u] += 2 * w;
      out_degree_[u] += 2 * w;
      volume_ += 2 * w;
    }
    return;
  }
  if (directed_) {
    out_[u][v] += w;
    in_[v][u] += w;
    out_degree_[u] += w;
    in_degree_[v] += w;
    volume_ += w;
  } else {
    out_[u][v] += w;
    out_[v][u] += w;
    out_degree_[u] += w;
    out_degree_[v] += w;
    volume_ += 2 * w;
  }
}

absl::StatusOr<Graph> Graph::FromLabeledEdges(
    absl::Span<const LabeledEdge> edges, const BuildOptions& options) {
  absl::flat_hash_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<WeightedEdge> dense;
  dense.reserve(edges.size());
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.try_emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };
  for (size_t idx = 0; idx < edges.size(); ++idx) {
    const LabeledEdge& e = edges[idx];
    if (e.source.empty() || e.target.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat(EdgeLocation(e.line, idx), ": missing endpoint"));
    }
    if (e.weight <= 0) {
      return absl::InvalidArgumentError(
          absl::StrCat(EdgeLocation(e.line, idx),
                       ": edge weight must be a positive integer, got ",
                       e.weight));
    }
    if (e.source == e.target && !options.allow_self_loops) {
      return absl::InvalidArgumentError(absl::StrCat(
          EdgeLocation(e.line, idx), ": self-loop on node '", e.source,
          "' (self-loops are rejected unless explicitly allowed)"));
    }
    NodeId u = intern(e.source);
    NodeId v = intern(e.target);
    dense.push_back({u, v, e.weight});
  }
  auto graph = FromEdges(static_cast<NodeId>(labels.size()), dense, options);
  if (!graph.ok()) return graph.status();
  graph->labels_ = std::move(labels);
  return graph;
}

absl::StatusOr<Graph> Graph::FromEdges(NodeId num_nodes,
                                       absl::Span<const WeightedEdge> edges,
                                       const BuildOptions& options) {
  Graph g;
  g.directed_ = options.directed;
  g.Resize(num_nodes);
  for (size_t idx = 0; idx < edges.size(); ++idx) {
    const WeightedEdge& e = edges[idx];
    if (e.source >= num_nodes || e.target >= num_nodes) {
      return absl::OutOfRangeError(absl::StrCat(
          "edge #", idx, ": endpoint out of range [0, ", num_nodes, ")"));
    }
    if (e.weight <= 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "edge #", idx, ": edge weight must be a positive integer, got ",
          e.weight));
    }
    if (e.source == e.target && !options.allow_self_loops) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge #", idx, ": self-loop on node ", e.source));
    }
    g.AddEdge(e.source, e.target, e.weight);
  }
  return g;
}

absl::StatusOr<Weight> Graph::Degree(NodeId v) const {
  if (v >= num_nodes()) {
    return absl::OutOfRangeError(
        absl::StrCat("node ", v, " out of range [0, ", num_nodes(), ")"));
  }
  return degree(v);
}

absl::StatusOr<std::pair<Weight, Weight>> Graph::DirectedDegree(
    NodeId v) const {
  if (v >= num_nodes()) {
    return absl::OutOfRangeError(
        absl::StrCat("node ", v, " out of range [0, ", num_nodes(), ")"));
  }
  return std::make_pair(in_degree(v), out_degree(v));
}

const NeighborMap& Graph::in_neighbors(NodeId v) const {
  return directed_ ? in_[v] : EmptyNeighborMap();
}

Weight Graph::EdgeWeight(NodeId u, NodeId v) const {
  if (u == v) return self_loop_[u];
  auto it = out_[u].find(v);
  return it == out_[u].end() ? 0 : it->second;
}

NodeId Graph::FoldSurvivor(NodeId i, NodeId j) const {
  size_t size_i = adjacency_size(i);
  size_t size_j = adjacency_size(j);
  if (size_i != size_j) return size_i > size_j ? i : j;
  return std::min(i, j);
}

absl::StatusOr<NodeId> Graph::Fold(NodeId i, NodeId j) {
  if (i >= num_nodes() || j >= num_nodes()) {
    return absl::OutOfRangeError(absl::StrCat(
        "fold(", i, ", ", j, "): node out of range [0, ", num_nodes(), ")"));
  }
  if (i == j) {
    return absl::InvalidArgumentError(
        absl::StrCat("fold(", i, ", ", j, "): endpoints must differ"));
  }
  if (!is_alive(i) || !is_alive(j)) {
    return absl::FailedPreconditionError(absl::StrCat(
        "fold(", i, ", ", j, "): node ", is_alive(i) ? j : i,
        " was already folded away"));
  }
  const NodeId keep = FoldSurvivor(i, j);
  const NodeId drop = keep == i ? j : i;

  if (directed_) {
    Weight between = EdgeWeight(keep, drop) + EdgeWeight(drop, keep);
    self_loop_[keep] += self_loop_[drop] + between;
    out_[keep].erase(drop);
    in_[keep].erase(drop);
    for (const auto& [k, w] : out_[drop]) {
      if (k == keep) continue;
      out_[keep][k] += w;
      Rekey(in_[k], drop, keep);
    }
    for (const auto& [k, w] : in_[drop]) {
      if (k == keep) continue;
      in_[keep][k] += w;
      Rekey(out_[k], drop, keep);
    }
    in_degree_[keep] += in_degree_[drop];
    in_degree_[drop] = 0;
    NeighborMap().swap(in_[drop]);
  } else {
    Weight between = EdgeWeight(keep, drop);
    self_loop_[keep] += self_loop_[drop] + 2 * between;
    out_[keep].erase(drop);
    for (const auto& [k, w] : out_[drop]) {
      if (k == keep) continue;
      out_[keep][k] += w;
      Rekey(out_[k], drop, keep);
    }
  }
  out_degree_[keep] += out_degree_[drop];
  out_degree_[drop] = 0;
  self_loop_[drop] = 0;
  NeighborMap().swap(out_[drop]);
  alive_[drop] = 0;
  --num_alive_;
  return keep;
}

Graph Graph::Compact(std::vector<NodeId>* mapping) const {
  std::vector<NodeId> remap(num_nodes(), kInvalidNode);
  NodeId next = 0;
  for (NodeId v = 0; v < num_nodes(); ++v) {
    if (is_alive(v)) remap[v] = next++;
  }
  Graph g;
  g.directed_ = directed_;
  g.Resize(next);
  g.volume_ = volume_;
  for (NodeId v = 0; v < num_nodes(); ++v) {
    if (!is_alive(v)) continue;
    const NodeId nv = remap[v];
    g.self_loop_[nv] = self_loop_[v];
    g.out_degree_[nv] = out_degree_[v];
    g.out_[nv].reserve(out_[v].size());
    for (const auto& [k, w] : out_[v]) g.out_[nv].emplace(remap[k], w);
    if (directed_) {
      g.in_degree_[nv] = in_degree_[v];
      g.in_[nv].reserve(in_[v].size());
      for (const auto& [k, w] : in_[v]) g.in_[nv].emplace(remap[k], w);
    }
  }
  if (mapping != nullptr) *mapping = std::move(remap);
  return g;
}

std::string Graph::label(NodeId v) const {
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v);
}

}  // namespace lrmclust
