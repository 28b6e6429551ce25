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

#include "lrmclust/partition.h"

#include <algorithm>
#include <vector>

#include "absl/container/flat_hash_map.h"

namespace lrmclust {

Partition Partition::FromLabels(absl::Span<const int64_t> labels) {
  Partition p;
  p.assignment_.resize(labels.size());
  absl::flat_hash_map<int64_t, ClusterLabel> dense;
  for (size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = dense.try_emplace(labels[v], p.num_clusters_);
    if (inserted) ++p.num_clusters_;
    p.assignment_[v] = it->second;
  }
  return p;
}

Partition Partition::FromClusters(
    NodeId num_nodes, const std::vector<std::vector<NodeId>>& clusters) {
  std::vector<int64_t> labels(num_nodes, -1);
  for (size_t c = 0; c < clusters.size(); ++c) {
    for (NodeId v : clusters[c]) labels[v] = static_cast<int64_t>(c);
  }
  return FromLabels(labels);
}

Partition Partition::Singletons(NodeId num_nodes) {
  Partition p;
  p.assignment_.resize(num_nodes);
  for (NodeId v = 0; v < num_nodes; ++v) p.assignment_[v] = v;
  p.num_clusters_ = num_nodes;
  return p;
}

std::vector<std::vector<NodeId>> Partition::Clusters() const {
  std::vector<std::vector<NodeId>> clusters(num_clusters_);
  for (NodeId v = 0; v < num_nodes(); ++v) {
    clusters[assignment_[v]].push_back(v);
  }
  return clusters;
}

std::vector<int64_t> Partition::ClusterSizes() const {
  std::vector<int64_t> sizes(num_clusters_, 0);
  for (ClusterLabel c : assignment_) ++sizes[c];
  return sizes;
}

}  // namespace lrmclust
