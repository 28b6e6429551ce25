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

#ifndef LRMCLUST_PARTITION_H_
#define LRMCLUST_PARTITION_H_

#include <cstdint>
#include <vector>

#include "absl/types/span.h"
#include "lrmclust/graph.h"

namespace lrmclust {

using ClusterLabel = uint32_t;

// Assignment of nodes [0, n) to dense cluster labels [0, k).
class Partition {
 public:
  Partition() = default;

  // Relabels arbitrary integer labels densely in order of first appearance
  // along node ids.
  static Partition FromLabels(absl::Span<const int64_t> labels);
  // Builds a partition from disjoint member lists covering [0, n). Labels
  // are assigned in order of each cluster's smallest member.
  static Partition FromClusters(NodeId num_nodes,
                                const std::vector<std::vector<NodeId>>& clusters);
  static Partition Singletons(NodeId num_nodes);

  NodeId num_nodes() const { return static_cast<NodeId>(assignment_.size()); }
  ClusterLabel num_clusters() const { return num_clusters_; }
  ClusterLabel operator[](NodeId v) const { return assignment_[v]; }
  const std::vector<ClusterLabel>& assignment() const { return assignment_; }

  // Member lists indexed by label, each in ascending node order.
  std::vector<std::vector<NodeId>> Clusters() const;
  std::vector<int64_t> ClusterSizes() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.num_clusters_ == b.num_clusters_ &&
           a.assignment_ == b.assignment_;
  }

 private:
  std::vector<ClusterLabel> assignment_;
  ClusterLabel num_clusters_ = 0;
};

}  // namespace lrmclust

#endif  // LRMCLUST_PARTITION_H_
