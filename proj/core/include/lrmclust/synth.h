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

#ifndef LRMCLUST_SYNTH_H_
#define LRMCLUST_SYNTH_H_

#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "lrmclust/graph.h"
#include "lrmclust/partition.h"

namespace lrmclust {

// Planted-partition benchmark with a mixing parameter.
struct PlantedSpec {
  NodeId n = 1000;
  // Communities of size n / k (the first n % k get one extra node).
  NodeId k = 10;
  // Probability that an edge endpoint is drawn from the whole graph rather
  // than from the node's own community.
  double mu = 0.1;
  double avg_degree = 10.0;
  uint64_t seed = 1;
};

// Chung-Lu graph with expected degrees w_v proportional to
// (v + 1)^(-1 / (gamma - 1)), scaled to the requested mean.
struct PowerLawSpec {
  NodeId n = 1000;
  double gamma = 2.1;
  double avg_degree = 10.0;
  uint64_t seed = 1;
};

struct SyntheticGraph {
  NodeId num_nodes = 0;
  // source < target, sorted, parallel draws merged into the weight.
  std::vector<WeightedEdge> edges;
  Graph graph;
  // Planted communities; empty for Chung-Lu graphs.
  Partition truth;
};

absl::Status ValidatePlantedSpec(const PlantedSpec& spec);
absl::Status ValidatePowerLawSpec(const PowerLawSpec& spec);

// Every node draws avg_degree / 2 edges (the fractional part by a coin
// flip). The other endpoint is uniform over the whole graph with
// probability mu and uniform over the node's own community otherwise;
// self-loops are redrawn. Communities are assigned to a seeded shuffle of
// the node ids.
absl::StatusOr<SyntheticGraph> GeneratePlanted(const PlantedSpec& spec);

// Simple graph with P(u ~ v) = min(1, w_u w_v / sum w), sampled in
// O(n + m) by geometric skipping over the descending weight sequence.
absl::StatusOr<SyntheticGraph> GenerateChungLu(const PowerLawSpec& spec);

}  // namespace lrmclust

#endif  // LRMCLUST_SYNTH_H_
