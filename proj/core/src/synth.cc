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

#include "lrmclust/synth.h"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "lrmclust/random.h"

namespace lrmclust {
namespace {

// Sorts, orients source < target and merges duplicates by weight.
std::vector<WeightedEdge> Normalize(std::vector<WeightedEdge> edges) {
  for (auto& e : edges) {
    if (e.source > e.target) std::swap(e.source, e.target);
  }
  std::sort(edges.begin(), edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return std::tie(a.source, a.target) < std::tie(b.source, b.target);
            });
  std::vector<WeightedEdge> merged;
  merged.reserve(edges.size());
  for (const auto& e : edges) {
    if (!merged.empty() && merged.back().source == e.source &&
        merged.back().target == e.target) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }
  return merged;
}

absl::StatusOr<SyntheticGraph> Assemble(NodeId n,
                                        std::vector<WeightedEdge> edges) {
  SyntheticGraph out;
  out.num_nodes = n;
  out.edges = Normalize(std::move(edges));
  auto graph = Graph::FromEdges(n, out.edges);
  if (!graph.ok()) return graph.status();
  out.graph = *std::move(graph);
  return out;
}

}  // namespace

absl::Status ValidatePlantedSpec(const PlantedSpec& spec) {
  if (spec.n < 2) {
    return absl::InvalidArgumentError("planted: n must be at least 2");
  }
  if (spec.k < 1 || spec.k > spec.n) {
    return absl::InvalidArgumentError(
        absl::StrCat("planted: k must lie in [1, n], got ", spec.k));
  }
  if (!(spec.mu >= 0.0 && spec.mu <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("planted: mu must lie in [0, 1], got ", spec.mu));
  }
  if (!std::isfinite(spec.avg_degree) || spec.avg_degree < 0.0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "planted: avg_degree must be non-negative, got ", spec.avg_degree));
  }
  if (spec.avg_degree > static_cast<double>(spec.n - 1)) {
    return absl::InvalidArgumentError(
        absl::StrCat("planted: avg_degree ", spec.avg_degree,
                     " exceeds n - 1, implying an edge probability above 1"));
  }
  const double intra_degree = (1.0 - spec.mu) * spec.avg_degree;
  const NodeId smallest = spec.n / spec.k;
  if (intra_degree > 0.0 && intra_degree > static_cast<double>(smallest - 1)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "planted: expected intra-community degree ", intra_degree,
        " exceeds community size - 1 = ", smallest - 1,
        ", implying an edge probability above 1"));
  }
  return absl::OkStatus();
}

absl::Status ValidatePowerLawSpec(const PowerLawSpec& spec) {
  if (spec.n < 1) {
    return absl::InvalidArgumentError("chung-lu: n must be at least 1");
  }
  if (!(spec.gamma > 1.0) || !std::isfinite(spec.gamma)) {
    return absl::InvalidArgumentError(
        absl::StrCat("chung-lu: gamma must exceed 1, got ", spec.gamma));
  }
  if (!std::isfinite(spec.avg_degree) || spec.avg_degree < 0.0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "chung-lu: avg_degree must be non-negative, got ", spec.avg_degree));
  }
  return absl::OkStatus();
}

absl::StatusOr<SyntheticGraph> GeneratePlanted(const PlantedSpec& spec) {
  if (auto status = ValidatePlantedSpec(spec); !status.ok()) return status;
  Rng rng(spec.seed);
  const NodeId n = spec.n;

  std::vector<NodeId> order(n);
  for (NodeId v = 0; v < n; ++v) order[v] = v;
  rng.Shuffle(order);
  std::vector<std::vector<NodeId>> communities(spec.k);
  std::vector<NodeId> community_of(n);
  const NodeId base = n / spec.k;
  const NodeId extra = n % spec.k;
  NodeId next = 0;
  for (NodeId c = 0; c < spec.k; ++c) {
    const NodeId size = base + (c < extra ? 1 : 0);
    for (NodeId i = 0; i < size; ++i) {
      const NodeId v = order[next++];
      communities[c].push_back(v);
      community_of[v] = c;
    }
  }

  const double half = spec.avg_degree / 2.0;
  const auto whole = static_cast<int64_t>(std::floor(half));
  const double fraction = half - static_cast<double>(whole);
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<size_t>(static_cast<double>(n) * half) + n);
  for (NodeId u = 0; u < n; ++u) {
    const int64_t draws = whole + (rng.Bernoulli(fraction) ? 1 : 0);
    const auto& own = communities[community_of[u]];
    for (int64_t d = 0; d < draws; ++d) {
      NodeId v;
      if (rng.Bernoulli(spec.mu)) {
        v = static_cast<NodeId>(rng.Uniform(n - 1));
        if (v >= u) ++v;
      } else {
        // Validation guarantees |own| >= 2 whenever this branch can run.
        do {
          v = own[rng.Uniform(own.size())];
        } while (v == u);
      }
      edges.push_back({u, v, 1});
    }
  }

  auto out = Assemble(n, std::move(edges));
  if (!out.ok()) return out;
  std::vector<int64_t> labels(community_of.begin(), community_of.end());
  out->truth = Partition::FromLabels(labels);
  return out;
}

absl::StatusOr<SyntheticGraph> GenerateChungLu(const PowerLawSpec& spec) {
  if (auto status = ValidatePowerLawSpec(spec); !status.ok()) return status;
  Rng rng(spec.seed);
  const NodeId n = spec.n;
  const double exponent = -1.0 / (spec.gamma - 1.0);

  std::vector<double> weight(n);
  double raw_sum = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    weight[v] = std::pow(static_cast<double>(v) + 1.0, exponent);
    raw_sum += weight[v];
  }
  const double scale = spec.avg_degree * static_cast<double>(n) / raw_sum;
  double total = 0.0;
  for (double& w : weight) {
    w *= scale;
    total += w;
  }

  std::vector<WeightedEdge> edges;
  if (total > 0.0) {
    edges.reserve(static_cast<size_t>(spec.avg_degree * n / 2.0 * 1.1) + 16);
    // Weights are non-increasing in v, so along a row the acceptance
    // probability only falls; skip ahead geometrically with the current
    // upper bound p and thin with q / p.
    for (NodeId u = 0; u + 1 < n; ++u) {
      NodeId v = u + 1;
      double p = std::min(weight[u] * weight[v] / total, 1.0);
      while (v < n && p > 0.0) {
        if (p < 1.0) {
          const double r = 1.0 - rng.UniformReal();  // (0, 1]
          const double skip = std::floor(std::log(r) / std::log1p(-p));
          if (skip >= static_cast<double>(n - v)) break;
          v += static_cast<NodeId>(skip);
        }
        const double q = std::min(weight[u] * weight[v] / total, 1.0);
        if (rng.UniformReal() < q / p) edges.push_back({u, v, 1});
        p = q;
        ++v;
      }
    }
  }
  return Assemble(n, std::move(edges));
}

}  // namespace lrmclust
