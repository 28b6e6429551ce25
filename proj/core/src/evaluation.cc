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

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace lrmclust {
namespace {

// -sum (s / n) ln(s / n), summed in ascending size order so that the value
// depends only on the multiset of sizes.
double Entropy(std::vector<int64_t> sizes, double n) {
  std::sort(sizes.begin(), sizes.end());
  double h = 0.0;
  for (int64_t s : sizes) {
    if (s == 0) continue;
    const double p = static_cast<double>(s) / n;
    h -= p * std::log(p);
  }
  return h;
}

}  // namespace

absl::StatusOr<ContingencyTable> ContingencyTable::Build(
    const Partition& rows, const Partition& cols) {
  if (rows.num_nodes() != cols.num_nodes()) {
    return absl::InvalidArgumentError(
        absl::StrCat("partitions cover different node sets (", rows.num_nodes(),
                     " vs ", cols.num_nodes(), " nodes)"));
  }
  ContingencyTable t;
  t.total_ = rows.num_nodes();
  t.row_sums_ = rows.ClusterSizes();
  t.col_sums_ = cols.ClusterSizes();
  absl::flat_hash_map<std::pair<ClusterLabel, ClusterLabel>, int64_t> counts;
  for (NodeId v = 0; v < rows.num_nodes(); ++v) ++counts[{rows[v], cols[v]}];
  t.cells_.reserve(counts.size());
  for (const auto& [key, count] : counts) {
    t.cells_.push_back({key.first, key.second, count});
  }
  std::sort(t.cells_.begin(), t.cells_.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  return t;
}

absl::StatusOr<double> Nmi(const Partition& p, const Partition& q) {
  auto table = ContingencyTable::Build(p, q);
  if (!table.ok()) return table.status();
  const double n = static_cast<double>(table->total());
  const double h = Entropy(table->row_sums(), n) + Entropy(table->col_sums(), n);
  if (h == 0.0) return 1.0;

  // Each term depends on (n_ij, a_i, b_j) only; summing in a canonical order
  // of those keys makes I independent of labels and of argument order.
  struct Term {
    int64_t count;
    int64_t lo;
    int64_t hi;
  };
  std::vector<Term> terms;
  terms.reserve(table->cells().size());
  for (const auto& cell : table->cells()) {
    const int64_t a = table->row_sums()[cell.row];
    const int64_t b = table->col_sums()[cell.col];
    terms.push_back({cell.count, std::min(a, b), std::max(a, b)});
  }
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    return std::tie(x.count, x.lo, x.hi) < std::tie(y.count, y.lo, y.hi);
  });
  double mi = 0.0;
  for (const Term& t : terms) {
    const double c = static_cast<double>(t.count);
    mi += (c / n) * std::log(n * c / (static_cast<double>(t.lo) *
                                      static_cast<double>(t.hi)));
  }
  // Guard rounding at the [0, 1] boundaries.
  return std::clamp(2.0 * mi / h, 0.0, 1.0);
}

SizeStats ComputeSizeStats(const Partition& p) {
  SizeStats stats;
  stats.count = p.num_clusters();
  if (stats.count == 0) return stats;
  const std::vector<int64_t> sizes = p.ClusterSizes();
  stats.mean_size =
      static_cast<double>(p.num_nodes()) / static_cast<double>(stats.count);
  stats.max_size = *std::max_element(sizes.begin(), sizes.end());
  stats.min_size = *std::min_element(sizes.begin(), sizes.end());
  return stats;
}

absl::StatusOr<Partition> ResolveOverlappingTruth(
    const std::vector<std::vector<int64_t>>& memberships, const Graph& graph) {
  const NodeId n = graph.num_nodes();
  if (memberships.size() != n) {
    return absl::InvalidArgumentError(
        absl::StrCat("memberships cover ", memberships.size(),
                     " nodes but the graph has ", n));
  }
  constexpr int64_t kUnresolved = -1;
  std::vector<int64_t> resolved(n, kUnresolved);
  for (NodeId v = 0; v < n; ++v) {
    if (memberships[v].empty()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "node '", graph.label(v), "' belongs to no ground-truth community"));
    }
    const auto [lo, hi] =
        std::minmax_element(memberships[v].begin(), memberships[v].end());
    if (*lo < 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "node '", graph.label(v), "': negative community id ", *lo));
    }
    if (*lo == *hi) resolved[v] = *lo;
  }

  absl::flat_hash_map<int64_t, int64_t> votes;
  for (NodeId v = 0; v < n; ++v) {
    if (resolved[v] != kUnresolved) continue;
    votes.clear();
    for (int64_t c : memberships[v]) votes.emplace(c, 0);
    auto count = [&](NodeId u) {
      if (resolved[u] == kUnresolved) return;
      auto it = votes.find(resolved[u]);
      if (it != votes.end()) ++it->second;
    };
    for (const auto& [u, w] : graph.out_neighbors(v)) count(u);
    for (const auto& [u, w] : graph.in_neighbors(v)) {
      // A reciprocal arc is the same neighbor.
      if (!graph.out_neighbors(v).contains(u)) count(u);
    }
    int64_t best = kUnresolved;
    int64_t best_votes = -1;
    for (const auto& [c, n_votes] : votes) {
      if (n_votes > best_votes || (n_votes == best_votes && c < best)) {
        best = c;
        best_votes = n_votes;
      }
    }
    resolved[v] = best;
  }
  return Partition::FromLabels(resolved);
}

}  // namespace lrmclust
