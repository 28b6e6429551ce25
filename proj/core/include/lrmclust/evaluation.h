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

#ifndef LRMCLUST_EVALUATION_H_
#define LRMCLUST_EVALUATION_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "lrmclust/graph.h"
#include "lrmclust/partition.h"

namespace lrmclust {

// Identifier written to reports next to every NMI value.
inline constexpr std::string_view kNmiFormula = "2I/(H1+H2),natural-log";

// Sparse co-membership counts of two partitions of the same node set.
class ContingencyTable {
 public:
  struct Cell {
    ClusterLabel row = 0;
    ClusterLabel col = 0;
    int64_t count = 0;
  };

  static absl::StatusOr<ContingencyTable> Build(const Partition& rows,
                                                const Partition& cols);

  int64_t total() const { return total_; }
  const std::vector<int64_t>& row_sums() const { return row_sums_; }
  const std::vector<int64_t>& col_sums() const { return col_sums_; }
  // Non-zero cells ordered by (row, col).
  const std::vector<Cell>& cells() const { return cells_; }

 private:
  int64_t total_ = 0;
  std::vector<int64_t> row_sums_;
  std::vector<int64_t> col_sums_;
  std::vector<Cell> cells_;
};

// Normalized mutual information 2 I(P;Q) / (H(P) + H(Q)), natural logs.
// Returns 1 when both partitions are trivial (H(P) + H(Q) = 0). The result
// is invariant under relabeling and symmetric, both bit for bit.
absl::StatusOr<double> Nmi(const Partition& p, const Partition& q);

struct SizeStats {
  int64_t count = 0;
  double mean_size = 0.0;
  int64_t max_size = 0;
  int64_t min_size = 0;
};

SizeStats ComputeSizeStats(const Partition& p);

// Collapses overlapping ground truth into a partition. memberships[v] lists
// the candidate community ids of node v. Nodes with a single candidate keep
// it. Multi-candidate nodes are resolved in id order to the candidate that
// holds the most of their neighbors, counting each neighbor under its
// assignment so far (unresolved neighbors do not count); ties go to the
// smallest community id. Output labels are dense.
absl::StatusOr<Partition> ResolveOverlappingTruth(
    const std::vector<std::vector<int64_t>>& memberships, const Graph& graph);

}  // namespace lrmclust

#endif  // LRMCLUST_EVALUATION_H_
