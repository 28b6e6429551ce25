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

#ifndef LRMCLUST_IO_H_
#define LRMCLUST_IO_H_

#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "lrmclust/graph.h"
#include "lrmclust/partition.h"

// Text formats. All readers accept CRLF line endings, runs of spaces/tabs
// as separators, blank lines, and '#' comment lines, and report malformed
// input with 1-based line numbers.
//
//   edge list    "u v [w]"          labels are arbitrary tokens, w defaults
//                                   to 1
//   communities  "u v w ..."        one community per line; a node may
//                                   appear on several lines
//   partition    "label<TAB>id"     one line per node, dense ids
//   report       "key=value"        one field per line, insertion order
namespace lrmclust {

absl::StatusOr<std::vector<LabeledEdge>> ParseEdgeList(std::istream& in);
absl::StatusOr<Graph> LoadGraph(const std::string& path,
                                const BuildOptions& options = {});
// Weights equal to 1 are omitted.
void WriteEdgeList(std::ostream& out, absl::Span<const WeightedEdge> edges);

absl::StatusOr<std::vector<std::vector<std::string>>> ParseCommunities(
    std::istream& in);
absl::StatusOr<std::vector<std::vector<std::string>>> ReadCommunityFile(
    const std::string& path);
// One line per cluster, members in node order.
void WriteCommunities(std::ostream& out, const Partition& partition,
                      const Graph& graph);

struct LabeledAssignment {
  std::string label;
  int64_t cluster = 0;
  int64_t line = 0;
};

absl::StatusOr<std::vector<LabeledAssignment>> ParsePartition(std::istream& in);
absl::StatusOr<std::vector<LabeledAssignment>> ReadPartitionFile(
    const std::string& path);
// Node labels come from `graph`.
void WritePartition(std::ostream& out, const Graph& graph,
                    const Partition& partition);

// Maps labeled assignments onto nodes [0, labels.size()). Every label must
// be assigned exactly once and no foreign label may appear; the error names
// the first offending label.
absl::StatusOr<Partition> PartitionFromAssignments(
    absl::Span<const LabeledAssignment> assignments,
    absl::Span<const std::string> labels);

// Ordered key/value record. Doubles are written with 17 significant digits
// so that they read back exactly.
class Report {
 public:
  void Set(std::string_view key, std::string_view value);
  void Set(std::string_view key, const char* value) {
    Set(key, std::string_view(value));
  }
  void Set(std::string_view key, double value);
  void Set(std::string_view key, bool value);
  template <std::integral T>
    requires(!std::same_as<T, bool>)
  void Set(std::string_view key, T value) {
    SetInteger(key, static_cast<int64_t>(value));
  }

  // Value of `key`, or nullptr.
  const std::string* Find(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& fields() const {
    return fields_;
  }

  void Write(std::ostream& out) const;
  absl::Status WriteFile(const std::string& path) const;
  static absl::StatusOr<Report> Parse(std::istream& in);

 private:
  void SetInteger(std::string_view key, int64_t value);

  std::vector<std::pair<std::string, std::string>> fields_;
};

// Opens `path` for writing; used by the CLI writers.
absl::Status WriteTextFile(const std::string& path,
                           const std::function<void(std::ostream&)>& writer);

}  // namespace lrmclust

#endif  // LRMCLUST_IO_H_
