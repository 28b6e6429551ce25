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

#include "lrmclust/io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"

namespace lrmclust {
namespace {

// Reads lines, dropping a trailing '\r', and hands the whitespace-separated
// fields of every non-blank, non-comment line to `fn(line_number, fields)`.
template <typename Fn>
absl::Status ForEachRecord(std::istream& in, Fn&& fn) {
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<absl::string_view> fields =
        absl::StrSplit(line, absl::ByAnyChar(" \t"), absl::SkipEmpty());
    if (fields.empty() || fields.front().front() == '#') continue;
    if (auto status = fn(line_number, fields); !status.ok()) return status;
  }
  if (in.bad()) return absl::DataLossError("read error");
  return absl::OkStatus();
}

absl::Status LineError(int64_t line, absl::string_view message) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", message));
}

template <typename T, typename Parse>
absl::StatusOr<T> ReadFile(const std::string& path, Parse&& parse) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  auto parsed = parse(in);
  if (!parsed.ok()) {
    return absl::Status(parsed.status().code(),
                        absl::StrCat(path, ": ", parsed.status().message()));
  }
  return parsed;
}

}  // namespace

absl::StatusOr<std::vector<LabeledEdge>> ParseEdgeList(std::istream& in) {
  std::vector<LabeledEdge> edges;
  auto status = ForEachRecord(
      in, [&](int64_t line, const std::vector<absl::string_view>& fields) {
        if (fields.size() < 2 || fields.size() > 3) {
          return LineError(line, absl::StrCat("expected 'u v [w]', got ",
                                              fields.size(), " field(s)"));
        }
        LabeledEdge e{std::string(fields[0]), std::string(fields[1]), 1, line};
        if (fields.size() == 3 && !absl::SimpleAtoi(fields[2], &e.weight)) {
          return LineError(line, absl::StrCat("weight '", fields[2],
                                              "' is not an integer"));
        }
        if (e.weight <= 0) {
          return LineError(line, absl::StrCat("weight must be positive, got ",
                                              e.weight));
        }
        edges.push_back(std::move(e));
        return absl::OkStatus();
      });
  if (!status.ok()) return status;
  return edges;
}

absl::StatusOr<Graph> LoadGraph(const std::string& path,
                                const BuildOptions& options) {
  auto edges = ReadFile<std::vector<LabeledEdge>>(
      path, [](std::istream& in) { return ParseEdgeList(in); });
  if (!edges.ok()) return edges.status();
  auto graph = Graph::FromLabeledEdges(*edges, options);
  if (!graph.ok()) {
    return absl::Status(graph.status().code(),
                        absl::StrCat(path, ": ", graph.status().message()));
  }
  return graph;
}

void WriteEdgeList(std::ostream& out, absl::Span<const WeightedEdge> edges) {
  for (const auto& e : edges) {
    out << e.source << '\t' << e.target;
    if (e.weight != 1) out << '\t' << e.weight;
    out << '\n';
  }
}

absl::StatusOr<std::vector<std::vector<std::string>>> ParseCommunities(
    std::istream& in) {
  std::vector<std::vector<std::string>> communities;
  auto status = ForEachRecord(
      in, [&](int64_t, const std::vector<absl::string_view>& fields) {
        auto& c = communities.emplace_back();
        c.reserve(fields.size());
        for (auto f : fields) c.emplace_back(f);
        return absl::OkStatus();
      });
  if (!status.ok()) return status;
  return communities;
}

absl::StatusOr<std::vector<std::vector<std::string>>> ReadCommunityFile(
    const std::string& path) {
  return ReadFile<std::vector<std::vector<std::string>>>(
      path, [](std::istream& in) { return ParseCommunities(in); });
}

void WriteCommunities(std::ostream& out, const Partition& partition,
                      const Graph& graph) {
  for (const auto& members : partition.Clusters()) {
    for (size_t i = 0; i < members.size(); ++i) {
      if (i > 0) out << '\t';
      out << graph.label(members[i]);
    }
    out << '\n';
  }
}

absl::StatusOr<std::vector<LabeledAssignment>> ParsePartition(
    std::istream& in) {
  std::vector<LabeledAssignment> assignments;
  auto status = ForEachRecord(
      in, [&](int64_t line, const std::vector<absl::string_view>& fields) {
        if (fields.size() != 2) {
          return LineError(line, absl::StrCat("expected 'label<TAB>id', got ",
                                              fields.size(), " field(s)"));
        }
        LabeledAssignment a{std::string(fields[0]), 0, line};
        if (!absl::SimpleAtoi(fields[1], &a.cluster) || a.cluster < 0) {
          return LineError(line, absl::StrCat("cluster id '", fields[1],
                                              "' is not a non-negative integer"));
        }
        assignments.push_back(std::move(a));
        return absl::OkStatus();
      });
  if (!status.ok()) return status;
  return assignments;
}

absl::StatusOr<std::vector<LabeledAssignment>> ReadPartitionFile(
    const std::string& path) {
  return ReadFile<std::vector<LabeledAssignment>>(
      path, [](std::istream& in) { return ParsePartition(in); });
}

void WritePartition(std::ostream& out, const Graph& graph,
                    const Partition& partition) {
  for (NodeId v = 0; v < partition.num_nodes(); ++v) {
    out << graph.label(v) << '\t' << partition[v] << '\n';
  }
}

absl::StatusOr<Partition> PartitionFromAssignments(
    absl::Span<const LabeledAssignment> assignments,
    absl::Span<const std::string> labels) {
  absl::flat_hash_map<std::string_view, NodeId> index;
  index.reserve(labels.size());
  for (NodeId v = 0; v < labels.size(); ++v) index.emplace(labels[v], v);
  std::vector<int64_t> cluster(labels.size(), -1);
  for (const auto& a : assignments) {
    auto it = index.find(a.label);
    if (it == index.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", a.line, ": label '", a.label,
                       "' is not in the node universe"));
    }
    if (cluster[it->second] != -1) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", a.line, ": label '", a.label, "' assigned twice"));
    }
    cluster[it->second] = a.cluster;
  }
  for (NodeId v = 0; v < labels.size(); ++v) {
    if (cluster[v] == -1) {
      return absl::InvalidArgumentError(
          absl::StrCat("label '", labels[v], "' has no assignment"));
    }
  }
  return Partition::FromLabels(cluster);
}

void Report::Set(std::string_view key, std::string_view value) {
  for (auto& [k, v] : fields_) {
    if (k == key) {
      v = std::string(value);
      return;
    }
  }
  fields_.emplace_back(std::string(key), std::string(value));
}

void Report::SetInteger(std::string_view key, int64_t value) {
  Set(key, std::string_view(absl::StrCat(value)));
}

void Report::Set(std::string_view key, double value) {
  Set(key, std::string_view(absl::StrFormat("%.17g", value)));
}

void Report::Set(std::string_view key, bool value) {
  Set(key, std::string_view(value ? "true" : "false"));
}

const std::string* Report::Find(std::string_view key) const {
  for (const auto& [k, v] : fields_) {
    if (k == key) return &v;
  }
  return nullptr;
}

void Report::Write(std::ostream& out) const {
  for (const auto& [k, v] : fields_) out << k << '=' << v << '\n';
}

absl::Status Report::WriteFile(const std::string& path) const {
  return WriteTextFile(path, [this](std::ostream& out) { Write(out); });
}

absl::StatusOr<Report> Report::Parse(std::istream& in) {
  Report report;
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0) {
      return LineError(line_number, "expected 'key=value'");
    }
    report.Set(std::string_view(line).substr(0, eq),
               std::string_view(line).substr(eq + 1));
  }
  return report;
}

absl::Status WriteTextFile(const std::string& path,
                           const std::function<void(std::ostream&)>& writer) {
  std::ofstream out(path);
  if (!out) return absl::NotFoundError(absl::StrCat("cannot write ", path));
  writer(out);
  out.flush();
  if (!out) return absl::DataLossError(absl::StrCat("error writing ", path));
  return absl::OkStatus();
}

}  // namespace lrmclust
