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

#include "lrmclust/metrics.h"

#include <cmath>
#include <limits>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace lrmclust {
namespace {

using internal::EpFromProduct;
using internal::GainKernel;
using internal::ProbRatio;

double D(Weight w) { return static_cast<double>(w); }

absl::Status CheckVolume(Weight volume) {
  if (volume <= 0) {
    return absl::FailedPreconditionError(
        absl::StrCat("metric undefined for graph volume ", volume));
  }
  return absl::OkStatus();
}

double UndirectedEp(Weight a, Weight two_m) {
  return EpFromProduct(D(a) * D(a), D(two_m));
}

double DirectedEp(Weight a_in, Weight a_out, Weight m) {
  return EpFromProduct(D(a_in) * D(a_out), D(m));
}

}  // namespace

absl::StatusOr<double> Tp(Weight e, Weight volume) {
  if (auto s = CheckVolume(volume); !s.ok()) return s;
  if (e < 0 || e > volume) {
    return absl::InvalidArgumentError(
        absl::StrCat("internal weight ", e, " outside [0, ", volume, "]"));
  }
  return D(e) / D(volume);
}

absl::StatusOr<double> Ep(Weight a, Weight two_m) {
  if (auto s = CheckVolume(two_m); !s.ok()) return s;
  if (a < 0 || a > two_m) {
    return absl::InvalidArgumentError(
        absl::StrCat("degree ", a, " outside [0, ", two_m, "]"));
  }
  return UndirectedEp(a, two_m);
}

absl::StatusOr<double> EpDirected(Weight a_in, Weight a_out, Weight m) {
  if (auto s = CheckVolume(m); !s.ok()) return s;
  if (a_in < 0 || a_in > m || a_out < 0 || a_out > m) {
    return absl::InvalidArgumentError(absl::StrCat(
        "degrees (", a_in, ", ", a_out, ") outside [0, ", m, "]"));
  }
  return DirectedEp(a_in, a_out, m);
}

double ProbRatioTerm(Weight e, Weight a, Weight two_m) {
  assert(two_m > 0 && e >= 0 && e <= a);
  return ProbRatio(D(e) / D(two_m), UndirectedEp(a, two_m));
}

double LogLrm(Weight e, Weight a, Weight two_m) {
  assert(two_m > 0 && e >= 0 && e <= a);
  const double tp = D(e) / D(two_m);
  const double ep = UndirectedEp(a, two_m);
  return ProbRatio(tp, ep) - (tp - ep);
}

double LogLrmDirected(Weight e, Weight a_in, Weight a_out, Weight m) {
  assert(m > 0 && e >= 0 && e <= a_in && e <= a_out);
  const double tp = D(e) / D(m);
  const double ep = DirectedEp(a_in, a_out, m);
  return ProbRatio(tp, ep) - (tp - ep);
}

double LogLrm(const ClusterSummary& s, Weight volume, bool directed) {
  return directed ? LogLrmDirected(s.e, s.a_in, s.a_out, volume)
                  : LogLrm(s.e, s.a, volume);
}

double ModularityGain(const StructTuple& t, Weight two_m) {
  const double volume = D(two_m);
  return D(2 * t.e_ij) / volume -
         EpFromProduct(2.0 * D(t.a_i) * D(t.a_j), volume);
}

double ModularityGain(const DirectedStructTuple& t, Weight m) {
  const double volume = D(m);
  return D(t.e_ij) / volume -
         EpFromProduct(D(t.in_i) * D(t.out_j) + D(t.in_j) * D(t.out_i),
                       volume);
}

double LrmGain(const StructTuple& t, Weight two_m) {
  const double volume = D(two_m);
  return GainKernel(D(t.e_i) / volume, UndirectedEp(t.a_i, two_m),
                    D(t.e_j) / volume, UndirectedEp(t.a_j, two_m),
                    D(t.e_i + t.e_j + 2 * t.e_ij) / volume,
                    UndirectedEp(t.a_i + t.a_j, two_m), D(2 * t.e_ij),
                    2.0 * D(t.a_i) * D(t.a_j), volume);
}

double LrmGain(const DirectedStructTuple& t, Weight m) {
  const double volume = D(m);
  return GainKernel(D(t.e_i) / volume, DirectedEp(t.in_i, t.out_i, m),
                    D(t.e_j) / volume, DirectedEp(t.in_j, t.out_j, m),
                    D(t.e_i + t.e_j + t.e_ij) / volume,
                    DirectedEp(t.in_i + t.in_j, t.out_i + t.out_j, m),
                    D(t.e_ij),
                    D(t.in_i) * D(t.out_j) + D(t.in_j) * D(t.out_i), volume);
}

double ExactLrmLog(Weight e, Weight a, Weight two_m) {
  assert(two_m > 0 && e >= 0 && e <= a && a <= two_m);
  const double n = D(two_m);
  const double tp = D(e) / n;
  const double ep = UndirectedEp(a, two_m);
  if (tp == ep) return 0.0;
  // k ln(tp / ep), with 0 ln(.) := 0.
  double success = 0.0;
  if (e > 0) success = D(e) * std::log(tp / ep);
  // (n - k) ln((1 - tp) / (1 - ep)), with the n - k = 0 term dropped.
  double failure = 0.0;
  if (e < two_m) {
    if (ep >= 1.0) return std::numeric_limits<double>::infinity();
    failure = (n - D(e)) * (std::log1p(-tp) - std::log1p(-ep));
  }
  return success + failure;
}

absl::StatusOr<std::vector<ClusterSummary>> SummarizeClusters(
    const Graph& graph, const Partition& partition) {
  if (partition.num_nodes() != graph.num_nodes()) {
    return absl::InvalidArgumentError(
        absl::StrCat("partition covers ", partition.num_nodes(),
                     " nodes but the graph has ", graph.num_nodes()));
  }
  std::vector<ClusterSummary> summaries(partition.num_clusters());
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    if (!graph.is_alive(v)) continue;
    ClusterSummary& s = summaries[partition[v]];
    s.e += graph.self_loop(v);
    s.a += graph.degree(v);
    s.a_in += graph.in_degree(v);
    s.a_out += graph.out_degree(v);
    for (const auto& [k, w] : graph.out_neighbors(v)) {
      if (partition[k] == partition[v]) s.e += w;
    }
  }
  return summaries;
}

absl::StatusOr<double> Modularity(const Graph& graph,
                                  const Partition& partition) {
  if (auto s = CheckVolume(graph.volume()); !s.ok()) return s;
  auto summaries = SummarizeClusters(graph, partition);
  if (!summaries.ok()) return summaries.status();
  const Weight volume = graph.volume();
  double q = 0.0;
  for (const ClusterSummary& s : *summaries) {
    const double tp = D(s.e) / D(volume);
    const double ep = graph.directed() ? DirectedEp(s.a_in, s.a_out, volume)
                                       : UndirectedEp(s.a, volume);
    q += tp - ep;
  }
  return q;
}

absl::StatusOr<double> SumLogLrm(const Graph& graph,
                                 const Partition& partition) {
  if (auto s = CheckVolume(graph.volume()); !s.ok()) return s;
  auto summaries = SummarizeClusters(graph, partition);
  if (!summaries.ok()) return summaries.status();
  double total = 0.0;
  for (const ClusterSummary& s : *summaries) {
    total += LogLrm(s, graph.volume(), graph.directed());
  }
  return total;
}

}  // namespace lrmclust
