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

#ifndef LRMCLUST_METRICS_H_
#define LRMCLUST_METRICS_H_

#include <cassert>
#include <cmath>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "lrmclust/graph.h"
#include "lrmclust/partition.h"

// Cluster quality formulas.
//
// Notation, with T the graph volume (2m undirected, m arcs directed):
//   tp(C) = e_C / T                  internal stub fraction
//   ep(C) = (a_C / T)^2              undirected null expectation
//   ep(C) = a_C^in a_C^out / T^2     directed null expectation
//   Q(C)  = tp - ep
//   P(C)  = tp ln(tp / ep), 0 when tp = 0
//   L(C)  = P(C) - Q(C)              Poisson-approximated log-LRM per stub
// and for a merge of C_i and C_j: dL = dP - dQ = L(C_ij) - L(C_i) - L(C_j).
namespace lrmclust {

// Structural tuple <e_i, a_i, e_j, a_j, e_ij> of a candidate merge.
struct StructTuple {
  Weight e_i = 0;
  Weight a_i = 0;
  Weight e_j = 0;
  Weight a_j = 0;
  Weight e_ij = 0;

  friend bool operator==(const StructTuple&, const StructTuple&) = default;
  template <typename H>
  friend H AbslHashValue(H h, const StructTuple& t) {
    return H::combine(std::move(h), t.e_i, t.a_i, t.e_j, t.a_j, t.e_ij);
  }
};

// Directed structural tuple. Each endpoint carries its in- and out-degree;
// e_ij counts arcs in both directions between the clusters.
struct DirectedStructTuple {
  Weight e_i = 0;
  Weight in_i = 0;
  Weight out_i = 0;
  Weight e_j = 0;
  Weight in_j = 0;
  Weight out_j = 0;
  Weight e_ij = 0;

  friend bool operator==(const DirectedStructTuple&,
                         const DirectedStructTuple&) = default;
  template <typename H>
  friend H AbslHashValue(H h, const DirectedStructTuple& t) {
    return H::combine(std::move(h), t.e_i, t.in_i, t.out_i, t.e_j, t.in_j,
                      t.out_j, t.e_ij);
  }
};

// Per-cluster scalars. Undirected clusters use `e` and `a`; directed
// clusters use `e`, `a_in` and `a_out` (with a = a_in + a_out).
struct ClusterSummary {
  Weight e = 0;
  Weight a = 0;
  Weight a_in = 0;
  Weight a_out = 0;
};

absl::StatusOr<double> Tp(Weight e, Weight volume);
absl::StatusOr<double> Ep(Weight a, Weight two_m);
absl::StatusOr<double> EpDirected(Weight a_in, Weight a_out, Weight m);

// tp ln(tp / ep), with 0 ln 0 := 0. Requires 0 <= e <= a <= two_m.
double ProbRatioTerm(Weight e, Weight a, Weight two_m);

double LogLrm(Weight e, Weight a, Weight two_m);
double LogLrmDirected(Weight e, Weight a_in, Weight a_out, Weight m);
double LogLrm(const ClusterSummary& s, Weight volume, bool directed);

// 2 (e_ij / 2m - (a_i / 2m)(a_j / 2m)).
double ModularityGain(const StructTuple& t, Weight two_m);
double ModularityGain(const DirectedStructTuple& t, Weight m);

// dP - dQ. Symmetric in (i, j) bit for bit.
double LrmGain(const StructTuple& t, Weight two_m);
double LrmGain(const DirectedStructTuple& t, Weight m);

// Exact log-likelihood ratio ln[Pr(tp, e, 2m) / Pr(ep, e, 2m)] under the
// binomial model; the binomial coefficients cancel. Returns +inf when
// ep == 1 and tp < 1. Validation oracle for the Poisson form; scale by
// 1 / 2m to compare with LogLrm().
double ExactLrmLog(Weight e, Weight a, Weight two_m);

// Per-cluster summaries of `partition` on `graph` (alive nodes only).
absl::StatusOr<std::vector<ClusterSummary>> SummarizeClusters(
    const Graph& graph, const Partition& partition);

// Q = sum over clusters of (tp - ep).
absl::StatusOr<double> Modularity(const Graph& graph,
                                  const Partition& partition);
// Sum over clusters of L.
absl::StatusOr<double> SumLogLrm(const Graph& graph,
                                 const Partition& partition);

namespace internal {

inline double ProbRatio(double tp, double ep) {
  if (tp <= 0.0) return 0.0;
  assert(ep > 0.0);
  return tp * std::log(tp / ep);
}

inline double EpFromProduct(double product, double volume) {
  return product / (volume * volume);
}

// Shared by the undirected and directed gains so that a symmetric digraph
// evaluates to exactly the undirected value. `cross_e` is the internal stub
// weight the merge creates; `cross_prod` the null-model cross term.
inline double GainKernel(double tp_i, double ep_i, double tp_j, double ep_j,
                         double tp_m, double ep_m, double cross_e,
                         double cross_prod, double volume) {
  const double dp =
      ProbRatio(tp_m, ep_m) - (ProbRatio(tp_i, ep_i) + ProbRatio(tp_j, ep_j));
  const double dq = cross_e / volume - EpFromProduct(cross_prod, volume);
  return dp - dq;
}

}  // namespace internal
}  // namespace lrmclust

#endif  // LRMCLUST_METRICS_H_
