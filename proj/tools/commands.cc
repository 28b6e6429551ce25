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

#include "commands.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "lrmclust/engine.h"
#include "lrmclust/evaluation.h"
#include "lrmclust/graph.h"
#include "lrmclust/io.h"
#include "lrmclust/metrics.h"
#include "lrmclust/partition.h"
#include "lrmclust/synth.h"

namespace lrmclust::cli {
namespace {

int Fail(std::ostream& err, const absl::Status& status) {
  err << "error: " << status.message() << '\n';
  return status.code() == absl::StatusCode::kInternal ? kExitInternal
                                                      : kExitInput;
}

int Usage(std::ostream& err, absl::string_view message) {
  err << "usage error: " << message << '\n';
  return kExitUsage;
}

Partition Restrict(const Partition& p, const std::vector<NodeId>& nodes) {
  std::vector<int64_t> labels;
  labels.reserve(nodes.size());
  for (NodeId v : nodes) labels.push_back(p[v]);
  return Partition::FromLabels(labels);
}

// Ground truth over the nodes of `graph`, resolved for overlaps. Nodes that
// no community mentions are left out of `covered`.
struct Truth {
  Partition partition;  // over all graph nodes
  std::vector<NodeId> covered;
  bool overlapping = false;
};

absl::StatusOr<Truth> TruthFromCommunities(
    const std::vector<std::vector<std::string>>& communities,
    const Graph& graph) {
  absl::flat_hash_map<std::string, NodeId> index;
  for (NodeId v = 0; v < graph.num_nodes(); ++v) index[graph.label(v)] = v;
  std::vector<std::vector<int64_t>> memberships(graph.num_nodes());
  for (size_t c = 0; c < communities.size(); ++c) {
    for (const auto& label : communities[c]) {
      auto it = index.find(label);
      if (it == index.end()) continue;
      auto& m = memberships[it->second];
      if (std::find(m.begin(), m.end(), static_cast<int64_t>(c)) == m.end()) {
        m.push_back(static_cast<int64_t>(c));
      }
    }
  }
  Truth truth;
  int64_t placeholder = static_cast<int64_t>(communities.size());
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    if (memberships[v].size() > 1) truth.overlapping = true;
    if (memberships[v].empty()) {
      memberships[v].push_back(placeholder++);
    } else {
      truth.covered.push_back(v);
    }
  }
  auto resolved = ResolveOverlappingTruth(memberships, graph);
  if (!resolved.ok()) return resolved.status();
  truth.partition = *std::move(resolved);
  return truth;
}

std::string Fmt(double v) { return absl::StrFormat("%.17g", v); }

}  // namespace

int RunCluster(const ClusterArgs& args, std::ostream& out, std::ostream& err) {
  if (args.algorithm != "gscarf" && args.algorithm != "louvain") {
    return Usage(err, absl::StrCat("unknown algorithm '", args.algorithm,
                                   "' (expected gscarf or louvain)"));
  }
  if (args.algorithm == "louvain" && args.directed) {
    return Usage(err, "louvain does not support --directed");
  }
  if (args.algorithm == "louvain" && (args.no_cache || args.no_fold)) {
    return Usage(err, "--no-cache and --no-fold apply to gscarf only");
  }
  BuildOptions build;
  build.directed = args.directed;
  build.allow_self_loops = args.allow_self_loops;
  auto graph = LoadGraph(args.input, build);
  if (!graph.ok()) return Fail(err, graph.status());
  if (graph->num_nodes() == 0) {
    return Fail(err, absl::InvalidArgumentError(
                         absl::StrCat(args.input, ": graph has no edges")));
  }

  absl::StatusOr<ClusteringResult> result;
  if (args.algorithm == "gscarf") {
    EngineOptions options;
    options.use_cache = !args.no_cache;
    options.use_fold = !args.no_fold;
    options.directed = args.directed;
    result = ClusterGscarf(*graph, options);
  } else {
    result = ClusterLouvain(*graph);
  }
  if (!result.ok()) return Fail(err, result.status());
  const Partition& partition = result->partition;
  if (partition.num_nodes() != graph->num_nodes()) {
    return Fail(err, absl::InternalError("partition does not cover the graph"));
  }

  Report report;
  report.Set("algorithm", args.algorithm);
  report.Set("use_cache", args.algorithm == "gscarf" && !args.no_cache);
  report.Set("use_fold", args.algorithm == "gscarf" && !args.no_fold);
  report.Set("directed", args.directed);
  report.Set("n", graph->num_nodes());
  report.Set("m", graph->num_edges());
  report.Set("d", static_cast<double>(graph->volume()) /
                      static_cast<double>(graph->num_nodes()));
  const SizeStats sizes = ComputeSizeStats(partition);
  report.Set("k", sizes.count);
  report.Set("mean_cluster_size", sizes.mean_size);
  report.Set("max_cluster_size", sizes.max_size);
  report.Set("min_cluster_size", sizes.min_size);
  report.Set("sigma_l", result->stats.final_sigma_l);
  auto q = Modularity(*graph, partition);
  report.Set("q", q.ok() ? Fmt(*q) : std::string("NA"));
  std::string nmi = "NA";
  if (!args.truth.empty()) {
    auto communities = ReadCommunityFile(args.truth);
    if (!communities.ok()) return Fail(err, communities.status());
    auto truth = TruthFromCommunities(*communities, *graph);
    if (!truth.ok()) return Fail(err, truth.status());
    auto value = Nmi(Restrict(partition, truth->covered),
                     Restrict(truth->partition, truth->covered));
    if (!value.ok()) return Fail(err, value.status());
    nmi = Fmt(*value);
  }
  report.Set("nmi", nmi);
  report.Set("nmi_formula", kNmiFormula);
  report.Set("gain_evals", result->stats.gain_evals);
  report.Set("cache_hits", result->stats.cache_hits);
  report.Set("cache_size", result->stats.cache_size);
  report.Set("folds", result->stats.folds);
  report.Set("iterations", result->stats.iterations);
  report.Set("wall_time", result->stats.wall_time_seconds);

  if (!args.output.empty()) {
    auto status = WriteTextFile(args.output, [&](std::ostream& os) {
      WritePartition(os, *graph, partition);
    });
    if (!status.ok()) return Fail(err, status);
  }
  if (!args.report.empty()) {
    auto status = report.WriteFile(args.report);
    if (!status.ok()) return Fail(err, status);
  } else {
    report.Write(out);
  }
  return kExitOk;
}

int RunEval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
  if (args.truth_format != "communities" && args.truth_format != "partition") {
    return Usage(err, "--truth-format must be 'communities' or 'partition'");
  }
  if (args.resolve_overlap && args.graph.empty()) {
    return Usage(err, "--resolve-overlap requires --graph");
  }
  auto pred = ReadPartitionFile(args.pred);
  if (!pred.ok()) return Fail(err, pred.status());

  // The node universe is the set of predicted labels, in file order.
  std::vector<std::string> universe;
  universe.reserve(pred->size());
  for (const auto& a : *pred) universe.push_back(a.label);

  std::vector<int64_t> truth_labels;
  if (args.truth_format == "partition") {
    auto truth = ReadPartitionFile(args.truth);
    if (!truth.ok()) return Fail(err, truth.status());
    auto p = PartitionFromAssignments(*truth, universe);
    if (!p.ok()) return Fail(err, p.status());
    truth_labels.assign(p->assignment().begin(), p->assignment().end());
  } else {
    auto communities = ReadCommunityFile(args.truth);
    if (!communities.ok()) return Fail(err, communities.status());
    std::optional<Graph> graph;
    if (!args.graph.empty()) {
      BuildOptions build;
      build.directed = args.directed;
      auto loaded = LoadGraph(args.graph, build);
      if (!loaded.ok()) return Fail(err, loaded.status());
      graph = *std::move(loaded);
    }
    absl::flat_hash_map<std::string, NodeId> pred_index;
    for (NodeId v = 0; v < universe.size(); ++v) pred_index[universe[v]] = v;

    std::vector<std::vector<int64_t>> memberships(universe.size());
    bool overlapping = false;
    for (size_t c = 0; c < communities->size(); ++c) {
      for (const auto& label : (*communities)[c]) {
        auto it = pred_index.find(label);
        if (it == pred_index.end()) {
          return Fail(err, absl::InvalidArgumentError(absl::StrCat(
                               "truth label '", label,
                               "' is missing from the prediction")));
        }
        auto& m = memberships[it->second];
        if (std::find(m.begin(), m.end(), static_cast<int64_t>(c)) ==
            m.end()) {
          m.push_back(static_cast<int64_t>(c));
          if (m.size() > 1) overlapping = true;
        }
      }
    }
    std::vector<NodeId> kept;
    for (NodeId v = 0; v < universe.size(); ++v) {
      if (!memberships[v].empty()) {
        kept.push_back(v);
      } else if (!args.restrict_to_truth) {
        return Fail(err, absl::InvalidArgumentError(absl::StrCat(
                             "predicted label '", universe[v],
                             "' is in no truth community")));
      }
    }
    if (overlapping && !args.resolve_overlap) {
      return Fail(err, absl::InvalidArgumentError(
                           "truth has overlapping communities; pass "
                           "--resolve-overlap with --graph"));
    }
    std::vector<int64_t> resolved(universe.size(), -1);
    if (overlapping) {
      // Resolve on the graph's node ids, then map back by label.
      absl::flat_hash_map<std::string, NodeId> graph_index;
      for (NodeId v = 0; v < graph->num_nodes(); ++v) {
        graph_index[graph->label(v)] = v;
      }
      std::vector<std::vector<int64_t>> on_graph(graph->num_nodes());
      for (NodeId v : kept) {
        auto it = graph_index.find(universe[v]);
        if (it == graph_index.end()) {
          return Fail(err, absl::InvalidArgumentError(absl::StrCat(
                               "label '", universe[v],
                               "' is not a node of ", args.graph)));
        }
        on_graph[it->second] = memberships[v];
      }
      int64_t placeholder = static_cast<int64_t>(communities->size());
      for (auto& m : on_graph) {
        if (m.empty()) m.push_back(placeholder++);
      }
      auto p = ResolveOverlappingTruth(on_graph, *graph);
      if (!p.ok()) return Fail(err, p.status());
      for (NodeId v : kept) resolved[v] = (*p)[graph_index[universe[v]]];
    } else {
      for (NodeId v : kept) resolved[v] = memberships[v].front();
    }
    std::vector<LabeledAssignment> kept_pred;
    universe.clear();
    for (NodeId v : kept) {
      truth_labels.push_back(resolved[v]);
      universe.push_back((*pred)[v].label);
      kept_pred.push_back((*pred)[v]);
    }
    *pred = std::move(kept_pred);
  }

  auto pred_partition = PartitionFromAssignments(*pred, universe);
  if (!pred_partition.ok()) return Fail(err, pred_partition.status());
  const Partition truth_partition = Partition::FromLabels(truth_labels);
  auto nmi = Nmi(*pred_partition, truth_partition);
  if (!nmi.ok()) return Fail(err, nmi.status());

  Report report;
  report.Set("n", pred_partition->num_nodes());
  report.Set("nmi", *nmi);
  report.Set("nmi_formula", kNmiFormula);
  const SizeStats ps = ComputeSizeStats(*pred_partition);
  report.Set("pred_k", ps.count);
  report.Set("pred_mean_size", ps.mean_size);
  report.Set("pred_max_size", ps.max_size);
  report.Set("pred_min_size", ps.min_size);
  const SizeStats ts = ComputeSizeStats(truth_partition);
  report.Set("truth_k", ts.count);
  report.Set("truth_mean_size", ts.mean_size);
  report.Set("truth_max_size", ts.max_size);
  report.Set("truth_min_size", ts.min_size);
  report.Write(out);
  if (!args.report.empty()) {
    auto status = report.WriteFile(args.report);
    if (!status.ok()) return Fail(err, status);
  }
  return kExitOk;
}

int RunGen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  if (args.out_prefix.empty()) return Usage(err, "--out is required");
  absl::StatusOr<SyntheticGraph> generated;
  if (args.model == "planted") {
    if (auto s = ValidatePlantedSpec(args.planted); !s.ok()) {
      return Usage(err, s.message());
    }
    generated = GeneratePlanted(args.planted);
  } else if (args.model == "chung-lu") {
    if (auto s = ValidatePowerLawSpec(args.power_law); !s.ok()) {
      return Usage(err, s.message());
    }
    generated = GenerateChungLu(args.power_law);
  } else {
    return Usage(err, absl::StrCat("unknown model '", args.model,
                                   "' (expected planted or chung-lu)"));
  }
  if (!generated.ok()) return Fail(err, generated.status());

  const std::string edges_path = args.out_prefix + ".edges";
  auto status = WriteTextFile(edges_path, [&](std::ostream& os) {
    WriteEdgeList(os, generated->edges);
  });
  if (!status.ok()) return Fail(err, status);
  out << "wrote " << edges_path << " (" << generated->edges.size()
      << " edges)\n";
  if (args.model == "planted") {
    const std::string truth_path = args.out_prefix + ".communities";
    status = WriteTextFile(truth_path, [&](std::ostream& os) {
      WriteCommunities(os, generated->truth, generated->graph);
    });
    if (!status.ok()) return Fail(err, status);
    out << "wrote " << truth_path << " (" << generated->truth.num_clusters()
        << " communities)\n";
  }
  return kExitOk;
}

int RunBench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  if (args.sizes.empty()) return Usage(err, "--sizes must list at least one n");
  if (args.algorithms.empty()) return Usage(err, "--algorithms is empty");
  if (args.repeats < 1) return Usage(err, "--repeats must be positive");
  for (const auto& a : args.algorithms) {
    if (a != "gscarf" && a != "gscarf-nocache" && a != "gscarf-nofold" &&
        a != "gscarf-plain" && a != "louvain") {
      return Usage(err, absl::StrCat("unknown algorithm '", a, "'"));
    }
  }
  if (args.model != "chung-lu" && args.model != "planted") {
    return Usage(err, absl::StrCat("unknown model '", args.model, "'"));
  }
  std::vector<int64_t> sizes = args.sizes;
  std::sort(sizes.begin(), sizes.end());

  std::ostringstream table;
  table << "model\tn\tm\talgorithm\twall_time\tgain_evals\tcache_hits\t"
           "folds\tk\n";
  for (int64_t n : sizes) {
    if (n < 2 || n > std::numeric_limits<NodeId>::max()) {
      return Usage(err, absl::StrCat("size ", n, " out of range"));
    }
    absl::StatusOr<SyntheticGraph> generated;
    if (args.model == "chung-lu") {
      PowerLawSpec spec;
      spec.n = static_cast<NodeId>(n);
      spec.gamma = args.gamma;
      spec.avg_degree = args.avg_degree;
      spec.seed = args.seed;
      if (auto s = ValidatePowerLawSpec(spec); !s.ok()) {
        return Usage(err, s.message());
      }
      generated = GenerateChungLu(spec);
    } else {
      PlantedSpec spec;
      spec.n = static_cast<NodeId>(n);
      spec.k = static_cast<NodeId>(
          std::max<int64_t>(1, n / std::max<int64_t>(1, args.community_size)));
      spec.mu = args.mu;
      spec.avg_degree = args.avg_degree;
      spec.seed = args.seed;
      if (auto s = ValidatePlantedSpec(spec); !s.ok()) {
        return Usage(err, s.message());
      }
      generated = GeneratePlanted(spec);
    }
    if (!generated.ok()) return Fail(err, generated.status());
    const Graph& graph = generated->graph;

    for (const auto& algorithm : args.algorithms) {
      std::optional<ClusteringResult> best;
      for (int r = 0; r < args.repeats; ++r) {
        absl::StatusOr<ClusteringResult> result;
        if (algorithm == "louvain") {
          result = ClusterLouvain(graph);
        } else {
          EngineOptions options;
          options.use_cache =
              algorithm == "gscarf" || algorithm == "gscarf-nofold";
          options.use_fold =
              algorithm == "gscarf" || algorithm == "gscarf-nocache";
          result = ClusterGscarf(graph, options);
        }
        if (!result.ok()) return Fail(err, result.status());
        if (!best || result->stats.wall_time_seconds <
                         best->stats.wall_time_seconds) {
          best = *std::move(result);
        }
      }
      table << args.model << '\t' << n << '\t' << graph.num_edges() << '\t'
            << algorithm << '\t' << Fmt(best->stats.wall_time_seconds) << '\t'
            << best->stats.gain_evals << '\t' << best->stats.cache_hits << '\t'
            << best->stats.folds << '\t' << best->partition.num_clusters()
            << '\n';
    }
  }
  if (!args.output.empty()) {
    auto status = WriteTextFile(args.output,
                                [&](std::ostream& os) { os << table.str(); });
    if (!status.ok()) return Fail(err, status);
  }
  out << table.str();
  return kExitOk;
}

int Main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Likelihood-ratio modularity clustering (gScarf) and tools"};
  app.require_subcommand(1);

  ClusterArgs cluster;
  auto* cluster_cmd = app.add_subcommand("cluster", "Cluster an edge list");
  cluster_cmd->add_option("-i,--input", cluster.input, "Edge list")
      ->required();
  cluster_cmd->add_option("-o,--output", cluster.output, "Partition file");
  cluster_cmd->add_option("-a,--algorithm", cluster.algorithm,
                          "gscarf or louvain");
  cluster_cmd->add_option("-r,--report", cluster.report,
                          "Report file (default: stdout)");
  cluster_cmd->add_option("--truth", cluster.truth,
                          "Community file for an NMI line in the report");
  cluster_cmd->add_flag("--no-cache", cluster.no_cache,
                        "Disable gain memoization");
  cluster_cmd->add_flag("--no-fold", cluster.no_fold,
                        "Disable graph contraction");
  cluster_cmd->add_flag("--directed", cluster.directed,
                        "Read arcs and use the directed objective");
  cluster_cmd->add_flag("--allow-self-loops", cluster.allow_self_loops,
                        "Absorb input self-loops instead of rejecting them");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Compare a partition to truth");
  eval_cmd->add_option("-p,--pred", eval.pred, "Partition file")->required();
  eval_cmd->add_option("-t,--truth", eval.truth, "Truth file")->required();
  eval_cmd->add_option("--truth-format", eval.truth_format,
                       "communities (default) or partition");
  eval_cmd->add_option("-g,--graph", eval.graph,
                       "Edge list, needed to resolve overlaps");
  eval_cmd->add_option("-r,--report", eval.report, "Also write the report here");
  eval_cmd->add_flag("--resolve-overlap", eval.resolve_overlap,
                     "Assign multi-community nodes by neighbor plurality");
  eval_cmd->add_flag("--directed", eval.directed, "Read the graph as arcs");
  eval_cmd->add_flag("--restrict-to-truth", eval.restrict_to_truth,
                     "Ignore predicted nodes absent from the truth");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic graph");
  gen_cmd->add_option("model", gen.model, "planted or chung-lu")->required();
  gen_cmd->add_option("-o,--out", gen.out_prefix, "Output path prefix")
      ->required();
  NodeId gen_n = 1000;
  double gen_degree = 10.0;
  uint64_t gen_seed = 1;
  gen_cmd->add_option("-n,--n", gen_n, "Node count");
  gen_cmd->add_option("-d,--avg-degree", gen_degree, "Average degree");
  gen_cmd->add_option("-s,--seed", gen_seed, "Random seed");
  gen_cmd->add_option("-k,--k", gen.planted.k, "Communities (planted)");
  gen_cmd->add_option("--mu", gen.planted.mu, "Mixing parameter (planted)");
  gen_cmd->add_option("--gamma", gen.power_law.gamma,
                      "Power-law exponent (chung-lu)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Runtime scaling table");
  bench_cmd->add_option("--sizes", bench.sizes, "Node counts")
      ->delimiter(',')
      ->required();
  bench_cmd->add_option("--model", bench.model, "chung-lu or planted");
  bench_cmd->add_option("--algorithms", bench.algorithms,
                        "gscarf, gscarf-nocache, gscarf-nofold, "
                        "gscarf-plain, louvain")
      ->delimiter(',');
  bench_cmd->add_option("--gamma", bench.gamma, "Power-law exponent");
  bench_cmd->add_option("-d,--avg-degree", bench.avg_degree, "Average degree");
  bench_cmd->add_option("--mu", bench.mu, "Mixing parameter (planted)");
  bench_cmd->add_option("--community-size", bench.community_size,
                        "Community size (planted)");
  bench_cmd->add_option("-s,--seed", bench.seed, "Random seed");
  bench_cmd->add_option("--repeats", bench.repeats,
                        "Runs per cell; the fastest is reported");
  bench_cmd->add_option("-o,--output", bench.output, "Also write the table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    return Usage(err, e.what());
  }

  if (*cluster_cmd) return RunCluster(cluster, out, err);
  if (*eval_cmd) return RunEval(eval, out, err);
  if (*gen_cmd) {
    gen.planted.n = gen.power_law.n = gen_n;
    gen.planted.avg_degree = gen.power_law.avg_degree = gen_degree;
    gen.planted.seed = gen.power_law.seed = gen_seed;
    return RunGen(gen, out, err);
  }
  if (*bench_cmd) return RunBench(bench, out, err);
  return Usage(err, "no subcommand");
}

}  // namespace lrmclust::cli
