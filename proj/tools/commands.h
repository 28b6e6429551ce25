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

#ifndef LRMCLUST_TOOLS_COMMANDS_H_
#define LRMCLUST_TOOLS_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lrmclust/synth.h"

namespace lrmclust::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInput = 2,
  kExitInternal = 3,
};

struct ClusterArgs {
  std::string input;
  std::string output;
  std::string report;
  // Optional community file; adds an NMI line to the report.
  std::string truth;
  std::string algorithm = "gscarf";
  bool no_cache = false;
  bool no_fold = false;
  bool directed = false;
  bool allow_self_loops = false;
};

struct EvalArgs {
  std::string pred;
  std::string truth;
  // "communities" or "partition".
  std::string truth_format = "communities";
  std::string graph;
  std::string report;
  bool resolve_overlap = false;
  bool directed = false;
  // Drop predicted nodes that no truth community mentions.
  bool restrict_to_truth = false;
};

struct GenArgs {
  std::string model;
  PlantedSpec planted;
  PowerLawSpec power_law;
  std::string out_prefix;
};

struct BenchArgs {
  std::vector<int64_t> sizes;
  std::string model = "chung-lu";
  double gamma = 2.1;
  double avg_degree = 10.0;
  double mu = 0.1;
  int64_t community_size = 100;
  uint64_t seed = 1;
  std::vector<std::string> algorithms = {"gscarf", "gscarf-nocache"};
  int repeats = 1;
  std::string output;
};

int RunCluster(const ClusterArgs& args, std::ostream& out, std::ostream& err);
int RunEval(const EvalArgs& args, std::ostream& out, std::ostream& err);
int RunGen(const GenArgs& args, std::ostream& out, std::ostream& err);
int RunBench(const BenchArgs& args, std::ostream& out, std::ostream& err);

// Parses the command line and dispatches to the Run* functions.
int Main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lrmclust::cli

#endif  // LRMCLUST_TOOLS_COMMANDS_H_
