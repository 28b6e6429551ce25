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

#ifndef LRMCLUST_SRC_WEIGHT_ACCUMULATOR_H_
#define LRMCLUST_SRC_WEIGHT_ACCUMULATOR_H_

#include <vector>

#include "lrmclust/graph.h"

namespace lrmclust {

// Sparse accumulator over a dense id space.
class WeightAccumulator {
 public:
  explicit WeightAccumulator(NodeId n) : weight_(n, 0) {}

  void Add(NodeId c, Weight w) {
    if (weight_[c] == 0) touched_.push_back(c);
    weight_[c] += w;
  }

  template <typename Fn>
  void Drain(Fn&& fn) {
    for (NodeId c : touched_) {
      fn(c, weight_[c]);
      weight_[c] = 0;
    }
    touched_.clear();
  }

  size_t size() const { return touched_.size(); }

 private:
  std::vector<Weight> weight_;
  std::vector<NodeId> touched_;
};

}  // namespace lrmclust

#endif  // LRMCLUST_SRC_WEIGHT_ACCUMULATOR_H_
