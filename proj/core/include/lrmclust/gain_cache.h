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

#ifndef LRMCLUST_GAIN_CACHE_H_
#define LRMCLUST_GAIN_CACHE_H_

#include <cstdint>
#include <tuple>

#include "absl/container/flat_hash_map.h"
#include "lrmclust/graph.h"
#include "lrmclust/metrics.h"

namespace lrmclust {

// Orders the endpoint records lexicographically ascending; e_ij is kept.
// The gain is symmetric in its endpoints, so canonical tuples share a slot.
StructTuple Canonicalize(const StructTuple& t);
DirectedStructTuple Canonicalize(const DirectedStructTuple& t);

struct GainCacheStats {
  int64_t hits = 0;
  int64_t misses = 0;
  int64_t size = 0;

  friend bool operator==(const GainCacheStats&,
                         const GainCacheStats&) = default;
};

// Exact memo of LrmGain() keyed by the canonical structural tuple. A cache
// is bound to one graph volume for its whole lifetime: the gain depends on
// it, and the tuple does not carry it.
template <typename Tuple>
class BasicGainCache {
 public:
  explicit BasicGainCache(Weight bound_volume) : bound_volume_(bound_volume) {}

  Weight bound_volume() const { return bound_volume_; }

  double LookupOrCompute(const Tuple& t) {
    const Tuple key = Canonicalize(t);
    auto [it, inserted] = table_.try_emplace(key, 0.0);
    if (inserted) {
      ++misses_;
      it->second = LrmGain(key, bound_volume_);
    } else {
      ++hits_;
    }
    return it->second;
  }

  // Hints that `t` will be looked up soon. Does not touch the counters.
  void Prefetch(const Tuple& t) const { table_.prefetch(Canonicalize(t)); }

  GainCacheStats stats() const {
    return {hits_, misses_, static_cast<int64_t>(table_.size())};
  }

 private:
  Weight bound_volume_;
  absl::flat_hash_map<Tuple, double> table_;
  int64_t hits_ = 0;
  int64_t misses_ = 0;
};

using GainCache = BasicGainCache<StructTuple>;
using DirectedGainCache = BasicGainCache<DirectedStructTuple>;

}  // namespace lrmclust

#endif  // LRMCLUST_GAIN_CACHE_H_
