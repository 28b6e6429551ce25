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

#ifndef LRMCLUST_RANDOM_H_
#define LRMCLUST_RANDOM_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace lrmclust {

// Portable seeded random source. The engine is std::mt19937_64, whose
// output sequence is fixed by the C++ standard; the integer and real
// mappings are defined here because <random> distributions differ between
// standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform integer in [0, bound), bound > 0. Lemire's multiply-shift with
  // rejection, so the result is unbiased.
  uint64_t Uniform(uint64_t bound);

  // Uniform real in [0, 1) from the top 53 bits.
  double UniformReal() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

  bool Bernoulli(double p) { return UniformReal() < p; }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Uniform(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lrmclust

#endif  // LRMCLUST_RANDOM_H_
