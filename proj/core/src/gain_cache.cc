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

#include "lrmclust/gain_cache.h"

#include <tuple>

namespace lrmclust {

StructTuple Canonicalize(const StructTuple& t) {
  if (std::tie(t.e_j, t.a_j) < std::tie(t.e_i, t.a_i)) {
    return {t.e_j, t.a_j, t.e_i, t.a_i, t.e_ij};
  }
  return t;
}

DirectedStructTuple Canonicalize(const DirectedStructTuple& t) {
  if (std::tie(t.e_j, t.in_j, t.out_j) < std::tie(t.e_i, t.in_i, t.out_i)) {
    return {t.e_j, t.in_j, t.out_j, t.e_i, t.in_i, t.out_i, t.e_ij};
  }
  return t;
}

}  // namespace lrmclust
