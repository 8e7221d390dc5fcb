// Copyright 2026 The gmrule Authors. All rights reserved.
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

#ifndef GMRULE_GRID_HPP_
#define GMRULE_GRID_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gmrule {

// Visits every non-decreasing vector in [0, max_pile]^n, in lexicographic
// order. Each multiset is visited once.
template <typename Fn>
void for_each_sorted_grid(std::size_t n, std::int64_t max_pile, Fn&& fn) {
  if (n == 0 || max_pile < 0) return;
  std::vector<std::int64_t> v(n, 0);
  while (true) {
    fn(static_cast<const std::vector<std::int64_t>&>(v));
    std::size_t i = n;
    while (i > 0 && v[i - 1] == max_pile) --i;
    if (i == 0) return;
    const std::int64_t next = v[i - 1] + 1;
    for (std::size_t k = i - 1; k < n; ++k) v[k] = next;
  }
}

}  // namespace gmrule

#endif  // GMRULE_GRID_HPP_
