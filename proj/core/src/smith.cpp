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

#include "gmrule/smith.hpp"

#include <algorithm>
#include <limits>

namespace gmrule {

std::size_t SmithOracle::KeyHash::operator()(const std::vector<std::int64_t>& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::int64_t x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::uint64_t SmithOracle::remoteness(std::span<const std::int64_t> piles) {
  std::vector<std::int64_t> sorted(piles.begin(), piles.end());
  if (sorted.size() < 2) throw DomainError("smith oracle needs at least two piles");
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0) throw DomainError("smith oracle needs non-negative piles");
  return solve(sorted);
}

std::uint64_t SmithOracle::remoteness(const nim::GamePosition& x) {
  std::vector<std::int64_t> piles;
  piles.reserve(x.size());
  for (const BigInt& v : x.piles().entries()) piles.push_back(to_i64(v));
  return remoteness(piles);
}

std::uint64_t SmithOracle::solve(const std::vector<std::int64_t>& sorted) {
  if (auto it = memo_.find(sorted); it != memo_.end()) return it->second;

  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t best_even = kNone;  // shortest win
  std::uint64_t longest = 0;        // longest loss
  bool any_move = false;
  const std::size_t n = sorted.size();
  for (std::size_t keep = 0; keep < n; ++keep) {
    // Equal piles give the same successor.
    if (keep + 1 < n && sorted[keep] == sorted[keep + 1]) continue;
    bool legal = true;
    std::vector<std::int64_t> next(sorted);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == keep) continue;
      if (next[i] < 1) {
        legal = false;
        break;
      }
      --next[i];
    }
    if (!legal) continue;
    any_move = true;
    std::sort(next.begin(), next.end());
    const std::uint64_t r = solve(next);
    if (r % 2 == 0) best_even = std::min(best_even, r);
    longest = std::max(longest, r);
  }

  std::uint64_t value = 0;
  if (any_move) value = best_even != kNone ? best_even + 1 : longest + 1;
  if (memo_.size() >= max_states_) {
    throw BudgetExceeded("smith oracle exceeded " + std::to_string(max_states_) + " states");
  }
  memo_.emplace(sorted, value);
  return value;
}

}  // namespace gmrule
