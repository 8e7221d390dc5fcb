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

#ifndef GMRULE_SMITH_HPP_
#define GMRULE_SMITH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "gmrule/nim.hpp"

namespace gmrule {

// Smith remoteness of exact slow NIM(n, n-1) by memoized recursion over
// every legal move. Knows nothing about the GM-rule; tests use it as the
// independent reference for nim::remoteness.
//
// One instance owns one memo table; do not share an instance between
// threads.
class SmithOracle {
 public:
  static constexpr std::size_t kDefaultBudget = 5'000'000;

  explicit SmithOracle(std::size_t max_states = kDefaultBudget) : max_states_(max_states) {}

  // Piles in any order; all must be non-negative. Throws BudgetExceeded
  // when the memo table would grow past max_states.
  std::uint64_t remoteness(std::span<const std::int64_t> piles);
  std::uint64_t remoteness(const nim::GamePosition& x);

  std::size_t states() const { return memo_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept;
  };

  std::uint64_t solve(const std::vector<std::int64_t>& sorted);

  std::unordered_map<std::vector<std::int64_t>, std::uint64_t, KeyHash> memo_;
  std::size_t max_states_;
};

}  // namespace gmrule

#endif  // GMRULE_SMITH_HPP_
