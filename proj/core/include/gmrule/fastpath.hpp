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

#ifndef GMRULE_FASTPATH_HPP_
#define GMRULE_FASTPATH_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "gmrule/bigint.hpp"
#include "gmrule/gm_core.hpp"
#include "gmrule/pile_vector.hpp"

namespace gmrule {

// A stretch of the walk during which the leader set [m] was fixed.
// `jump` segments were taken in whole blocks of m * ell moves; the
// others were single moves (consecutive ones are merged).
struct WalkSegment {
  std::size_t leaders = 0;
  BigInt steps;
  bool jump = false;
  // Only on jump segments: how far the finish line, and the next join of
  // an outsider, allowed the block jump to go (in moves). Absent when that
  // constraint was not active.
  std::optional<BigInt> finish_bound;
  std::optional<BigInt> join_bound;
};

struct SettleResult {
  // Steps until the first vector of range <= ell, i.e. N + 1; zero when
  // the input is already settled.
  BigInt prefix_len;
  // N, the last index of the unsettled prefix; absent when it is empty.
  std::optional<BigInt> last_unsettled;
  PileVector first_absorbed;
  std::vector<WalkSegment> trace;
};

struct FinishSpec {
  std::size_t d = 1;  // entries that must reach the level, 1 <= d <= n
  BigInt level = 0;
};

struct FinishResult {
  BigInt moves;
  std::size_t initial_finished = 0;  // d0
  std::size_t initial_leaders = 0;   // m0
  std::vector<WalkSegment> trace;
};

// Maximal m (1-based count) with x_m - x_1 <= ell.
std::size_t leaders(const PileVector& x, const RuleParams& params);

// First settled vector of the GM-sequence and the length of the unsettled
// prefix. Cost is polynomial in n and ell and linear in the bit size of x.
SettleResult settle(const PileVector& x, const RuleParams& params);

// x^j for arbitrary x; equal to simulate(x, j) without paying for j moves.
PileVector position_at(const PileVector& x, const RuleParams& params, const BigInt& j);

// Number of GM-moves until at least spec.d entries are <= spec.level.
// Throws DomainError for d outside [1, n] or when the line is never
// reached (n = 1 with x_1 above the level).
BigInt moves_to_finish(const PileVector& x, const RuleParams& params,
                       const FinishSpec& spec);
FinishResult moves_to_finish_traced(const PileVector& x, const RuleParams& params,
                                    const FinishSpec& spec);

}  // namespace gmrule

#endif  // GMRULE_FASTPATH_HPP_
