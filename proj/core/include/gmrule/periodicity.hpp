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

#ifndef GMRULE_PERIODICITY_HPP_
#define GMRULE_PERIODICITY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gmrule/bigint.hpp"
#include "gmrule/gm_core.hpp"
#include "gmrule/pile_vector.hpp"

namespace gmrule {

// One period (n * ell steps) of the s/r word traced by a single column of
// a settled GM-sequence. 's' marks steps where the column is the pivot.
struct PeriodSummary {
  std::size_t column = 0;  // 1-based
  std::uint64_t period_length = 0;
  std::string word;
  std::uint64_t s_count = 0;
  std::uint64_t r_count = 0;
  BigInt drop_per_period;  // (n - 1) * ell

  // "s^2 r^3 s r^6"; an exponent of 1 is omitted.
  std::string run_length() const;

  // Maximal runs taken cyclically, as (letter, length) pairs. A word with a
  // single letter yields one run.
  std::vector<std::pair<char, std::uint64_t>> cyclic_runs() const;
};

// Parses the run-length form back into a plain word ("s^2 r" -> "ssr").
std::string expand_run_length(std::string_view runs);

// True iff `b` is a cyclic rotation of `a`.
bool same_up_to_rotation(std::string_view a, std::string_view b);

// x^j for a settled x (range <= ell, some entry a multiple of ell), using
// x^{j + n*ell} = x^j - (n-1)*ell*e. At most n*ell naive moves are made.
// Throws DomainError when the preconditions fail.
PileVector fast_forward(const PileVector& x, const RuleParams& params, const BigInt& j);

PeriodSummary period_word(const PileVector& x, const RuleParams& params,
                          std::size_t column);

// 1-based pivot per step for steps [0, steps).
std::vector<std::size_t> pivot_log(PileVector x, const RuleParams& params,
                                   std::size_t steps);

// True iff log[j + ell] == log[j] - 1 (with 1 - 1 wrapping to n) for every
// j with j + ell inside the log and j < window.
bool pivot_shift_holds(std::span<const std::size_t> log, std::size_t n, long ell,
                       std::size_t window);

// Left-shift check over `window` steps (window >= ell) of a settled x.
bool pivot_shift_check(const PileVector& x, const RuleParams& params, std::size_t window);

// Per column, the number of non-pivot steps between consecutive pivot
// tenures observed inside steps [0, window). Runs cut by the window edge
// are not reported.
std::vector<std::vector<std::uint64_t>> pivot_return_gaps(const PileVector& x,
                                                          const RuleParams& params,
                                                          std::size_t window);

}  // namespace gmrule

#endif  // GMRULE_PERIODICITY_HPP_
