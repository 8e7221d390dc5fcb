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

#ifndef GMRULE_NASH_HPP_
#define GMRULE_NASH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gmrule {

__extension__ using WideInt = __int128;

// Exact payoff num/den with den > 0.
struct Payoff {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend std::strong_ordering operator<=>(const Payoff& a, const Payoff& b) {
    return static_cast<WideInt>(a.num) * b.den <=> static_cast<WideInt>(b.num) * a.den;
  }
  friend bool operator==(const Payoff& a, const Payoff& b) { return (a <=> b) == 0; }

  std::string str() const;
};

// Exact slow NIM(n, n-1) played by `players` players in cyclic order,
// player 0 first. Whoever must move at a terminal position loses and pays
// C - L; each of the others receives (C - L) / (players - 1).
struct MultiPlayerGameSpec {
  int players = 2;
  std::optional<std::int64_t> payoff_constant;  // defaults to 1 + sum(initial)
  std::vector<std::int64_t> initial;
};

struct DeviationReport {
  int player = 0;
  Payoff gm_payoff;
  Payoff best_payoff;
  bool profitable = false;
  // The best-response play (positions from the initial one to the
  // terminal), recorded only when the deviation is profitable.
  std::vector<std::vector<std::int64_t>> line;
};

struct NashReport {
  std::vector<std::int64_t> initial;
  int players = 2;
  std::int64_t payoff_constant = 0;
  std::int64_t gm_play_length = 0;
  int gm_loser = 0;
  std::vector<DeviationReport> deviations;  // one per player
  std::size_t states_explored = 0;

  bool profitable_deviation() const;
};

// For every player in turn, fixes the others to the GM-strategy (ell =
// number of players, keep-largest when nothing is a multiple) and finds the
// player's best payoff over all deviations by backward induction. Reports;
// never asserts that an equilibrium exists. Throws BudgetExceeded once more
// than `max_states` positions are memoized for a single player.
NashReport check_nash(const MultiPlayerGameSpec& spec, std::size_t max_states = 2'000'000);

}  // namespace gmrule

#endif  // GMRULE_NASH_HPP_
