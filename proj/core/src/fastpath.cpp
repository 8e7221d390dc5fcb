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

#include "gmrule/fastpath.hpp"

#include <algorithm>
#include <string>

namespace gmrule {

namespace {

struct WalkTarget {
  bool stop_when_settled = false;
  std::optional<FinishSpec> finish;
  std::optional<BigInt> budget;
};

struct Walk {
  PileVector x;
  BigInt steps = 0;
  std::vector<WalkSegment> trace;
};

std::size_t count_at_or_below(const PileVector& x, const BigInt& level) {
  const auto e = x.entries();
  return static_cast<std::size_t>(std::upper_bound(e.begin(), e.end(), level) - e.begin());
}

BigInt ceil_div_pos(const BigInt& a, const BigInt& d) { return -floor_div(-a, d); }

// Largest number of m*ell blocks after which fewer than d entries are at or
// below the level. Each leader drops (m-1)*ell per block, each outsider
// m*ell, and the count only grows with time, so checking the state at the
// end of the jump covers every state inside it.
std::optional<BigInt> finish_blocks(const PileVector& x, std::size_t m, long ell,
                                    const FinishSpec& spec) {
  std::vector<std::optional<BigInt>> crossing;
  crossing.reserve(x.size());
  const BigInt lead_rate = BigInt(static_cast<long>(m) - 1) * ell;
  const BigInt tail_rate = BigInt(static_cast<long>(m)) * ell;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const BigInt& rate = i < m ? lead_rate : tail_rate;
    const BigInt above = x[i] - spec.level;
    if (sgn(above) <= 0) {
      crossing.emplace_back(BigInt(0));
    } else if (sgn(rate) == 0) {
      crossing.emplace_back(std::nullopt);
    } else {
      crossing.emplace_back(ceil_div_pos(above, rate));
    }
  }
  std::sort(crossing.begin(), crossing.end(), [](const auto& a, const auto& b) {
    if (!a) return false;
    if (!b) return true;
    return *a < *b;
  });
  const auto& dth = crossing[spec.d - 1];
  if (!dth) return std::nullopt;
  return *dth - 1;
}

void record(std::vector<WalkSegment>& trace, std::size_t m, const BigInt& steps, bool jump,
            std::optional<BigInt> finish_bound = std::nullopt,
            std::optional<BigInt> join_bound = std::nullopt) {
  if (!jump && !trace.empty() && !trace.back().jump && trace.back().leaders == m) {
    trace.back().steps += steps;
    return;
  }
  trace.push_back({m, steps, jump, std::move(finish_bound), std::move(join_bound)});
}

// Advances x until the first stop condition in `target` holds. Each round
// either jumps whole blocks of m*ell moves, during which the leaders [m]
// run as a settled GM system of their own and the pivot never leaves them,
// or makes one ordinary move.
//
// Block jumps rely on one bound: a settled column is the pivot at most ell
// times in any window of m*ell moves, so after t moves a leader has dropped
// by at least t - ell*ceil(t/(m*ell)), while an outsider has dropped by
// exactly t. With g = x_{m+1} - x_m, the outsiders therefore stay strictly
// above every leader (and cannot be picked as pivot) for q blocks whenever
// g > q*ell. The same bound keeps range > ell for q blocks when
// range - ell > q*ell.
Walk walk(PileVector x, const RuleParams& params, const WalkTarget& target) {
  const long ell = params.ell();
  const std::size_t n = x.size();
  Walk out{std::move(x), 0, {}};
  PileVector& cur = out.x;

  // A lone entry is kept forever.
  if (n == 1) {
    if (target.budget) out.steps = *target.budget;
    return out;
  }

  while (true) {
    if (target.stop_when_settled && range_of(cur) <= ell) break;
    if (target.finish && count_at_or_below(cur, target.finish->level) >= target.finish->d) {
      break;
    }
    if (target.budget && out.steps == *target.budget) break;

    const std::size_t m = leaders(cur, params);
    bool leader_multiple = false;
    for (std::size_t i = 0; i < m && !leader_multiple; ++i) {
      leader_multiple = divisible(cur[i], static_cast<unsigned long>(ell));
    }

    if (leader_multiple) {
      const BigInt block = BigInt(static_cast<long>(m)) * ell;
      std::optional<BigInt> blocks;
      auto cap = [&blocks](const BigInt& b) {
        if (!blocks || b < *blocks) blocks = b;
      };
      std::optional<BigInt> join_blocks;
      std::optional<BigInt> finish_bound_blocks;
      if (m < n) {
        join_blocks = floor_div(cur[m] - cur[m - 1] - 1, ell);
        cap(*join_blocks);
        if (target.stop_when_settled) cap(floor_div(range_of(cur) - ell - 1, ell));
      }
      if (target.finish) {
        finish_bound_blocks = finish_blocks(cur, m, ell, *target.finish);
        if (finish_bound_blocks) cap(*finish_bound_blocks);
      }
      if (target.budget) cap(floor_div(*target.budget - out.steps, block));
      if (!blocks) {
        throw DomainError("GM-sequence never reaches the requested stop condition");
      }
      if (sgn(*blocks) > 0) {
        const BigInt moves = *blocks * block;
        cur.drop_blocks(m, *blocks * (static_cast<long>(m) - 1) * ell, *blocks * block);
        out.steps += moves;
        auto as_moves = [&block](const std::optional<BigInt>& b) -> std::optional<BigInt> {
          if (!b) return std::nullopt;
          return *b * block;
        };
        record(out.trace, m, moves, true, as_moves(finish_bound_blocks), as_moves(join_blocks));
        continue;
      }
    }

    gm_step(cur, params);
    ++out.steps;
    record(out.trace, m, 1, false);
  }
  return out;
}

}  // namespace

std::size_t leaders(const PileVector& x, const RuleParams& params) {
  const auto e = x.entries();
  const BigInt limit = x.front() + params.ell();
  return static_cast<std::size_t>(std::upper_bound(e.begin(), e.end(), limit) - e.begin());
}

SettleResult settle(const PileVector& x, const RuleParams& params) {
  WalkTarget target;
  target.stop_when_settled = true;
  Walk w = walk(x, params, target);
  SettleResult out{w.steps, std::nullopt, std::move(w.x), std::move(w.trace)};
  if (sgn(out.prefix_len) > 0) out.last_unsettled = out.prefix_len - 1;
  return out;
}

PileVector position_at(const PileVector& x, const RuleParams& params, const BigInt& j) {
  if (sgn(j) < 0) throw DomainError("position_at: negative step count");
  WalkTarget target;
  target.budget = j;
  return walk(x, params, target).x;
}

FinishResult moves_to_finish_traced(const PileVector& x, const RuleParams& params,
                                    const FinishSpec& spec) {
  if (spec.d < 1 || spec.d > x.size()) {
    throw DomainError("finish: d must be in [1, " + std::to_string(x.size()) + "], got " +
                      std::to_string(spec.d));
  }
  FinishResult out;
  out.initial_finished = count_at_or_below(x, spec.level);
  out.initial_leaders = leaders(x, params);
  if (x.size() == 1 && out.initial_finished < spec.d) {
    throw DomainError("finish: a single entry is never reduced, the line is never reached");
  }
  WalkTarget target;
  target.finish = spec;
  Walk w = walk(x, params, target);
  out.moves = std::move(w.steps);
  out.trace = std::move(w.trace);
  return out;
}

BigInt moves_to_finish(const PileVector& x, const RuleParams& params, const FinishSpec& spec) {
  return moves_to_finish_traced(x, params, spec).moves;
}

}  // namespace gmrule
