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

#include "gmrule/nash.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "gmrule/bigint.hpp"
#include "gmrule/gm_core.hpp"

namespace gmrule {

std::string Payoff::str() const {
  const std::int64_t g = std::gcd(num, den);
  const std::int64_t n = num / g;
  const std::int64_t d = den / g;
  if (d == 1) return std::to_string(n);
  return std::to_string(n) + "/" + std::to_string(d);
}

bool NashReport::profitable_deviation() const {
  return std::any_of(deviations.begin(), deviations.end(),
                     [](const DeviationReport& d) { return d.profitable; });
}

namespace {

using Position = std::vector<std::int64_t>;

struct PositionHash {
  std::size_t operator()(const Position& v) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ULL;
    for (std::int64_t x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

bool terminal(const Position& x) {
  return std::count_if(x.begin(), x.end(), [](std::int64_t v) { return v <= 0; }) >= 2;
}

std::optional<Position> keep(const Position& x, std::size_t index) {
  Position next = x;
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (i == index) continue;
    if (next[i] < 1) return std::nullopt;
    --next[i];
  }
  std::sort(next.begin(), next.end());
  return next;
}

class DeviationSearch {
 public:
  DeviationSearch(const MultiPlayerGameSpec& spec, std::int64_t c, int deviator,
                  std::size_t max_states)
      : spec_(spec),
        rule_(spec.players),
        sum0_(std::accumulate(spec.initial.begin(), spec.initial.end(), std::int64_t{0})),
        c_(c),
        deviator_(deviator),
        max_states_(max_states) {}

  Payoff value(const Position& x) {
    if (auto it = memo_.find(x); it != memo_.end()) return it->second.value;
    const std::int64_t moves = moves_made(x);
    const int mover = static_cast<int>(moves % spec_.players);
    Entry entry;
    if (terminal(x)) {
      entry.value = terminal_payoff(moves, mover);
    } else if (mover != deviator_) {
      entry.next = gm_reply(x);
      entry.value = value(*entry.next);
    } else {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (i + 1 < x.size() && x[i] == x[i + 1]) continue;
        auto next = keep(x, i);
        if (!next) continue;
        const Payoff v = value(*next);
        if (!entry.next || v > entry.value) {
          entry.value = v;
          entry.next = std::move(next);
        }
      }
    }
    if (memo_.size() >= max_states_) {
      throw BudgetExceeded("nash check exceeded " + std::to_string(max_states_) + " states");
    }
    return memo_.emplace(x, std::move(entry)).first->second.value;
  }

  std::vector<Position> line(Position x) {
    std::vector<Position> out{x};
    while (true) {
      auto it = memo_.find(x);
      if (it == memo_.end() || !it->second.next) break;
      x = *it->second.next;
      out.push_back(x);
    }
    return out;
  }

  Position gm_reply(const Position& x) const {
    std::vector<BigInt> big;
    big.reserve(x.size());
    for (std::int64_t v : x) big.push_back(to_big(v));
    const MoveResult step = gm_move(PileVector(std::move(big)), rule_);
    Position out;
    out.reserve(x.size());
    for (const BigInt& v : step.next.entries()) out.push_back(to_i64(v));
    return out;
  }

  Payoff terminal_payoff(std::int64_t length, int loser) const {
    const std::int64_t stake = c_ - length;
    if (deviator_ == loser) return {-stake, 1};
    return {stake, spec_.players - 1};
  }

  std::int64_t moves_made(const Position& x) const {
    const std::int64_t sum = std::accumulate(x.begin(), x.end(), std::int64_t{0});
    return (sum0_ - sum) / static_cast<std::int64_t>(x.size() - 1);
  }

  std::size_t states() const { return memo_.size(); }

 private:
  struct Entry {
    Payoff value;
    std::optional<Position> next;
  };

  const MultiPlayerGameSpec& spec_;
  RuleParams rule_;
  std::int64_t sum0_;
  std::int64_t c_;
  int deviator_;
  std::size_t max_states_;
  std::unordered_map<Position, Entry, PositionHash> memo_;
};

}  // namespace

NashReport check_nash(const MultiPlayerGameSpec& spec, std::size_t max_states) {
  if (spec.players < 2) throw DomainError("need at least two players");
  if (spec.initial.size() < 2) throw DomainError("need at least two piles");
  if (std::any_of(spec.initial.begin(), spec.initial.end(), [](std::int64_t v) { return v < 0; })) {
    throw DomainError("piles must be non-negative");
  }

  NashReport report;
  report.initial = spec.initial;
  std::sort(report.initial.begin(), report.initial.end());
  report.players = spec.players;
  const std::int64_t sum =
      std::accumulate(report.initial.begin(), report.initial.end(), std::int64_t{0});
  report.payoff_constant = spec.payoff_constant.value_or(1 + sum);
  const std::int64_t longest_play = sum / static_cast<std::int64_t>(report.initial.size() - 1);
  if (report.payoff_constant <= longest_play) {
    throw DomainError("payoff constant must exceed every play length (> " +
                      std::to_string(longest_play) + ")");
  }

  MultiPlayerGameSpec sorted_spec = spec;
  sorted_spec.initial = report.initial;

  // The all-GM play.
  {
    DeviationSearch probe(sorted_spec, report.payoff_constant, 0, max_states);
    Position x = report.initial;
    std::int64_t length = 0;
    while (!terminal(x)) {
      x = probe.gm_reply(x);
      ++length;
    }
    report.gm_play_length = length;
    report.gm_loser = static_cast<int>(length % spec.players);
  }

  for (int p = 0; p < spec.players; ++p) {
    DeviationSearch search(sorted_spec, report.payoff_constant, p, max_states);
    DeviationReport dev;
    dev.player = p;
    dev.gm_payoff = search.terminal_payoff(report.gm_play_length, report.gm_loser);
    dev.best_payoff = search.value(report.initial);
    dev.profitable = dev.best_payoff > dev.gm_payoff;
    if (dev.profitable) dev.line = search.line(report.initial);
    report.states_explored += search.states();
    report.deviations.push_back(std::move(dev));
  }
  return report;
}

}  // namespace gmrule
