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

#include "gmrule/nim.hpp"

#include <algorithm>

#include "gmrule/fastpath.hpp"
#include "gmrule/gm_core.hpp"

namespace gmrule::nim {

namespace {

const RuleParams& game_rule() {
  static const RuleParams params(2, Fallback::kKeepLargest);
  return params;
}

}  // namespace

GamePosition::GamePosition(PileVector piles) : piles_(std::move(piles)) {
  if (piles_.size() < 2) throw DomainError("a game needs at least two piles");
  if (sgn(piles_.front()) < 0) throw DomainError("piles must be non-negative: " + piles_.str());
}

std::size_t GamePosition::zero_count() const {
  const auto e = piles_.entries();
  return static_cast<std::size_t>(std::upper_bound(e.begin(), e.end(), BigInt(0)) - e.begin());
}

bool GamePosition::can_keep(std::size_t index) const {
  if (index < 1 || index > size()) return false;
  const std::size_t zeros = zero_count();
  if (zeros == 0) return true;
  // Exactly one empty pile, and it must be the one kept.
  return zeros == 1 && index == 1;
}

GamePosition GamePosition::after_keep(std::size_t index) const {
  if (index < 1 || index > size()) {
    throw IllegalMove("pile index " + std::to_string(index) + " out of range 1.." +
                      std::to_string(size()));
  }
  if (terminal()) throw IllegalMove("position " + str() + " is terminal");
  if (!can_keep(index)) throw IllegalMove("move would drive a pile negative");
  std::vector<BigInt> next(piles_.entries().begin(), piles_.entries().end());
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (i + 1 != index) --next[i];
  }
  return GamePosition(PileVector(std::move(next)));
}

std::vector<std::size_t> GamePosition::legal_keeps() const {
  std::vector<std::size_t> out;
  if (terminal()) return out;
  for (std::size_t i = 1; i <= size(); ++i) {
    if (can_keep(i)) out.push_back(i);
  }
  return out;
}

KeptMove m_rule_move(const GamePosition& x) {
  if (x.terminal()) throw IllegalMove("position " + x.str() + " is terminal");
  MoveResult step = gm_move(x.piles(), game_rule());
  return {GamePosition(std::move(step.next)), step.step.kept};
}

RemotenessResult remoteness(const GamePosition& x) {
  RemotenessResult out;
  out.remoteness = moves_to_finish(x.piles(), game_rule(), FinishSpec{2, 0});
  out.outcome = mpz_even_p(out.remoteness.get_mpz_t()) ? Outcome::kP : Outcome::kN;
  if (!x.terminal()) out.best_move = m_rule_move(x).kept;
  return out;
}

std::vector<GamePosition> play_line(const GamePosition& x) {
  std::vector<GamePosition> line{x};
  while (!line.back().terminal()) line.push_back(m_rule_move(line.back()).next);
  return line;
}

}  // namespace gmrule::nim
