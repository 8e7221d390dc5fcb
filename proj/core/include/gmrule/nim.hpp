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

#ifndef GMRULE_NIM_HPP_
#define GMRULE_NIM_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gmrule/bigint.hpp"
#include "gmrule/pile_vector.hpp"

namespace gmrule::nim {

// A move would drive a pile below zero, or the position is terminal.
class IllegalMove : public DomainError {
 public:
  using DomainError::DomainError;
};

// Position of exact slow NIM(n, n-1): n >= 2 non-negative piles, sorted.
// A move keeps one pile and takes one stone from each of the others.
class GamePosition {
 public:
  explicit GamePosition(PileVector piles);
  GamePosition(std::initializer_list<long> piles) : GamePosition(PileVector(piles)) {}

  const PileVector& piles() const { return piles_; }
  std::size_t size() const { return piles_.size(); }

  std::size_t zero_count() const;
  // No move exists once two piles are empty.
  bool terminal() const { return zero_count() >= 2; }

  // 1-based. Legal iff every other pile is non-empty.
  bool can_keep(std::size_t index) const;
  GamePosition after_keep(std::size_t index) const;
  std::vector<std::size_t> legal_keeps() const;

  std::string str() const { return piles_.str(); }

  friend bool operator==(const GamePosition&, const GamePosition&) = default;

 private:
  PileVector piles_;
};

enum class Outcome { kP, kN };

inline const char* to_string(Outcome o) { return o == Outcome::kP ? "P" : "N"; }

struct RemotenessResult {
  BigInt remoteness;
  Outcome outcome = Outcome::kP;
  std::optional<std::size_t> best_move;  // 1-based kept pile; absent at terminals
};

struct KeptMove {
  GamePosition next;
  std::size_t kept = 0;  // 1-based, into the sorted piles before the move
};

// Keep the smallest even pile (the rightmost of equal ones); if every pile
// is odd keep a largest one. Throws IllegalMove at terminals.
KeptMove m_rule_move(const GamePosition& x);

// Length of optimal play from x. Runs the ell = 2 GM-sequence to the
// finish line d = 2, c = 0, so cost does not depend on pile magnitudes.
RemotenessResult remoteness(const GamePosition& x);

// Every position along the M-rule line from x down to a terminal,
// x included. Its length minus one equals the remoteness.
std::vector<GamePosition> play_line(const GamePosition& x);

}  // namespace gmrule::nim

#endif  // GMRULE_NIM_HPP_
