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

#ifndef GMRULE_GM_CORE_HPP_
#define GMRULE_GM_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "gmrule/bigint.hpp"
#include "gmrule/pile_vector.hpp"

namespace gmrule {

// What a move does when no entry is a multiple of ell.
enum class Fallback {
  kKeepLargest,  // keep x_n, reduce the others
};

class RuleParams {
 public:
  explicit RuleParams(long ell, Fallback fallback = Fallback::kKeepLargest);

  long ell() const { return ell_; }
  Fallback fallback() const { return fallback_; }

 private:
  long ell_;
  Fallback fallback_;
};

struct PivotResult {
  std::optional<std::size_t> index;  // 1-based
  BigInt value;                      // meaningful only when index is set

  bool present() const { return index.has_value(); }
};

struct StepRecord {
  std::size_t kept = 0;  // 1-based
  bool fallback = false;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct MoveResult {
  PileVector next;
  StepRecord step;
};

// Rightmost index of the minimal entry divisible by ell.
PivotResult pivot(const PileVector& x, const RuleParams& params);

bool has_multiple(const PileVector& x, const RuleParams& params);

// One GM-move: keep the pivot (or x_n under the fallback), reduce the rest.
MoveResult gm_move(const PileVector& x, const RuleParams& params);

// In-place variant used by the hot loops.
StepRecord gm_step(PileVector& x, const RuleParams& params);

// x^steps by repeated moves. Cost is steps * n; this is the oracle every
// fast path is checked against.
PileVector simulate(PileVector x, const RuleParams& params, std::uint64_t steps);

}  // namespace gmrule

#endif  // GMRULE_GM_CORE_HPP_
