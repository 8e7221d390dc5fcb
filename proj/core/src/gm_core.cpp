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

#include "gmrule/gm_core.hpp"

#include <string>

namespace gmrule {

RuleParams::RuleParams(long ell, Fallback fallback) : ell_(ell), fallback_(fallback) {
  if (ell < 2) throw DomainError("ell must be at least 2, got " + std::to_string(ell));
}

namespace {

// 0-based pivot position, or n when absent.
std::size_t pivot_position(const PileVector& x, unsigned long ell) {
  const std::size_t n = x.size();
  std::size_t best = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!divisible(x[i], ell)) continue;
    // Sorted input: a later multiple with the same value wins the tie,
    // a larger one ends the scan.
    if (best == n || x[i] == x[best]) {
      best = i;
    } else {
      break;
    }
  }
  return best;
}

}  // namespace

PivotResult pivot(const PileVector& x, const RuleParams& params) {
  const std::size_t at = pivot_position(x, static_cast<unsigned long>(params.ell()));
  if (at == x.size()) return {};
  return {at + 1, x[at]};
}

bool has_multiple(const PileVector& x, const RuleParams& params) {
  return pivot_position(x, static_cast<unsigned long>(params.ell())) != x.size();
}

StepRecord gm_step(PileVector& x, const RuleParams& params) {
  std::size_t at = pivot_position(x, static_cast<unsigned long>(params.ell()));
  const bool fallback = at == x.size();
  if (fallback) at = x.size() - 1;
  x.decrement_all_but(at);
  return {at + 1, fallback};
}

MoveResult gm_move(const PileVector& x, const RuleParams& params) {
  PileVector next = x;
  StepRecord step = gm_step(next, params);
  return {std::move(next), step};
}

PileVector simulate(PileVector x, const RuleParams& params, std::uint64_t steps) {
  for (std::uint64_t j = 0; j < steps; ++j) gm_step(x, params);
  return x;
}

}  // namespace gmrule
