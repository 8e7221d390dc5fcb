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

#include "gmrule/periodicity.hpp"

#include <cctype>

namespace gmrule {

namespace {

void require_settled(const PileVector& x, const RuleParams& params, const char* what) {
  if (range_of(x) > params.ell()) {
    throw DomainError(std::string(what) + ": range(x) = " + range_of(x).get_str() +
                      " exceeds ell = " + std::to_string(params.ell()) +
                      "; settle the vector first");
  }
  if (!has_multiple(x, params)) {
    throw DomainError(std::string(what) + ": x has no entry divisible by ell");
  }
}

std::uint64_t period_of(const PileVector& x, const RuleParams& params) {
  return static_cast<std::uint64_t>(x.size()) * static_cast<std::uint64_t>(params.ell());
}

}  // namespace

std::string PeriodSummary::run_length() const {
  std::string out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t k = i;
    while (k < word.size() && word[k] == word[i]) ++k;
    if (!out.empty()) out += ' ';
    out += word[i];
    if (k - i > 1) out += "^" + std::to_string(k - i);
    i = k;
  }
  return out;
}

std::vector<std::pair<char, std::uint64_t>> PeriodSummary::cyclic_runs() const {
  std::vector<std::pair<char, std::uint64_t>> runs;
  if (word.empty()) return runs;
  const std::size_t p = word.size();
  // Start at a letter boundary so no run straddles the seam.
  std::size_t start = 0;
  while (start < p && word[start] == word[(start + p - 1) % p]) ++start;
  if (start == p) return {{word[0], p}};
  for (std::size_t done = 0; done < p;) {
    const char c = word[(start + done) % p];
    std::uint64_t len = 0;
    while (done < p && word[(start + done) % p] == c) {
      ++len;
      ++done;
    }
    runs.emplace_back(c, len);
  }
  return runs;
}

std::string expand_run_length(std::string_view runs) {
  std::string out;
  std::size_t i = 0;
  while (i < runs.size()) {
    const char c = runs[i];
    if (c == ' ' || c == ',') {
      ++i;
      continue;
    }
    if (c != 's' && c != 'r') throw DomainError("bad letter in run-length word");
    ++i;
    std::size_t count = 1;
    if (i < runs.size() && runs[i] == '^') {
      ++i;
      count = 0;
      while (i < runs.size() && std::isdigit(static_cast<unsigned char>(runs[i]))) {
        count = count * 10 + static_cast<std::size_t>(runs[i] - '0');
        ++i;
      }
    }
    out.append(count, c);
  }
  return out;
}

bool same_up_to_rotation(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  const std::string doubled = std::string(a) + std::string(a);
  return doubled.find(b) != std::string::npos;
}

PileVector fast_forward(const PileVector& x, const RuleParams& params, const BigInt& j) {
  require_settled(x, params, "fast_forward");
  if (sgn(j) < 0) throw DomainError("fast_forward: negative step count");
  const BigInt period = BigInt(static_cast<unsigned long>(period_of(x, params)));
  const BigInt q = floor_div(j, period);
  const std::uint64_t r = to_u64(j - q * period);
  PileVector out = simulate(x, params, r);
  const BigInt drop = q * (static_cast<long>(x.size()) - 1) * params.ell();
  out.drop_blocks(0, 0, drop);
  return out;
}

PeriodSummary period_word(const PileVector& x, const RuleParams& params,
                          std::size_t column) {
  require_settled(x, params, "period_word");
  if (column < 1 || column > x.size()) {
    throw DomainError("period_word: column out of range");
  }
  PeriodSummary out;
  out.column = column;
  out.period_length = period_of(x, params);
  out.word.reserve(out.period_length);
  PileVector cur = x;
  for (std::uint64_t j = 0; j < out.period_length; ++j) {
    const bool pivotal = gm_step(cur, params).kept == column;
    out.word += pivotal ? 's' : 'r';
    ++(pivotal ? out.s_count : out.r_count);
  }
  out.drop_per_period = BigInt(static_cast<long>(x.size()) - 1) * params.ell();
  return out;
}

std::vector<std::size_t> pivot_log(PileVector x, const RuleParams& params,
                                   std::size_t steps) {
  std::vector<std::size_t> log;
  log.reserve(steps);
  for (std::size_t j = 0; j < steps; ++j) log.push_back(gm_step(x, params).kept);
  return log;
}

bool pivot_shift_holds(std::span<const std::size_t> log, std::size_t n, long ell,
                       std::size_t window) {
  const auto shift = static_cast<std::size_t>(ell);
  for (std::size_t j = 0; j < window && j + shift < log.size(); ++j) {
    const std::size_t expected = log[j] == 1 ? n : log[j] - 1;
    if (log[j + shift] != expected) return false;
  }
  return true;
}

bool pivot_shift_check(const PileVector& x, const RuleParams& params, std::size_t window) {
  require_settled(x, params, "pivot_shift_check");
  if (window < static_cast<std::size_t>(params.ell())) {
    throw DomainError("pivot_shift_check: window must be at least ell");
  }
  const auto log = pivot_log(x, params, window + static_cast<std::size_t>(params.ell()));
  return pivot_shift_holds(log, x.size(), params.ell(), window);
}

std::vector<std::vector<std::uint64_t>> pivot_return_gaps(const PileVector& x,
                                                          const RuleParams& params,
                                                          std::size_t window) {
  require_settled(x, params, "pivot_return_gaps");
  const auto log = pivot_log(x, params, window);
  std::vector<std::vector<std::uint64_t>> gaps(x.size());
  for (std::size_t col = 1; col <= x.size(); ++col) {
    bool seen = false;
    std::size_t last = 0;
    for (std::size_t j = 0; j < log.size(); ++j) {
      if (log[j] != col) continue;
      if (seen && j > last + 1) gaps[col - 1].push_back(j - last - 1);
      seen = true;
      last = j;
    }
  }
  return gaps;
}

}  // namespace gmrule
