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

#include <gtest/gtest.h>

#include <iostream>

#include "gmrule/bigint.hpp"
#include "gmrule/grid.hpp"

namespace gmrule {
namespace {

TEST(PayoffTest, ComparesAsFractions) {
  EXPECT_EQ((Payoff{1, 2}), (Payoff{2, 4}));
  EXPECT_LT((Payoff{-3, 2}), (Payoff{-1, 1}));
  EXPECT_EQ((Payoff{7, 2}).str(), "7/2");
  EXPECT_EQ((Payoff{-4, 1}).str(), "-4");
  EXPECT_EQ((Payoff{6, 2}).str(), "3");
  EXPECT_EQ((Payoff{-9, 6}).str(), "-3/2");
}

TEST(NashTest, TerminalStartHasNothingToDeviate) {
  const NashReport r = check_nash({2, std::nullopt, {0, 0, 3}});
  EXPECT_EQ(r.gm_play_length, 0);
  EXPECT_EQ(r.gm_loser, 0);
  EXPECT_EQ(r.payoff_constant, 4);
  ASSERT_EQ(r.deviations.size(), 2u);
  EXPECT_FALSE(r.profitable_deviation());
}

TEST(NashTest, RejectsBadSpecs) {
  EXPECT_THROW(check_nash({1, std::nullopt, {1, 2}}), DomainError);
  EXPECT_THROW(check_nash({2, std::nullopt, {4}}), DomainError);
  EXPECT_THROW(check_nash({2, std::nullopt, {-1, 2}}), DomainError);
  // C must exceed every possible play length.
  EXPECT_THROW(check_nash({2, 1, {5, 5, 5}}), DomainError);
}

TEST(NashTest, TwoPlayersNeverGainOnGrid) {
  for_each_sorted_grid(3, 6, [](const std::vector<std::int64_t>& x) {
    const NashReport r = check_nash({2, std::nullopt, x});
    for (const auto& d : r.deviations) {
      EXPECT_GE(d.best_payoff, d.gm_payoff);
      EXPECT_FALSE(d.profitable) << "deviation by player " << d.player;
    }
  });
}

// Independent exhaustive search finds exactly these starts on [0..6]^3.
TEST(NashTest, ThreePlayerCounterexamples) {
  std::vector<std::vector<std::int64_t>> found;
  for_each_sorted_grid(3, 6, [&](const std::vector<std::int64_t>& x) {
    if (check_nash({3, std::nullopt, x}).profitable_deviation()) found.push_back(x);
  });
  const std::vector<std::vector<std::int64_t>> expected{
      {2, 4, 4}, {4, 4, 5}, {5, 5, 5}, {5, 5, 6}, {6, 6, 6}};
  EXPECT_EQ(found, expected);
  const NashReport r = check_nash({3, std::nullopt, {2, 4, 4}});
  EXPECT_EQ(r.deviations[0].gm_payoff.str(), "3");
  EXPECT_EQ(r.deviations[0].best_payoff.str(), "7/2");
}

TEST(NashTest, ThreePlayerReportIsConsistent) {
  std::size_t profitable = 0;
  std::size_t total = 0;
  for_each_sorted_grid(3, 5, [&](const std::vector<std::int64_t>& x) {
    const NashReport r = check_nash({3, std::nullopt, x});
    ASSERT_EQ(r.deviations.size(), 3u);
    for (const auto& d : r.deviations) {
      EXPECT_GE(d.best_payoff, d.gm_payoff);
      EXPECT_EQ(d.profitable, d.best_payoff > d.gm_payoff);
      if (d.profitable) {
        ASSERT_FALSE(d.line.empty());
        EXPECT_EQ(d.line.front(), x);
      }
    }
    profitable += r.profitable_deviation() ? 1 : 0;
    ++total;
  });
  ::testing::Test::RecordProperty("profitable_positions", static_cast<int>(profitable));
  std::cout << "three players: profitable deviation at " << profitable << " of " << total
            << " starting positions\n";
}

}  // namespace
}  // namespace gmrule
