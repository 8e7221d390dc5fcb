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

#include <gtest/gtest.h>

#include <random>

#include "support/reference.hpp"

namespace gmrule {
namespace {

using testing::Vec;

TEST(PivotTest, FourEntryExamples) {
  const RuleParams three(3);
  PivotResult p = pivot(PileVector{15, 15, 17, 18}, three);
  ASSERT_TRUE(p.present());
  EXPECT_EQ(*p.index, 2u);
  EXPECT_EQ(p.value, 15);

  p = pivot(PileVector{11, 12, 12, 12}, three);
  ASSERT_TRUE(p.present());
  EXPECT_EQ(*p.index, 4u);
  EXPECT_EQ(p.value, 12);
}

TEST(PivotTest, AbsentWithoutMultiples) {
  EXPECT_FALSE(pivot(PileVector{1, 2, 4, 5}, RuleParams(3)).present());
}

TEST(PivotTest, SingleZeroIsAlwaysPivot) {
  for (long ell : {2, 3, 7, 11}) {
    const PivotResult p = pivot(PileVector{0}, RuleParams(ell));
    ASSERT_TRUE(p.present());
    EXPECT_EQ(*p.index, 1u);
    EXPECT_EQ(p.value, 0);
  }
}

TEST(PivotTest, NegativeMultiples) {
  const PivotResult p = pivot(PileVector{-7, -6, -6, -3}, RuleParams(3));
  ASSERT_TRUE(p.present());
  EXPECT_EQ(*p.index, 3u);
  EXPECT_EQ(p.value, -6);
}

TEST(RuleParamsTest, RejectsSmallEll) {
  EXPECT_THROW(RuleParams(1), DomainError);
  EXPECT_THROW(RuleParams(0), DomainError);
  EXPECT_THROW(RuleParams(-4), DomainError);
}

TEST(GmMoveTest, Examples) {
  MoveResult m = gm_move(PileVector{15, 15, 17, 18}, RuleParams(3));
  EXPECT_EQ(m.next, (PileVector{14, 15, 16, 17}));
  EXPECT_EQ(m.step, (StepRecord{2, false}));

  m = gm_move(PileVector{5, 5, 7, 8, 9}, RuleParams(7));
  EXPECT_EQ(m.next, (PileVector{4, 4, 7, 7, 8}));

  m = gm_move(PileVector{-1, 0, 2, 3, 6}, RuleParams(7));
  EXPECT_EQ(m.next, (PileVector{-2, 0, 1, 2, 5}));
}

TEST(GmMoveTest, LoneEntryIsKeptForever) {
  const PileVector x{5};
  EXPECT_EQ(simulate(x, RuleParams(2), 10), x);
}

TEST(GmMoveTest, FallbackKeepsLargest) {
  const MoveResult m = gm_move(PileVector{1, 1, 2}, RuleParams(3));
  EXPECT_EQ(m.next, (PileVector{0, 0, 2}));
  EXPECT_EQ(m.step, (StepRecord{3, true}));
}

TEST(SimulateTest, Examples) {
  const PileVector x0{16, 17, 20, 20, 21};
  EXPECT_EQ(simulate(x0, RuleParams(2), 5), (PileVector{14, 14, 15, 15, 16}));
  EXPECT_EQ(simulate(x0, RuleParams(3), 7), (PileVector{12, 13, 13, 13, 15}));
  EXPECT_EQ(simulate(x0, RuleParams(3), 0), x0);
}

TEST(SimulateTest, MatchesReferenceRule) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const long ell = 2 + static_cast<long>(rng() % 8);
    Vec x = testing::random_vector(rng, n, -50, 50);
    PileVector px = testing::to_pile(x);
    for (int j = 0; j < 40; ++j) {
      std::size_t kept = 0;
      x = testing::reference_move(x, ell, &kept);
      const StepRecord s = gm_step(px, RuleParams(ell));
      ASSERT_EQ(s.kept, kept + 1);
      ASSERT_EQ(testing::to_vec(px), x);
    }
  }
}

class GmInvariantTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20260101};
};

TEST_F(GmInvariantTest, MovesPreserveSortednessAndChangeRangeByAtMostOne) {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const long ell = 2 + static_cast<long>(rng() % 8);
    PileVector x = testing::to_pile(testing::random_vector(rng, n, -200, 200));
    for (int j = 0; j < 30; ++j) {
      const BigInt before = range_of(x);
      gm_step(x, RuleParams(ell));  // throws if sortedness broke
      const BigInt delta = range_of(x) - before;
      ASSERT_LE(abs(delta), 1);
    }
  }
}

TEST_F(GmInvariantTest, SettledRangeIsAbsorbing) {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const long ell = 2 + static_cast<long>(rng() % 8);
    PileVector x = testing::to_pile(testing::random_settled(rng, n, ell));
    for (int j = 0; j < 3 * static_cast<int>(n) * ell; ++j) {
      const StepRecord s = gm_step(x, RuleParams(ell));
      ASSERT_FALSE(s.fallback);
      ASSERT_LE(range_of(x), ell);
    }
  }
}

TEST_F(GmInvariantTest, TotalRangeIncreaseIsAtMostEll) {
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const long ell = 2 + static_cast<long>(rng() % 8);
    const PileVector x0 = testing::to_pile(testing::random_vector(rng, n, -60, 60));
    PileVector x = x0;
    for (int j = 0; j < 200; ++j) {
      gm_step(x, RuleParams(ell));
      ASSERT_LE(range_of(x) - range_of(x0), ell);
    }
  }
}

TEST_F(GmInvariantTest, ShiftByMultipleOfEllCommutesWithMove) {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const long ell = 2 + static_cast<long>(rng() % 8);
    const PileVector x = testing::to_pile(testing::random_vector(rng, n, -100, 100));
    const BigInt shift = BigInt(static_cast<long>(rng() % 41) - 20) * ell;
    const MoveResult plain = gm_move(x, RuleParams(ell));
    const MoveResult moved = gm_move(x.shifted(shift), RuleParams(ell));
    ASSERT_EQ(moved.next, plain.next.shifted(shift));
    ASSERT_EQ(moved.step, plain.step);
  }
}

// A lone entry is never reduced, so the reachability half needs n >= 2.
TEST_F(GmInvariantTest, MultipleOfEllPersistsAndAppearsWithinEllMinusOneMoves) {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const long ell = 2 + static_cast<long>(rng() % 8);
    PileVector x = testing::to_pile(testing::random_vector(rng, n, -100, 100));
    int moves_without = 0;
    while (!has_multiple(x, RuleParams(ell))) {
      gm_step(x, RuleParams(ell));
      ++moves_without;
    }
    ASSERT_LE(moves_without, ell - 1);
    for (int j = 0; j < 50; ++j) {
      ASSERT_FALSE(gm_step(x, RuleParams(ell)).fallback);
    }
  }
}

}  // namespace
}  // namespace gmrule
