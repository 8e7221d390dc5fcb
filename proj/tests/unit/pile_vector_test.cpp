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

#include "gmrule/pile_vector.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support/reference.hpp"

namespace gmrule {
namespace {

TEST(PileVectorTest, SortsOnConstruction) {
  const PileVector x{21, 16, 20, 17, 20};
  EXPECT_EQ(x.str(), "16,17,20,20,21");
  EXPECT_EQ(x.size(), 5u);
}

TEST(PileVectorTest, ParsesCanonicalAndUnsortedText) {
  EXPECT_EQ(PileVector::parse("16,17,20,20,21"), (PileVector{16, 17, 20, 20, 21}));
  EXPECT_EQ(PileVector::parse(" 3, -1 ,+2"), (PileVector{-1, 2, 3}));
  EXPECT_EQ(PileVector::parse("0"), (PileVector{0}));
}

TEST(PileVectorTest, ParsesValuesBeyondMachineWidth) {
  const PileVector x = PileVector::parse("123456789012345678901234567890,-5");
  EXPECT_EQ(x[1].get_str(), "123456789012345678901234567890");
  EXPECT_EQ(x.str(), "-5,123456789012345678901234567890");
}

TEST(PileVectorTest, RejectsMalformedText) {
  EXPECT_THROW(PileVector::parse(""), DomainError);
  EXPECT_THROW(PileVector::parse("1,,2"), DomainError);
  EXPECT_THROW(PileVector::parse("1,x"), DomainError);
  EXPECT_THROW(PileVector::parse("-"), DomainError);
  EXPECT_THROW(PileVector(std::vector<BigInt>{}), DomainError);
}

TEST(PileVectorTest, RangeOf) {
  EXPECT_EQ(range_of(PileVector{16, 17, 20, 20, 21}), 5);
  EXPECT_EQ(range_of(PileVector{7, 7, 7}), 0);
  EXPECT_EQ(range_of(PileVector{0, 1, 1}), 1);
}

TEST(PileVectorTest, BrokenSortednessIsReportedNotRepaired) {
  PileVector x{1, 1};
  EXPECT_THROW(x.decrement_all_but(0), std::logic_error);
}

TEST(PileVectorTest, DropBlocksChecksOrder) {
  PileVector x{0, 5, 9};
  x.drop_blocks(1, 0, 4);
  EXPECT_EQ(x, (PileVector{0, 1, 5}));
  EXPECT_THROW(x.drop_blocks(1, 0, 2), std::logic_error);
}

TEST(PileVectorTest, PrintedFormReparsesIdentically) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const PileVector x = testing::to_pile(testing::random_vector(rng, n, -100000, 100000));
    EXPECT_EQ(PileVector::parse(x.str()), x);
  }
}

}  // namespace
}  // namespace gmrule
