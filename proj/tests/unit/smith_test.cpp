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

#include "gmrule/smith.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace gmrule {
namespace {

TEST(SmithOracleTest, SmallValues) {
  SmithOracle oracle;
  EXPECT_EQ(oracle.remoteness(nim::GamePosition{0, 0}), 0u);
  EXPECT_EQ(oracle.remoteness(nim::GamePosition{0, 1}), 1u);
  EXPECT_EQ(oracle.remoteness(nim::GamePosition{1, 1}), 2u);
  EXPECT_EQ(oracle.remoteness(nim::GamePosition{2, 2}), 4u);
  EXPECT_EQ(oracle.remoteness(nim::GamePosition{1, 2, 3}), 3u);
  EXPECT_EQ(oracle.remoteness(nim::GamePosition{0, 0, 9}), 0u);
}

TEST(SmithOracleTest, OrderDoesNotMatter) {
  SmithOracle oracle;
  const std::vector<std::int64_t> a{3, 1, 2};
  const std::vector<std::int64_t> b{1, 2, 3};
  EXPECT_EQ(oracle.remoteness(a), oracle.remoteness(b));
}

TEST(SmithOracleTest, RejectsNegativePiles) {
  SmithOracle oracle;
  const std::vector<std::int64_t> bad{-1, 4};
  EXPECT_THROW(oracle.remoteness(bad), DomainError);
}

TEST(SmithOracleTest, BudgetIsEnforced) {
  SmithOracle oracle(10);
  const std::vector<std::int64_t> big{20, 25, 30, 35};
  EXPECT_THROW(oracle.remoteness(big), BudgetExceeded);
}

TEST(SmithOracleTest, TwoPileBounds) {
  SmithOracle oracle;
  for (std::int64_t a = 0; a <= 30; ++a) {
    for (std::int64_t b = a; b <= 30; ++b) {
      const std::vector<std::int64_t> x{a, b};
      const std::uint64_t r = oracle.remoteness(x);
      // Each move removes exactly one stone.
      EXPECT_LE(r, static_cast<std::uint64_t>(a + b)) << a << "," << b;
      if (a == 0) EXPECT_EQ(r, static_cast<std::uint64_t>(b)) << a << "," << b;
    }
  }
}

}  // namespace
}  // namespace gmrule
