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

#ifndef GMRULE_PILE_VECTOR_HPP_
#define GMRULE_PILE_VECTOR_HPP_

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gmrule/bigint.hpp"

namespace gmrule {

// The state x of the GM system: a non-decreasing integer vector of fixed
// length n >= 1. Entries may be negative. Indices in the public API are
// 1-based, as in the printed tables; `operator[]` is 0-based.
class PileVector {
 public:
  // Sorts once on construction.
  explicit PileVector(std::vector<BigInt> entries);
  PileVector(std::initializer_list<long> entries);

  // Accepts "16,17,20,20,21" (whitespace tolerated, any order).
  static PileVector parse(std::string_view text);

  std::size_t size() const { return entries_.size(); }
  std::span<const BigInt> entries() const { return entries_; }
  const BigInt& operator[](std::size_t i) const { return entries_[i]; }
  const BigInt& front() const { return entries_.front(); }
  const BigInt& back() const { return entries_.back(); }

  // Canonical comma-separated form.
  std::string str() const;

  // x + delta * e.
  PileVector shifted(const BigInt& delta) const;

  // Subtracts `lead_drop` from entries [0, split) and `tail_drop` from
  // [split, n). Throws std::logic_error if the result is not sorted.
  void drop_blocks(std::size_t split, const BigInt& lead_drop,
                   const BigInt& tail_drop);

  // Keeps entry `kept` (0-based) and decrements every other entry.
  // Throws std::logic_error if sortedness is broken; it is never repaired.
  void decrement_all_but(std::size_t kept);

  friend bool operator==(const PileVector&, const PileVector&) = default;

 private:
  void check_sorted() const;

  std::vector<BigInt> entries_;
};

std::ostream& operator<<(std::ostream& os, const PileVector& x);

// x_n - x_1.
BigInt range_of(const PileVector& x);

}  // namespace gmrule

#endif  // GMRULE_PILE_VECTOR_HPP_
