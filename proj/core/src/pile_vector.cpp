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

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gmrule {

BigInt parse_big(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  std::size_t digits = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == digits) {
    throw DomainError("expected an integer, got '" + std::string(text) + "'");
  }
  for (std::size_t i = digits; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw DomainError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

std::uint64_t to_u64(const BigInt& v) {
  if (!fits_u64(v)) throw DomainError("value " + v.get_str() + " exceeds 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

std::int64_t to_i64(const BigInt& v) {
  if (!v.fits_slong_p()) throw DomainError("value " + v.get_str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(v.get_si());
}

PileVector::PileVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("vector must have at least one entry");
  std::sort(entries_.begin(), entries_.end());
}

PileVector::PileVector(std::initializer_list<long> entries) {
  entries_.reserve(entries.size());
  for (long v : entries) entries_.emplace_back(v);
  if (entries_.empty()) throw DomainError("vector must have at least one entry");
  std::sort(entries_.begin(), entries_.end());
}

PileVector PileVector::parse(std::string_view text) {
  std::vector<BigInt> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_big(text.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return PileVector(std::move(out));
}

std::string PileVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i].get_str();
  }
  return out;
}

PileVector PileVector::shifted(const BigInt& delta) const {
  PileVector out = *this;
  for (auto& v : out.entries_) v += delta;
  return out;
}

void PileVector::drop_blocks(std::size_t split, const BigInt& lead_drop,
                             const BigInt& tail_drop) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] -= i < split ? lead_drop : tail_drop;
  }
  check_sorted();
}

void PileVector::decrement_all_but(std::size_t kept) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i != kept) --entries_[i];
  }
  check_sorted();
}

void PileVector::check_sorted() const {
  if (!std::is_sorted(entries_.begin(), entries_.end())) {
    throw std::logic_error("GM state lost sortedness: " + str());
  }
}

std::ostream& operator<<(std::ostream& os, const PileVector& x) {
  return os << x.str();
}

BigInt range_of(const PileVector& x) { return x.back() - x.front(); }

}  // namespace gmrule
