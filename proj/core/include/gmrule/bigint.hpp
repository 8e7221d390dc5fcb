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

#ifndef GMRULE_BIGINT_HPP_
#define GMRULE_BIGINT_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gmrule {

// Arbitrary-precision signed integer used for entries and step counts.
using BigInt = mpz_class;

// Base class for precondition failures on otherwise well-formed input
// (e.g. fast-forwarding a vector that has not settled).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search or memo table outgrew its configured state budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

// Parses an optionally signed decimal integer; throws DomainError on junk.
BigInt parse_big(std::string_view text);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// Floor division and the matching non-negative remainder for d > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& d) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}
inline BigInt floor_mod(const BigInt& a, const BigInt& d) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return r;
}

inline bool divisible(const BigInt& a, unsigned long d) {
  return mpz_divisible_ui_p(a.get_mpz_t(), d) != 0;
}

inline bool fits_u64(const BigInt& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}
std::uint64_t to_u64(const BigInt& v);
std::int64_t to_i64(const BigInt& v);

}  // namespace gmrule

#endif  // GMRULE_BIGINT_HPP_
