// Copyright 2026 The hypcount Authors.
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypcount {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

// q = p^e with p prime.
struct PrimePower {
  uint64_t p = 0;
  uint32_t e = 0;
  uint64_t q = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(uint64_t n);

// Returns (p, e) when q is a prime power, nullopt otherwise.
std::optional<PrimePower> factor_prime_power(uint64_t q);

// Validating constructors; throw InvalidArgument for even or
// non-prime-power input.
PrimePower odd_prime_power(uint64_t q);
PrimePower odd_prime_power(uint64_t p, uint32_t e);

// All odd prime powers in [3, bound], ascending.
std::vector<PrimePower> odd_prime_powers_up_to(uint64_t bound);

// Positive divisors of n, ascending.
std::vector<uint64_t> divisors(uint64_t n);

uint64_t euler_phi(uint64_t n);
uint64_t gcd_u64(uint64_t a, uint64_t b);
uint64_t lcm_u64(uint64_t a, uint64_t b);

// Throws InvalidArgument on 64-bit overflow.
uint64_t checked_pow(uint64_t base, uint32_t exp);

BigInt big_pow(uint64_t base, uint32_t exp);

}  // namespace hypcount
