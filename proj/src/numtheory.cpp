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

#include "hypcount/numtheory.hpp"

#include <numeric>

#include "hypcount/error.hpp"

namespace hypcount {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::optional<PrimePower> factor_prime_power(uint64_t q) {
  if (q < 2) return std::nullopt;
  uint64_t p = 0;
  for (uint64_t d = 2; d <= q / d; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{q, 1, q};
  uint32_t e = 0;
  uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, e, q};
}

PrimePower odd_prime_power(uint64_t q) {
  auto pp = factor_prime_power(q);
  if (!pp) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  if (pp->p == 2) throw InvalidArgument("q = " + std::to_string(q) + " has characteristic 2");
  return *pp;
}

PrimePower odd_prime_power(uint64_t p, uint32_t e) {
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (p == 2) throw InvalidArgument("characteristic 2 is not supported");
  if (e < 1) throw InvalidArgument("extension degree must be at least 1");
  return PrimePower{p, e, checked_pow(p, e)};
}

std::vector<PrimePower> odd_prime_powers_up_to(uint64_t bound) {
  std::vector<PrimePower> out;
  for (uint64_t q = 3; q <= bound; q += 2)
    if (auto pp = factor_prime_power(q)) out.push_back(*pp);
  return out;
}

std::vector<uint64_t> divisors(uint64_t n) {
  std::vector<uint64_t> small, large;
  for (uint64_t d = 1; d <= n / d; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

uint64_t euler_phi(uint64_t n) {
  uint64_t result = n;
  for (uint64_t d = 2; d <= n / d; ++d) {
    if (n % d) continue;
    while (n % d == 0) n /= d;
    result -= result / d;
  }
  if (n > 1) result -= result / n;
  return result;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

uint64_t lcm_u64(uint64_t a, uint64_t b) { return a / std::gcd(a, b) * b; }

uint64_t checked_pow(uint64_t base, uint32_t exp) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base)
      throw InvalidArgument("integer power overflows 64 bits");
    r *= base;
  }
  return r;
}

BigInt big_pow(uint64_t base, uint32_t exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

}  // namespace hypcount
