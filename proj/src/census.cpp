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

#include "hypcount/census.hpp"

#include <chrono>

#include <json.hpp>

#include "hypcount/error.hpp"

namespace hypcount {
namespace {

// n = num / den when that is a positive integer.
std::optional<uint64_t> integral(uint64_t num, uint64_t den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  if (num == 0 || num % den) return std::nullopt;
  return num / den;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  HYPCOUNT_CHECK(a % b == 0, "inexact division in census formula");
  return a / b;
}

BigInt pow_q(const PrimePower& q, uint64_t k) { return big_pow(q.q, static_cast<uint32_t>(k)); }

int sign(uint64_t exponent) { return exponent % 2 ? -1 : 1; }

void check_genus(uint32_t g) {
  if (g < 2) throw InvalidArgument("genus must be at least 2");
}

}  // namespace

BigInt a_p1(const PrimePower& q, uint64_t num, uint64_t den) {
  const auto n = integral(num, den);
  if (!n) return 0;
  if (*n == 1) return BigInt(q.q) + 1;
  if (*n == 2) return pow_q(q, 2);
  return pow_q(q, *n) - pow_q(q, *n - 2);
}

BigInt A1(const PrimePower& q, uint64_t num, uint64_t den) {
  const auto n = integral(num, den);
  if (!n) return 0;
  if (*n == 1) return 1;
  return pow_q(q, *n - 1) - pow_q(q, *n - 2);
}

BigInt A2(const PrimePower& q, uint64_t num, uint64_t den) {
  const auto n = integral(num, den);
  if (!n) return 0;
  return exact_div(pow_q(q, *n) - sign(*n), BigInt(q.q) + 1);
}

BigInt A0(const PrimePower& q, uint64_t num, uint64_t den) {
  const auto n = integral(num, den);
  if (!n) return 0;
  const BigInt numer = pow_q(q, *n + 1) - pow_q(q, *n) - sign((*n + 1) / 2) * BigInt(q.q) +
                       sign(*n / 2);
  return exact_div(numer, pow_q(q, 2) + 1);
}

BigInt hyp(uint32_t g, const PrimePower& q) {
  check_genus(g);
  const uint64_t qp = q.q + 1, qm = q.q - 1;
  BigInt total = 2 * pow_q(q, 2 * g - 1);

  for (uint64_t m : divisors(2 * g + 2)) {
    if (m == 1) continue;
    const uint64_t n = (2 * g + 2) / m;
    const uint64_t phi = euler_phi(m);
    if (qp % m == 0 && n % 2 == 0) total += phi * A0(q, n);
    if (qm % m == 0) total += phi * A2(q, n);
    if (m == q.p) total += 2 * A1(q, n);
  }
  for (uint64_t m : divisors(2 * g + 1)) {
    if (m == 1) continue;
    const uint64_t n = (2 * g + 1) / m;
    if (qm % m == 0) total += 2 * euler_phi(m) * A2(q, n);
    if (m == q.p) total += 2 * A1(q, n);
  }
  for (uint64_t m : divisors(2 * g)) {
    if (m == 1) continue;
    const uint64_t n = 2 * g / m;
    const uint64_t phi = euler_phi(m);
    if (qp % m == 0 && n % 2 == (qp / m) % 2) total += phi * A0(q, n);
    if (qm % m == 0 && (qm / m) % 2 == 0) total += phi * A2(q, n);
  }
  return total;
}

BigInt sd(uint32_t g, const PrimePower& q) {
  check_genus(g);
  const uint64_t qp = q.q + 1, qm = q.q - 1;
  BigInt total = 0;
  for (uint64_t m : divisors(2 * g + 2)) {
    const uint64_t n = (2 * g + 2) / m;
    if (m > 1 && qp % m == 0 && n % 2 == 1) total += euler_phi(m) * A0(q, n);
  }
  for (uint64_t m : divisors(2 * g)) {
    if (m == 1) continue;
    const uint64_t n = 2 * g / m;
    const uint64_t phi = euler_phi(m);
    if (qp % m == 0 && n % 2 != (qp / m) % 2) total += phi * A0(q, n);
    if (qm % m == 0 && (qm / m) % 2 == 1) total += phi * A2(q, n);
  }
  return total;
}

Components components(uint32_t g, const PrimePower& q) {
  check_genus(g);
  const uint64_t qp = q.q + 1, qm = q.q - 1;
  Components c;
  for (uint64_t m : divisors(qp)) {
    if (m == 1) continue;
    BigInt inner = 0;
    if (const auto n = integral(2 * g + 2, m); n && *n % 2 == 0) inner += A0(q, *n);
    if (const auto n = integral(2 * g, m); n && *n % 2 == (qp / m) % 2) inner += A0(q, *n);
    c.h_A += euler_phi(m) * inner;
  }
  c.h_B = 2 * A1(q, 2 * g + 2, q.p) + 2 * A1(q, 2 * g + 1, q.p);
  for (uint64_t m : divisors(qm)) {
    if (m == 1) continue;
    BigInt inner = A2(q, 2 * g + 2, m) + 2 * A2(q, 2 * g + 1, m);
    if ((qm / m) % 2 == 0) inner += A2(q, 2 * g, m);
    c.h_C += euler_phi(m) * inner;
  }
  c.h_D = 2 * pow_q(q, 2 * g - 1);
  return c;
}

CensusReport census(uint32_t g, const PrimePower& q) {
  const auto start = std::chrono::steady_clock::now();
  CensusReport r;
  r.g = g;
  r.q = q;
  r.hyp = hyp(g, q);
  r.sd = sd(g, q);
  const BigInt twice_y = r.hyp + r.sd;
  HYPCOUNT_CHECK(twice_y % 2 == 0, "hyp + sd is odd");
  r.y = twice_y / 2;
  r.components = components(g, q);
  HYPCOUNT_CHECK(r.components.sum() == r.hyp, "type components do not sum to hyp");
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string to_json(const CensusReport& r, bool with_timings) {
  nlohmann::ordered_json j;
  j["g"] = r.g;
  j["q"] = r.q.q;
  j["p"] = r.q.p;
  j["e"] = r.q.e;
  j["hyp"] = to_decimal(r.hyp);
  j["sd"] = to_decimal(r.sd);
  j["y"] = to_decimal(r.y);
  j["components"] = {{"h_A", to_decimal(r.components.h_A)},
                     {"h_B", to_decimal(r.components.h_B)},
                     {"h_C", to_decimal(r.components.h_C)},
                     {"h_D", to_decimal(r.components.h_D)}};
  j["method"] = r.method;
  if (with_timings && r.elapsed_seconds) j["elapsed_seconds"] = *r.elapsed_seconds;
  return j.dump();
}

}  // namespace hypcount
