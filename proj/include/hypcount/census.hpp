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

// Closed-form counts of hyperelliptic curves of genus g over F_q.
//
// Arguments of A0, A1, A2 and a_p1 are rationals num/den; a non-integral or
// non-positive argument contributes 0. All divisions are exact and checked.

#include <cstdint>
#include <optional>
#include <string>

#include "hypcount/numtheory.hpp"

namespace hypcount {

// Number of rational n-sets of P^1, and normalized counts for
// A^1 (A1 = a / q), G_m (A2 = a / (q - 1)) and P^1 minus a conjugate
// pair of quadratic points (A0 = a / (q + 1)).
BigInt a_p1(const PrimePower& q, uint64_t num, uint64_t den = 1);
BigInt A1(const PrimePower& q, uint64_t num, uint64_t den = 1);
BigInt A2(const PrimePower& q, uint64_t num, uint64_t den = 1);
BigInt A0(const PrimePower& q, uint64_t num, uint64_t den = 1);

// Burnside contributions of the four element kinds; h_D = 2 q^{2g-1}.
struct Components {
  BigInt h_A, h_B, h_C, h_D;
  BigInt sum() const { return h_A + h_B + h_C + h_D; }
};

BigInt hyp(uint32_t g, const PrimePower& q);
BigInt sd(uint32_t g, const PrimePower& q);
Components components(uint32_t g, const PrimePower& q);

struct CensusReport {
  uint32_t g = 0;
  PrimePower q;
  BigInt hyp, sd, y;
  Components components;
  std::string method = "formula";
  std::optional<double> elapsed_seconds;
};

// Throws InvalidArgument for g < 2.
CensusReport census(uint32_t g, const PrimePower& q);

// Counts are written as decimal strings. Timings appear only when asked.
std::string to_json(const CensusReport& r, bool with_timings = false);

}  // namespace hypcount
