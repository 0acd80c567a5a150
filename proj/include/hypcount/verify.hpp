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

// Exhaustive checks of the identities the census formulas rest on.
//
//   eps          epsilon from J equals its closed form on every stable set
//   counts       enumerated n-set counts of P^1, A^1, G_m, P^1 minus a
//                conjugate pair equal a_p1, q A1, (q-1) A2, (q+1) A0
//   norm         square-class facts about alpha in F_{q^2} \ F_q
//   orbit_lemma  J over a full orbit of a kind-A representative is alpha^m
//   cocycle      J(gr, S) = J(r, S) J(g, r S), conjugation invariance and
//                the stabilizer homomorphism property
//   quot         stable nm-sets of V avoiding Fix(g) number a_V(n)
//
// Failures are reported as data; the first counterexample stops a suite.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypcount/numtheory.hpp"

namespace hypcount {

struct VerifyOptions {
  std::vector<PrimePower> qs;  // empty: suite default
  std::vector<uint32_t> ns;    // empty: suite default
  uint64_t random_trials = 10000;
  uint64_t seed = 0x5eed;
};

struct VerifyReport {
  std::string suite;
  bool passed = true;
  uint64_t assertions = 0;
  std::vector<std::string> notes;  // one line per (q, n) block
  std::optional<std::string> counterexample;
};

const std::vector<std::string>& verify_suite_names();
VerifyOptions default_verify_options(std::string_view suite);

// Throws InvalidArgument for an unknown suite name.
VerifyReport verify_suite(std::string_view suite, const VerifyOptions& options = {});

std::string to_json(const VerifyReport& r);

}  // namespace hypcount
