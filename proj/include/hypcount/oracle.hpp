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

// Brute-force counts of genus-g hyperelliptic curves over a small F_q.
//
// Curves y^2 = lambda f_S(x) correspond to pairs (lambda, S) with lambda a
// square class and S a rational (2g+2)-set; isomorphism classes are the
// PGL_2(F_q)-orbits of the twisted action
//   gamma(lambda, S) = (lambda * J(gamma, S), gamma(S)).
// Two independent counts are provided: Burnside over the whole group and
// union-find over the orbit graph of three generators.

#include <cstdint>
#include <string>
#include <vector>

#include "hypcount/field.hpp"
#include "hypcount/moebius.hpp"
#include "hypcount/multiplier.hpp"
#include "hypcount/nset.hpp"
#include "hypcount/numtheory.hpp"

namespace hypcount {

// Square class of lambda: the trivial class or the class of a non-square.
enum class SquareClass : uint8_t { One = 0, NonSquare = 1 };

constexpr SquareClass operator*(SquareClass a, SquareClass b) {
  return a == b ? SquareClass::One : SquareClass::NonSquare;
}
constexpr SquareClass square_class_of(Sign s) {
  return s == Sign::Plus ? SquareClass::One : SquareClass::NonSquare;
}

struct TwistedClass {
  SquareClass lambda = SquareClass::One;
  RationalNSet nset;
  friend bool operator==(const TwistedClass&, const TwistedClass&) = default;
};

// |S| must be even. The multiplier is taken at the canonical representative.
TwistedClass twisted_act(const FieldTower& tower, const GlMatrix& m, const TwistedClass& x);
inline TwistedClass twisted_act(const FieldTower& tower, const MoebiusElem& g,
                                const TwistedClass& x) {
  return twisted_act(tower, g.rep, x);
}

// True iff some element of the stabilizer of S has epsilon = -1.
bool selfdual_nset(const FieldTower& tower, const RationalNSet& s);

inline constexpr uint64_t kDefaultOracleBudget = 500'000'000;

// (q^3 - q) * (number of (2g+2)-sets): group-element-by-set stability tests.
uint64_t oracle_work(const PrimePower& q, uint32_t g);

enum class OracleMethod { Burnside, Orbit, Both };

struct OracleOptions {
  OracleMethod method = OracleMethod::Both;
  uint64_t max_work = kDefaultOracleBudget;
  unsigned threads = 0;        // 0: hardware concurrency
  bool record_orbits = false;  // fill OracleResult::orbits
  std::string cache_dir;       // empty: no cache
};

struct SubtypeTally {
  MoebiusKind kind = MoebiusKind::D;
  uint32_t m = 1;
  uint64_t elements = 0;
  uint64_t stable_sets = 0;    // per element, when constant
  uint64_t positive_sets = 0;  // stable sets with epsilon = +1, when constant
  bool constant = true;        // every element of the subtype had the same tallies
};

struct OrbitRecord {
  std::string nset;  // representative, as printed by to_string(ctx, S)
  SquareClass lambda = SquareClass::One;
  uint64_t size = 0;
  bool selfdual = false;
};

struct OracleResult {
  uint32_t g = 0;
  PrimePower q;
  std::optional<uint64_t> hyp_burnside;
  std::optional<uint64_t> hyp_orbit;
  std::optional<uint64_t> y_orbit;  // orbits of (2g+2)-sets
  std::optional<uint64_t> sd_orbit;  // 2 y - hyp
  // Set orbits whose stabilizer holds an element with epsilon = -1.
  std::optional<uint64_t> selfdual_classes;
  bool selfdual_consistent = true;  // stabilizer criterion matches the orbit graph
  bool sanity_ok = true;            // point-count checks
  std::string sanity_detail;
  std::vector<SubtypeTally> tallies;  // Burnside only, sorted by (kind, m)
  std::vector<OrbitRecord> orbits;
  double elapsed_seconds = 0;
  bool from_cache = false;
};

// Throws BudgetExceeded when oracle_work exceeds options.max_work.
OracleResult run_oracle(const PrimePower& q, uint32_t g, const OracleOptions& options = {});

uint64_t burnside_hyp(const PrimePower& q, uint32_t g, uint64_t max_work = kDefaultOracleBudget);

struct OrbitCounts {
  uint64_t hyp = 0, y = 0, sd = 0;
};
OrbitCounts orbit_hyp(const PrimePower& q, uint32_t g, uint64_t max_work = kDefaultOracleBudget);

// Elapsed time and cache provenance appear only with_timings.
std::string to_json(const OracleResult& r, bool with_timings = false);
// One JSON object per line.
std::string orbit_dump(const OracleResult& r);

}  // namespace hypcount
