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

// hyp(g) and sd(g) as conditional polynomials in q: an integer polynomial
// plus terms that apply only when q lies in given residue classes or the
// characteristic satisfies p = l or p > l.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypcount/numtheory.hpp"

namespace hypcount {

// Dense coefficients, index i holds the coefficient of q^i. Kept trimmed.
using IntPoly = std::vector<int64_t>;

int poly_degree(const IntPoly& f);  // -1 for the zero polynomial
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_scale(const IntPoly& a, int64_t c);
IntPoly monomial(int64_t c, uint32_t k);
// Exact quotient; InternalError on a nonzero remainder.
IntPoly poly_exact_div(const IntPoly& a, const IntPoly& b);
BigInt poly_eval(const IntPoly& f, uint64_t q);

// A0, A1, A2 as polynomials in q (argument a positive integer).
IntPoly a0_poly(uint64_t n);
IntPoly a1_poly(uint64_t n);
IntPoly a2_poly(uint64_t n);

struct Guard {
  uint64_t modulus = 1;
  std::vector<uint64_t> residues{0};  // sorted, each < modulus
  std::optional<uint64_t> char_eq;
  std::optional<uint64_t> char_gt;

  bool holds(const PrimePower& q) const;
  // True for every odd prime power.
  bool trivial() const;
  friend bool operator==(const Guard&, const Guard&) = default;
  friend auto operator<=>(const Guard&, const Guard&) = default;
};

Guard congruence_guard(uint64_t modulus, std::vector<uint64_t> residues);
Guard char_eq_guard(uint64_t prime);
Guard char_gt_guard(uint64_t bound);

struct GuardedTerm {
  Guard guard;
  IntPoly poly;
  friend bool operator==(const GuardedTerm&, const GuardedTerm&) = default;
};

struct ConditionalPolynomial {
  IntPoly generic;
  std::vector<GuardedTerm> terms;
  friend bool operator==(const ConditionalPolynomial&, const ConditionalPolynomial&) = default;
};

// Folds trivial guards into the generic part, sums terms with equal guards,
// unions residue sets of equal-modulus terms with equal polynomials, drops
// zero terms and sorts.
ConditionalPolynomial simplify(ConditionalPolynomial cp);

ConditionalPolynomial symbolic_hyp(uint32_t g);
ConditionalPolynomial symbolic_sd(uint32_t g);

BigInt evaluate(const ConditionalPolynomial& cp, const PrimePower& q);

// The single polynomial valid for q = r mod M. Character guards need
// assume_large_char (p = l is taken false, p > l true); otherwise they are
// rejected. M must be a multiple of every guard modulus.
IntPoly restrict_to_class(const ConditionalPolynomial& cp, uint64_t r, uint64_t M,
                          bool assume_large_char);

// lcm of all guard moduli (1 if none).
uint64_t guard_modulus_lcm(const ConditionalPolynomial& cp);

enum class RenderFormat { Text, Json, Markdown, Csv };

std::string to_string(const IntPoly& f);
std::string to_string(const Guard& g);
// Text: "2q^3+q^2+2q-2 + [2]_{3|q-1} + ...". Markdown escapes '|'; csv
// quotes the text form.
std::string render(const ConditionalPolynomial& cp, RenderFormat format);
ConditionalPolynomial from_json(std::string_view json);

// Parses the bracket notation used by render(..., Text) and by the
// transcribed tables. Guards: "m|q-1", "m|q+1", "m|q-a", "p=l", "p>l",
// "q=r1,r2 mod M" ("=" or "≡"; a residue "+-1" or "±1" means both signs).
// A coefficient may precede and an integer factor may follow a bracket.
ConditionalPolynomial parse_conditional(std::string_view text);

enum class Which { Hyp, Sd };

// Transcribed closed forms for 2 <= g <= 10. For sd with odd g the row
// holds only when q = 3 mod 4; the value is 0 otherwise.
std::optional<std::string_view> table_row(uint32_t g, Which which);
// Evaluates a transcribed row, applying the odd-g sd convention above.
BigInt evaluate_table_row(uint32_t g, Which which, const PrimePower& q);

struct TableMismatch {
  PrimePower q;
  BigInt table_value;
  BigInt formula_value;
};

struct TableComparison {
  uint32_t g = 0;
  Which which = Which::Hyp;
  std::string row;
  std::optional<std::string> known_issue;  // rows with a suspect token
  size_t points_checked = 0;
  std::vector<TableMismatch> mismatches;
  // For rows with a suspect token: the most plausible corrected reading
  // and how many points it still disagrees on.
  std::optional<std::string> alternative_row;
  size_t alternative_mismatches = 0;
  bool agrees() const { return mismatches.empty(); }
};

// Compares the transcribed row against the regenerated form at every odd
// prime power up to q_bound. The regenerated form is authoritative.
TableComparison compare_with_table(uint32_t g, Which which, uint64_t q_bound = 499);

std::string_view which_name(Which which);  // "hyp" or "sd"

// One row per genus in [g_lo, g_hi], in any render format.
std::string render_table(uint32_t g_lo, uint32_t g_hi, Which which, RenderFormat format);

}  // namespace hypcount
