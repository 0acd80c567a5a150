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

#include <doctest.h>

#include "hypcount/census.hpp"
#include "hypcount/error.hpp"
#include "hypcount/symbolic.hpp"

using namespace hypcount;

namespace {
PrimePower Q(uint64_t q) { return odd_prime_power(q); }
}  // namespace

TEST_CASE("integer polynomials") {
  const IntPoly f = poly_add(monomial(2, 3), monomial(1, 2));
  CHECK(to_string(f) == "2q^3+q^2");
  CHECK(poly_degree(f) == 3);
  CHECK(poly_degree(IntPoly{}) == -1);
  CHECK(poly_eval(f, 3) == 63);
  CHECK(poly_exact_div(poly_sub(monomial(1, 2), monomial(1, 0)), IntPoly{-1, 1}) ==
        IntPoly{1, 1});
  CHECK_THROWS_AS(poly_exact_div(monomial(1, 2), IntPoly{-1, 1}), InternalError);
  CHECK(to_string(poly_scale(f, -1)) == "-2q^3-q^2");
}

TEST_CASE("guards") {
  CHECK(to_string(congruence_guard(3, {1})) == "3|q-1");
  CHECK(to_string(congruence_guard(4, {3})) == "4|q+1");
  CHECK(to_string(char_eq_guard(5)) == "p=5");
  CHECK(to_string(char_gt_guard(3)) == "p>3");
  CHECK(congruence_guard(8, {1, 3}).holds(Q(11)));
  CHECK_FALSE(congruence_guard(8, {1, 3}).holds(Q(13)));
  CHECK(char_eq_guard(3).holds(Q(27)));
  CHECK_FALSE(char_gt_guard(3).holds(Q(9)));
  CHECK(congruence_guard(2, {1}).trivial());
}

TEST_CASE("evaluation matches the census") {
  CHECK(evaluate(symbolic_hyp(2), Q(3)) == 69);
  CHECK(evaluate(symbolic_hyp(2), Q(5)) == 285);
  CHECK(evaluate(symbolic_sd(2), Q(5)) == 27);
  for (uint32_t g = 2; g <= 12; ++g) {
    const auto h = symbolic_hyp(g);
    const auto s = symbolic_sd(g);
    for (const auto& q : odd_prime_powers_up_to(130)) {
      CHECK(evaluate(h, q) == hyp(g, q));
      CHECK(evaluate(s, q) == sd(g, q));
    }
  }
}

TEST_CASE("text and json round trips") {
  for (uint32_t g = 2; g <= 10; ++g)
    for (const auto& cp : {symbolic_hyp(g), symbolic_sd(g)}) {
      CHECK(simplify(parse_conditional(render(cp, RenderFormat::Text))) == cp);
      CHECK(from_json(render(cp, RenderFormat::Json)) == cp);
    }
  CHECK_THROWS_AS(parse_conditional("2q^3 + [2]_{"), InvalidArgument);
  CHECK_THROWS_AS(from_json("{"), InvalidArgument);
}

TEST_CASE("parser accepts the table notation") {
  const auto a = parse_conditional("q^2 + [2]_{q≡±1 mod 8} + 3[q-1]_{4|q+1}2");
  const auto b = parse_conditional("q^2+[2]_{q=+-1 mod 8}+[6q-6]_{4|q+1}");
  CHECK(simplify(a) == simplify(b));
  CHECK(evaluate(a, Q(7)) == 49 + 2 + 36);
}

TEST_CASE("restriction to a residue class") {
  const auto h8 = symbolic_hyp(8);
  const uint64_t M = lcm_u64(guard_modulus_lcm(h8), 4);
  const IntPoly lead = poly_add(monomial(2, 15), monomial(1, 8));
  CHECK(poly_degree(poly_sub(restrict_to_class(h8, 1, M, true), lead)) <= 5);

  const auto h9 = symbolic_hyp(9);
  const uint64_t M9 = lcm_u64(guard_modulus_lcm(h9), 4);
  const IntPoly lead9 = poly_add(poly_add(monomial(2, 17), monomial(2, 9)), monomial(-2, 7));
  CHECK(poly_degree(poly_sub(restrict_to_class(h9, 1, M9, true), lead9)) <= 5);

  const auto s10 = symbolic_sd(10);
  const uint64_t M10 = lcm_u64(guard_modulus_lcm(s10), 4);
  const IntPoly lead10 =
      poly_add(poly_add(monomial(1, 10), monomial(-2, 8)), monomial(2, 7));
  CHECK(poly_degree(poly_sub(restrict_to_class(s10, M10 - 1, M10, true), lead10)) <= 4);

  CHECK_THROWS_AS(restrict_to_class(h8, 1, 7, true), InvalidArgument);
  CHECK_THROWS_AS(restrict_to_class(symbolic_hyp(2), 1, guard_modulus_lcm(symbolic_hyp(2)), false),
                  InvalidArgument);
}

TEST_CASE("restricted polynomial evaluates like the full form") {
  const auto h = symbolic_hyp(6);
  const uint64_t M = guard_modulus_lcm(h);
  for (const auto& q : odd_prime_powers_up_to(400)) {
    if (q.p <= 2 * 6 + 2 || gcd_u64(q.q, M) != 1) continue;
    CHECK(poly_eval(restrict_to_class(h, q.q % M, M, true), q.q) == evaluate(h, q));
  }
}

TEST_CASE("transcribed tables") {
  for (uint32_t g = 2; g <= 10; ++g) {
    CHECK(compare_with_table(g, Which::Sd).agrees());
    if (g != 9) CHECK(compare_with_table(g, Which::Hyp).agrees());
  }
  const TableComparison c9 = compare_with_table(9, Which::Hyp);
  CHECK(c9.known_issue.has_value());
  CHECK_FALSE(c9.mismatches.empty());
  REQUIRE(c9.alternative_row.has_value());
  CHECK(c9.alternative_mismatches == 0);
  CHECK(compare_with_table(10, Which::Hyp).known_issue.has_value());
  CHECK_FALSE(table_row(11, Which::Hyp).has_value());
  CHECK(evaluate_table_row(3, Which::Sd, Q(5)) == 0);
}

TEST_CASE("table rendering") {
  const std::string md = render_table(2, 10, Which::Hyp, RenderFormat::Markdown);
  CHECK(std::count(md.begin(), md.end(), '\n') == 11);
  const std::string csv = render_table(2, 3, Which::Sd, RenderFormat::Csv);
  CHECK(csv.rfind("g,", 0) == 0);
  CHECK(render_table(2, 4, Which::Hyp, RenderFormat::Json) ==
        render_table(2, 4, Which::Hyp, RenderFormat::Json));
}
