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

#include <set>

#include "hypcount/error.hpp"
#include "hypcount/field.hpp"
#include "hypcount/numtheory.hpp"
#include "hypcount/polynomial.hpp"

using namespace hypcount;

TEST_CASE("prime powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(499));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  const auto pp = factor_prime_power(243);
  REQUIRE(pp);
  CHECK(pp->p == 3);
  CHECK(pp->e == 5);
  CHECK_FALSE(factor_prime_power(12));
  CHECK(odd_prime_power(9) == PrimePower{3, 2, 9});
  CHECK_THROWS_AS(odd_prime_power(4), InvalidArgument);
  CHECK_THROWS_AS(odd_prime_power(15), InvalidArgument);
  CHECK_THROWS_AS(odd_prime_power(1), InvalidArgument);
  CHECK_THROWS_AS(odd_prime_power(9, 1), InvalidArgument);
  const auto small = odd_prime_powers_up_to(30);
  std::vector<uint64_t> qs;
  for (const auto& q : small) qs.push_back(q.q);
  CHECK(qs == std::vector<uint64_t>{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29});
  CHECK(divisors(12) == std::vector<uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(euler_phi(36) == 12);
  CHECK(lcm_u64(4, 6) == 12);
  CHECK_THROWS_AS(checked_pow(3, 50), InvalidArgument);
  CHECK(to_decimal(big_pow(3, 50)) == "717897987691852588770249");
}

TEST_CASE("field axioms on small fields") {
  for (auto [p, e] : {std::pair{3u, 1u}, {3u, 2u}, {5u, 2u}, {7u, 1u}, {3u, 3u}}) {
    const FieldCtx f = make_field(p, e);
    CAPTURE(f.q());
    const FieldElem g = f.generator();
    std::set<uint32_t> powers;
    for (uint32_t k = 0; k + 1 < f.q(); ++k) powers.insert(f.exp(k).index);
    CHECK(powers.size() == f.q() - 1);
    CHECK(f.pow(g, f.q() - 1) == f.one());
    for (uint32_t a = 0; a < f.q(); ++a) {
      const FieldElem x{a};
      CHECK(f.add(x, f.neg(x)) == f.zero());
      CHECK(f.parse(f.to_string(x)) == x);
      if (a == 0) continue;
      CHECK(f.mul(x, f.inv(x)) == f.one());
      CHECK(f.exp(f.log(x)) == x);
      const auto r = f.sqrt(x);
      CHECK(r.has_value() == is_square(f, x));
      if (r) CHECK(f.mul(*r, *r) == x);
    }
    CHECK_THROWS_AS(f.inv(f.zero()), InvalidArgument);
  }
}

TEST_CASE("field construction rejects bad input") {
  CHECK_THROWS_AS(make_field(2, 1), InvalidArgument);
  CHECK_THROWS_AS(make_field(9, 1), InvalidArgument);
  CHECK_THROWS_AS(make_field(3, 0), InvalidArgument);
  CHECK_THROWS_AS(make_field(3, 30), InvalidArgument);
}

TEST_CASE("extensions embed the base field as a subring") {
  const FieldCtx base = make_field(3, 1);
  const FieldExtension quad = extend(base, 2);
  CHECK(quad.field.q() == 9);
  for (uint32_t a = 0; a < 3; ++a)
    for (uint32_t b = 0; b < 3; ++b) {
      const FieldElem x{a}, y{b};
      CHECK(quad.embed(base.add(x, y)) == quad.field.add(quad.embed(x), quad.embed(y)));
      CHECK(quad.embed(base.mul(x, y)) == quad.field.mul(quad.embed(x), quad.embed(y)));
      CHECK(quad.embed.preimage(quad.embed(x)) == x);
    }
  size_t fixed = 0;
  for (uint32_t a = 0; a < 9; ++a)
    if (frobenius(quad.field, FieldElem{a}, 3) == FieldElem{a}) ++fixed;
  CHECK(fixed == 3);

  const FieldTower tower = make_tower(3, 1);
  CHECK(tower.quadratic().field.q() == 9);
  CHECK(tower.quartic().field.q() == 81);
}

TEST_CASE("squarefree test and polynomial arithmetic") {
  const FieldCtx f = make_field(5, 1);
  const FieldPoly sq = poly_mul(f, FieldPoly{f.from_int(1), f.one()}, FieldPoly{f.from_int(1), f.one()});
  CHECK_FALSE(is_squarefree(f, sq));
  CHECK(is_squarefree(f, FieldPoly{f.from_int(2), f.zero(), f.one()}));
  const FieldPoly g = poly_gcd(f, sq, FieldPoly{f.from_int(1), f.one()});
  CHECK(g == FieldPoly{f.from_int(1), f.one()});
  CHECK(poly_eval(f, sq, f.from_int(4)) == f.zero());
}

TEST_CASE("byte tables agree with the context") {
  const FieldCtx f = make_field(3, 2);
  const ByteField bf(f);
  for (uint32_t a = 0; a < 9; ++a)
    for (uint32_t b = 0; b < 9; ++b) {
      CHECK(bf.add(a, b) == f.add({a}, {b}).index);
      CHECK(bf.mul(a, b) == f.mul({a}, {b}).index);
    }
}
