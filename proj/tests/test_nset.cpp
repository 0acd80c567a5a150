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

#include <algorithm>

#include "hypcount/census.hpp"
#include "hypcount/error.hpp"
#include "hypcount/nset.hpp"

using namespace hypcount;

TEST_CASE("enumeration size matches the closed count") {
  for (uint32_t q : {3u, 5u, 9u}) {
    const auto pp = odd_prime_power(q);
    const FieldCtx f = make_field(static_cast<uint32_t>(pp.p), pp.e);
    for (uint32_t n = 1; n <= 5; ++n) {
      CAPTURE(q);
      CAPTURE(n);
      const auto sets = enumerate_nsets(f, n);
      CHECK(BigInt(sets.size()) == a_p1(pp, n));
      for (const auto& s : sets) CHECK(s.size() == n);
      CHECK(NSetCatalog(f, n).size() == sets.size());
    }
  }
}

TEST_CASE("text form round trips") {
  const FieldCtx f = make_field(3, 2);
  for (const auto& s : enumerate_nsets(f, 3)) CHECK(parse_nset(f, to_string(f, s)) == s);
  const FieldCtx f3 = make_field(3, 1);
  CHECK_THROWS_AS(parse_nset(f3, "f=1,2,1;inf=0"), InvalidArgument);
  CHECK_THROWS_AS(make_nset(f3, FieldPoly{f3.one(), f3.from_int(2), f3.one()}, false),
                  InvalidArgument);
  CHECK_THROWS_AS(make_nset(f3, FieldPoly{f3.one()}, false), InvalidArgument);
}

TEST_CASE("the action is a group action and the catalog indexes it") {
  const FieldCtx f = make_field(5, 1);
  const ByteField bf(f);
  const auto group = enumerate_pgl(f);
  const uint32_t n = 4;
  const NSetCatalog cat(f, n);
  const auto sets = enumerate_nsets(f, n);
  const GlMatrix g = group[31].rep, h = group[77].rep;
  const FormAction fa(f, bf, g, n);
  std::vector<uint8_t> out(n + 1);
  for (size_t i = 0; i < sets.size(); i += 7) {
    const auto& s = sets[i];
    CHECK(apply_moebius(f, compose(f, g, h), s) == apply_moebius(f, g, apply_moebius(f, h, s)));
    fa.apply(cat.form(i), out);
    const int64_t pos = cat.position(out);
    REQUIRE(pos >= 0);
    CHECK(cat.nset(f, static_cast<size_t>(pos)) == apply_moebius(f, g, s));
    CHECK(fa.fixes(cat.form(i)) == (apply_moebius(f, g, s) == s));
  }
}

TEST_CASE("eigenvector search finds exactly the stable sets") {
  const FieldCtx f = make_field(3, 1);
  const auto group = enumerate_pgl(f);
  for (uint32_t n : {4u, 6u}) {
    const auto sets = enumerate_nsets(f, n);
    for (size_t k = 0; k < group.size(); k += 3) {
      std::vector<RationalNSet> stable;
      for (const auto& s : sets)
        if (apply_moebius(f, group[k], s) == s) stable.push_back(s);
      CHECK(fixed_nsets(f, group[k].rep, n) == stable);
    }
  }
}

TEST_CASE("stabilizers and membership") {
  const FieldCtx f = make_field(3, 1);
  const RationalNSet s = parse_nset(f, "f=0,2,0,1;inf=1");  // x^3 - x and inf
  CHECK(s.size() == 4);
  CHECK(stabilizer(f, s).size() == 24);
  for (uint32_t x = 0; x < 3; ++x) CHECK(contains_point(f, s, ProjPoint::finite({x})));
  CHECK(contains_point(f, s, ProjPoint::infinity()));
}
