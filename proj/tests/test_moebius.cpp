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

#include <map>

#include "hypcount/error.hpp"
#include "hypcount/moebius.hpp"
#include "hypcount/numtheory.hpp"

using namespace hypcount;

TEST_CASE("PGL2 enumeration and kinds") {
  for (uint32_t q : {3u, 5u, 7u, 9u}) {
    const auto pp = odd_prime_power(q);
    const FieldCtx f = make_field(static_cast<uint32_t>(pp.p), pp.e);
    const auto group = enumerate_pgl(f);
    CAPTURE(q);
    REQUIRE(group.size() == uint64_t(q) * q * q - q);
    std::map<char, size_t> by_kind;
    for (const auto& g : group) {
      ++by_kind[kind_letter(g.kind)];
      CHECK(canonical(f, g.rep) == g.rep);
      if (g.kind == MoebiusKind::A) CHECK((q + 1) % g.order == 0);
      if (g.kind == MoebiusKind::B) CHECK(g.order == pp.p);
      if (g.kind == MoebiusKind::C) CHECK((q - 1) % g.order == 0);
    }
    CHECK(by_kind['D'] == 1);
    CHECK(by_kind['B'] == uint64_t(q) * q - 1);
    CHECK(by_kind['C'] == uint64_t(q) * (q + 1) * (q - 2) / 2);
    CHECK(by_kind['A'] == uint64_t(q) * q * (q - 1) / 2);
  }
}

TEST_CASE("composition is the action") {
  const FieldCtx f = make_field(5, 1);
  const auto group = enumerate_pgl(f);
  const GlMatrix g = group[17].rep, h = group[42].rep;
  for (uint32_t x = 0; x <= 5; ++x) {
    const ProjPoint t = x == 5 ? ProjPoint::infinity() : ProjPoint::finite({x});
    CHECK(act(f, compose(f, g, h), t) == act(f, g, act(f, h, t)));
    CHECK(act(f, inverse(f, g), act(f, g, t)) == t);
  }
  CHECK(compose(f, g, inverse(f, g)) == identity_matrix(f));
}

TEST_CASE("fixed points by kind") {
  const FieldTower tower = make_tower(7, 1);
  const FieldCtx& f = tower.base();
  for (const auto& g : enumerate_pgl(f)) {
    if (g.kind == MoebiusKind::D) continue;
    const auto fix = fixed_points(tower.quadratic(), g);
    size_t rational = 0;
    for (const auto& t : fix) rational += t.infinite || tower.quadratic().embed.in_base(t.x);
    if (g.kind == MoebiusKind::B) CHECK((fix.size() == 1 && rational == 1));
    if (g.kind == MoebiusKind::C) CHECK((fix.size() == 2 && rational == 2));
    if (g.kind == MoebiusKind::A) CHECK((fix.size() == 2 && rational == 0));
  }
}

TEST_CASE("subtype representatives") {
  const FieldTower tower = make_tower(3, 2);
  const auto subs = subtypes(tower.base());
  for (const auto& s : subs) {
    const SubtypeRep rep = subtype_representative(tower, s.kind, s.m);
    CHECK(rep.elem.kind == s.kind);
    CHECK(rep.elem.order == s.m);
    CHECK(rep.alpha.has_value() == (s.kind == MoebiusKind::A));
  }
  CHECK_THROWS_AS(subtype_representative(tower, MoebiusKind::A, 3), InvalidArgument);
  CHECK_THROWS_AS(subtype_representative(tower, MoebiusKind::D, 1), InvalidArgument);
  CHECK_THROWS_AS(classify(tower.base(), GlMatrix{{1}, {1}, {1}, {1}}), InvalidArgument);
}
