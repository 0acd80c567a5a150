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

#include <algorithm>

#include <doctest.h>

#include "hypcount/error.hpp"
#include "hypcount/multiplier.hpp"
#include "hypcount/nset.hpp"

using namespace hypcount;

TEST_CASE("sign arithmetic") {
  CHECK(Sign::Minus * Sign::Minus == Sign::Plus);
  CHECK(Sign::Minus * Sign::Plus == Sign::Minus);
  CHECK(to_int(Sign::Minus) == -1);
  CHECK(sign_of_parity(3) == Sign::Minus);
  CHECK(sign_of_parity(0) == Sign::Plus);
}

TEST_CASE("global multiplier is the product of local ones on rational points") {
  const FieldTower tower = make_tower(5, 1);
  const FieldCtx& f = tower.base();
  const auto group = enumerate_pgl(f);
  // S = {0, 1, 2, inf}: every point rational.
  const RationalNSet s = parse_nset(f, "f=0,2,2,1;inf=1");
  const std::vector<ProjPoint> pts = {ProjPoint::finite({0}), ProjPoint::finite({1}),
                                      ProjPoint::finite({2}), ProjPoint::infinity()};
  for (const auto& g : group) {
    FieldElem prod = f.one();
    for (const auto& t : pts) prod = f.mul(prod, local_multiplier(f, g.rep, t));
    CHECK(global_multiplier(tower, g.rep, s, true) == prod);
  }
}

TEST_CASE("epsilon matches its closed form on stable sets") {
  for (uint32_t q : {3u, 7u}) {
    const FieldTower tower = make_tower(q, 1);
    const FieldCtx& f = tower.base();
    size_t checked = 0;
    for (const auto& g : enumerate_pgl(f)) {
      if (g.kind == MoebiusKind::D) continue;
      for (const auto& s : fixed_nsets(f, g.rep, 6)) {
        CHECK(epsilon(tower, g, s) == epsilon_closed_form(tower, g, s));
        if (g.order % 2 == 1) CHECK(epsilon(tower, g, s) == Sign::Plus);
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
  const FieldTower tower = make_tower(3, 1);
  const RationalNSet odd = parse_nset(tower.base(), "f=0,1;inf=0");
  CHECK_THROWS_AS(epsilon(tower, identity_matrix(tower.base()), odd), InvalidArgument);
}

TEST_CASE("norm and orbit lemmas on F_9") {
  const FieldTower tower = make_tower(3, 2);
  const FieldExtension& quad = tower.quadratic();
  for (uint32_t a = 0; a < quad.field.q(); ++a) {
    if (quad.embed.in_base({a})) continue;
    CHECK(norm_lemma_check(tower, {a}).holds());
  }
  for (const auto& st : subtypes(tower.base())) {
    if (st.kind != MoebiusKind::A) continue;
    const SubtypeRep rep = subtype_representative(tower, st.kind, st.m);
    const auto fix = fixed_points(quad, rep.elem);
    for (uint32_t x = 0; x <= quad.field.q(); ++x) {
      const ProjPoint t = x == quad.field.q() ? ProjPoint::infinity() : ProjPoint::finite({x});
      if (std::find(fix.begin(), fix.end(), t) != fix.end()) continue;
      const OrbitMultiplier om = orbit_multiplier_check(tower, rep, t);
      CHECK(om.orbit_size == st.m);
      CHECK(om.product == om.alpha_power);
    }
  }
}
