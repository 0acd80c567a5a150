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

#include <json.hpp>

#include "hypcount/census.hpp"
#include "hypcount/error.hpp"

using namespace hypcount;

namespace {
PrimePower Q(uint64_t q) { return odd_prime_power(q); }
}  // namespace

TEST_CASE("genus 2 anchors") {
  CHECK(hyp(2, Q(3)) == 69);
  CHECK(hyp(2, Q(5)) == 285);
  CHECK(hyp(2, Q(7)) == 749);
  CHECK(hyp(2, Q(9)) == 1557);
  CHECK(sd(2, Q(3)) == 7);
  CHECK(sd(2, Q(5)) == 27);
  CHECK(sd(2, Q(7)) == 49);
  CHECK(sd(2, Q(9)) == 79);
}

TEST_CASE("higher genus anchors") {
  CHECK(hyp(3, Q(3)) == 526);
  CHECK(sd(3, Q(3)) == 12);
  CHECK(hyp(3, Q(5)) == 6508);
  CHECK(sd(3, Q(5)) == 0);
  CHECK(hyp(4, Q(3)) == 4463);
  CHECK(sd(4, Q(3)) == 73);
}

TEST_CASE("components add up") {
  const Components c = components(2, Q(3));
  CHECK(c.h_A == 4);
  CHECK(c.h_B == 4);
  CHECK(c.h_C == 7);
  CHECK(c.h_D == 54);
  for (uint32_t g = 2; g <= 12; ++g)
    for (uint64_t q : {3, 5, 27, 121, 343}) CHECK(components(g, Q(q)).sum() == hyp(g, Q(q)));
}

TEST_CASE("set counts") {
  CHECK(a_p1(Q(3), 1) == 4);
  CHECK(a_p1(Q(3), 2) == 9);
  CHECK(a_p1(Q(5), 6) == 15625 - 625);
  CHECK(A1(Q(5), 3) == 20);
  CHECK(A1(Q(5), 7, 2) == 0);
  CHECK(A2(Q(3), 0) == 0);
  CHECK(A0(Q(3), 6, 3) == A0(Q(3), 2));
}

TEST_CASE("odd genus has no self-dual curves when 4 | q - 1") {
  for (uint32_t g = 3; g <= 21; g += 2)
    for (uint64_t q : {5, 9, 13, 17, 25, 29, 37, 41, 49, 81, 125})
      CHECK(sd(g, Q(q)) == 0);
}

TEST_CASE("report and json") {
  const CensusReport r = census(2, Q(3));
  CHECK(r.y == 38);
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["hyp"] == "69");
  CHECK(j["sd"] == "7");
  CHECK(j["components"]["h_D"] == "54");
  CHECK_FALSE(j.contains("elapsed_seconds"));
  CHECK(to_json(r) == to_json(census(2, Q(3))));
  CHECK_THROWS_AS(census(1, Q(3)), InvalidArgument);
}

TEST_CASE("large genus values are exact") {
  const CensusReport r = census(30, Q(997));
  CHECK(r.hyp > BigInt(1) << 64);
  CHECK((r.hyp + r.sd) % 2 == 0);
}
