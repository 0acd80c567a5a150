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

#include <filesystem>

#include <json.hpp>

#include "hypcount/census.hpp"
#include "hypcount/error.hpp"
#include "hypcount/oracle.hpp"

using namespace hypcount;

TEST_CASE("genus 2 over F_3 both ways") {
  const PrimePower q = odd_prime_power(3);
  const OracleResult r = run_oracle(q, 2);
  REQUIRE(r.hyp_burnside);
  REQUIRE(r.hyp_orbit);
  CHECK(*r.hyp_burnside == 69);
  CHECK(*r.hyp_orbit == 69);
  CHECK(*r.y_orbit == 38);
  CHECK(*r.sd_orbit == 7);
  CHECK(r.selfdual_classes == r.sd_orbit);
  CHECK(r.selfdual_consistent);
  CHECK(r.sanity_ok);
  for (const auto& t : r.tallies) CHECK(t.constant);
  CHECK(burnside_hyp(q, 2) == 69);
  CHECK(orbit_hyp(q, 2).sd == 7);
}

TEST_CASE("small cases agree with the census") {
  for (auto [g, qv] : {std::pair{2u, 5u}, {3u, 3u}}) {
    const PrimePower q = odd_prime_power(qv);
    const OrbitCounts c = orbit_hyp(q, g);
    CHECK(BigInt(c.hyp) == hyp(g, q));
    CHECK(BigInt(c.sd) == sd(g, q));
    CHECK(BigInt(burnside_hyp(q, g)) == hyp(g, q));
  }
}

TEST_CASE("budget refusal") {
  const PrimePower q = odd_prime_power(9);
  CHECK(oracle_work(q, 5) > kDefaultOracleBudget);
  CHECK_THROWS_AS(run_oracle(q, 5), BudgetExceeded);
  OracleOptions tiny;
  tiny.max_work = 10;
  CHECK_THROWS_AS(run_oracle(odd_prime_power(3), 2, tiny), BudgetExceeded);
}

TEST_CASE("twisted action") {
  const FieldTower tower = make_tower(5, 1);
  const FieldCtx& f = tower.base();
  const auto group = enumerate_pgl(f);
  const auto sets = enumerate_nsets(f, 6);
  for (size_t i = 0; i < sets.size(); i += 97) {
    const TwistedClass x{SquareClass::NonSquare, sets[i]};
    const GlMatrix g = group[5].rep, h = group[88].rep;
    CHECK(twisted_act(tower, compose(f, g, h), x) ==
          twisted_act(tower, g, twisted_act(tower, h, x)));
  }
}

TEST_CASE("orbit dump") {
  OracleOptions opt;
  opt.record_orbits = true;
  const OracleResult r = run_oracle(odd_prime_power(3), 2, opt);
  CHECK(r.orbits.size() == 69);
  const std::string dump = orbit_dump(r);
  CHECK(std::count(dump.begin(), dump.end(), '\n') == 69);
  CHECK(nlohmann::json::parse(dump.substr(0, dump.find('\n'))).contains("nset"));
}

TEST_CASE("result cache") {
  const auto dir = std::filesystem::temp_directory_path() / "hypcount-oracle-test";
  std::filesystem::remove_all(dir);
  OracleOptions opt;
  opt.cache_dir = dir.string();
  const PrimePower q = odd_prime_power(3);
  const OracleResult first = run_oracle(q, 2, opt);
  CHECK_FALSE(first.from_cache);
  const OracleResult second = run_oracle(q, 2, opt);
  CHECK(second.from_cache);
  CHECK(second.hyp_burnside == first.hyp_burnside);
  CHECK(second.hyp_orbit == first.hyp_orbit);
  CHECK(second.sd_orbit == first.sd_orbit);
  CHECK(to_json(second) == to_json(first));
  std::filesystem::remove_all(dir);
}
