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

#include <cstring>
#include <string>

#include <hypcount/hypcount.h>

namespace {
std::string take(char* s) {
  std::string out = s ? s : "";
  hc_string_free(s);
  return out;
}
}  // namespace

TEST_CASE("prime power helpers") {
  uint64_t p = 0;
  uint32_t e = 0;
  CHECK(hc_parse_prime_power(125, &p, &e) == HC_OK);
  CHECK(p == 5);
  CHECK(e == 3);
  CHECK(hc_parse_prime_power(8, &p, &e) == HC_INVALID_ARGUMENT);
  CHECK(std::strlen(hc_last_error()) > 0);
  uint64_t q = 0;
  CHECK(hc_make_prime_power(3, 4, &q) == HC_OK);
  CHECK(q == 81);
  CHECK(hc_parse_prime_power(9, nullptr, &e) == HC_INVALID_ARGUMENT);
  CHECK(std::string(hc_status_name(HC_BUDGET_EXCEEDED)) == "budget exceeded");
}

TEST_CASE("census handles") {
  hc_census* c = nullptr;
  REQUIRE(hc_census_compute(2, 3, 1, &c) == HC_OK);
  char* s = nullptr;
  CHECK(hc_census_get(c, "hyp", &s) == HC_OK);
  CHECK(take(s) == "69");
  CHECK(hc_census_get(c, "h_C", &s) == HC_OK);
  CHECK(take(s) == "7");
  CHECK(hc_census_get(c, "bogus", &s) == HC_INVALID_ARGUMENT);
  const hc_census* items[] = {c};
  CHECK(hc_census_render(items, 1, HC_FORMAT_JSON, 0, &s) == HC_OK);
  CHECK(take(s).find("\"hyp\":\"69\"") != std::string::npos);
  CHECK(hc_census_render(items, 1, HC_FORMAT_CSV, 0, &s) == HC_OK);
  CHECK(take(s).find("2,3,3,1,69,7") != std::string::npos);
  hc_census_free(c);
  hc_census* bad = nullptr;
  CHECK(hc_census_compute(1, 3, 1, &bad) == HC_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(hc_census_compute(2, 2, 1, &bad) == HC_INVALID_ARGUMENT);
}

TEST_CASE("conditional polynomials") {
  hc_cpoly* built = nullptr;
  REQUIRE(hc_symbolic_build(HC_HYP, 2, &built) == HC_OK);
  char* s = nullptr;
  REQUIRE(hc_cpoly_render(built, HC_FORMAT_TEXT, &s) == HC_OK);
  const std::string text = take(s);
  hc_cpoly* parsed = nullptr;
  REQUIRE(hc_cpoly_parse(text.c_str(), &parsed) == HC_OK);
  CHECK(hc_cpoly_equal(built, parsed));
  REQUIRE(hc_cpoly_render(built, HC_FORMAT_JSON, &s) == HC_OK);
  const std::string json = take(s);
  hc_cpoly* from_json = nullptr;
  REQUIRE(hc_cpoly_from_json(json.c_str(), &from_json) == HC_OK);
  CHECK(hc_cpoly_equal(built, from_json));
  CHECK(hc_cpoly_evaluate(built, 5, 1, &s) == HC_OK);
  CHECK(take(s) == "285");
  CHECK(hc_cpoly_restrict(built, 1, 7, 1, &s) == HC_INVALID_ARGUMENT);
  hc_cpoly* junk = nullptr;
  CHECK(hc_cpoly_parse("[[", &junk) == HC_INVALID_ARGUMENT);
  hc_cpoly_free(built);
  hc_cpoly_free(parsed);
  hc_cpoly_free(from_json);
}

TEST_CASE("tables") {
  char* s = nullptr;
  REQUIRE(hc_table_render(HC_SD, 2, 4, HC_FORMAT_MARKDOWN, &s) == HC_OK);
  CHECK(take(s).find("| 3 |") != std::string::npos);
  hc_table_report* r = nullptr;
  REQUIRE(hc_table_compare(HC_HYP, 9, 100, &r) == HC_OK);
  CHECK(hc_table_report_known_issue(r));
  CHECK(hc_table_report_mismatches(r) > 0);
  REQUIRE(hc_table_report_render(r, HC_FORMAT_JSON, &s) == HC_OK);
  CHECK(take(s).find("\"alternative_mismatches\":0") != std::string::npos);
  hc_table_report_free(r);
  CHECK(hc_table_compare(HC_HYP, 11, 100, &r) == HC_INVALID_ARGUMENT);
}

TEST_CASE("oracle and verify") {
  hc_oracle_options opt;
  hc_oracle_options_init(&opt);
  hc_oracle_result* r = nullptr;
  REQUIRE(hc_oracle_run(2, 3, 1, &opt, &r) == HC_OK);
  uint64_t v = 0;
  int present = 0;
  CHECK(hc_oracle_get(r, "sd_orbit", &v, &present) == HC_OK);
  CHECK(present == 1);
  CHECK(v == 7);
  CHECK(hc_oracle_checks_ok(r));
  hc_oracle_result_free(r);
  CHECK(hc_oracle_work(5, 3, 2) > opt.max_work);
  CHECK(hc_oracle_run(5, 3, 2, &opt, &r) == HC_BUDGET_EXCEEDED);

  CHECK(hc_verify_suite_count() == 6);
  CHECK(hc_verify_suite_name(99) == nullptr);
  const uint64_t qs[] = {3};
  hc_verify_report* rep = nullptr;
  REQUIRE(hc_verify_run("norm", qs, 1, nullptr, 0, 0, &rep) == HC_OK);
  CHECK(hc_verify_passed(rep));
  char* s = nullptr;
  REQUIRE(hc_verify_render(rep, HC_FORMAT_TEXT, &s) == HC_OK);
  CHECK(take(s).rfind("norm: PASS", 0) == 0);
  hc_verify_report_free(rep);
  CHECK(hc_verify_run("missing", qs, 1, nullptr, 0, 0, &rep) == HC_INVALID_ARGUMENT);
}
