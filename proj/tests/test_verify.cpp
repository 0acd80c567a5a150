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

#include "hypcount/error.hpp"
#include "hypcount/verify.hpp"

using namespace hypcount;

TEST_CASE("suite registry") {
  const auto& names = verify_suite_names();
  CHECK(names.size() == 6);
  CHECK_THROWS_AS(verify_suite("nope"), InvalidArgument);
  CHECK_FALSE(default_verify_options("eps").qs.empty());
}

TEST_CASE("every suite passes on a small grid") {
  for (const auto& name : verify_suite_names()) {
    CAPTURE(name);
    VerifyOptions opt;
    opt.qs = {odd_prime_power(3)};
    if (name == "eps" || name == "cocycle") opt.ns = {6};
    if (name == "counts") opt.ns = {3, 4, 5};
    opt.random_trials = 200;
    const VerifyReport r = verify_suite(name, opt);
    CHECK(r.passed);
    CHECK(r.assertions > 0);
    CHECK_FALSE(r.counterexample);
    const auto j = nlohmann::json::parse(to_json(r));
    CHECK(j["suite"] == name);
    CHECK(j["passed"] == true);
  }
}
