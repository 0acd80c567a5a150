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

// Acceptance gate: one PASS/FAIL line per criterion. `--fast` leaves out
// the q = 9 oracle case.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "hypcount/census.hpp"
#include "hypcount/error.hpp"
#include "hypcount/oracle.hpp"
#include "hypcount/symbolic.hpp"
#include "hypcount/verify.hpp"

using namespace hypcount;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void within(Outcome& o, double elapsed, double limit) {
  if (elapsed >= limit)
    o.fail("took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit) + " s");
}

Outcome formula_agreement() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto qs = odd_prime_powers_up_to(499);
  size_t checked = 0;
  for (uint32_t g = 2; g <= 10; ++g) {
    const auto h = symbolic_hyp(g);
    const auto s = symbolic_sd(g);
    for (const auto& q : qs) {
      if (evaluate(h, q) != hyp(g, q)) o.fail("hyp g=" + std::to_string(g) + " q=" + std::to_string(q.q));
      if (evaluate(s, q) != sd(g, q)) o.fail("sd g=" + std::to_string(g) + " q=" + std::to_string(q.q));
      checked += 2;
    }
  }
  within(o, seconds_since(t0), 5.0);
  if (o.pass) o.detail = std::to_string(checked) + " values agree";
  return o;
}

Outcome table_fixtures() {
  Outcome o;
  size_t rows = 0;
  for (uint32_t g = 2; g <= 10; ++g) {
    for (Which w : {Which::Hyp, Which::Sd}) {
      const TableComparison c = compare_with_table(g, w, 499);
      const std::string tag = std::string(which_name(w)) + " g=" + std::to_string(g);
      if (c.points_checked == 0) o.fail(tag + ": nothing checked");
      ++rows;
      if (c.agrees()) continue;
      if (!c.known_issue) {
        o.fail(tag + ": " + std::to_string(c.mismatches.size()) + " unexpected mismatches");
        continue;
      }
      // A flagged row: every mismatch must carry its q and the formula value.
      for (const auto& m : c.mismatches)
        if (m.q.q == 0 || m.formula_value != (w == Which::Hyp ? hyp(g, m.q) : sd(g, m.q)))
          o.fail(tag + ": malformed mismatch record");
      if (!c.alternative_row || c.alternative_mismatches != 0)
        o.fail(tag + ": no consistent reading of the flagged token");
      std::printf("  note: %s row flagged (%s), %zu mismatching q, first q=%llu\n", tag.c_str(),
                  c.known_issue->c_str(), c.mismatches.size(),
                  static_cast<unsigned long long>(c.mismatches.front().q.q));
    }
  }
  struct Anchor {
    Which w;
    uint32_t g;
    uint64_t q;
    int64_t value;
  };
  const Anchor anchors[] = {{Which::Hyp, 2, 3, 69},
                            {Which::Hyp, 2, 5, 285},
                            {Which::Hyp, 2, 7, 749},
                            {Which::Sd, 2, 3, 7},
                            {Which::Sd, 2, 5, 27}};
  for (const auto& a : anchors) {
    const PrimePower q = odd_prime_power(a.q);
    const BigInt theorem = a.w == Which::Hyp ? hyp(a.g, q) : sd(a.g, q);
    const BigInt symbolic = evaluate(a.w == Which::Hyp ? symbolic_hyp(a.g) : symbolic_sd(a.g), q);
    const BigInt table = evaluate_table_row(a.g, a.w, q);
    if (theorem != a.value || symbolic != a.value || table != a.value)
      o.fail(std::string("anchor ") + std::string(which_name(a.w)) + "(" + std::to_string(a.g) +
             "," + std::to_string(a.q) + ")");
  }
  if (o.pass) o.detail = std::to_string(rows) + " rows checked, 5 anchors coincide";
  return o;
}

Outcome oracle_equality(bool slow) {
  Outcome o;
  struct Case {
    uint32_t g;
    uint64_t q;
  };
  const Case fast_cases[] = {{2, 3}, {2, 5}, {2, 7}, {3, 3}, {3, 5}, {4, 3}};
  auto run = [&](const Case& c) {
    const PrimePower q = odd_prime_power(c.q);
    OracleOptions opt;
    opt.method = OracleMethod::Both;
    const OracleResult r = run_oracle(q, c.g, opt);
    const BigInt h = hyp(c.g, q), s = sd(c.g, q);
    const std::string tag = "(" + std::to_string(c.g) + "," + std::to_string(c.q) + ")";
    if (!r.hyp_burnside || BigInt(*r.hyp_burnside) != h) o.fail(tag + " burnside");
    if (!r.hyp_orbit || BigInt(*r.hyp_orbit) != h) o.fail(tag + " orbit");
    if (!r.sd_orbit || BigInt(*r.sd_orbit) != s) o.fail(tag + " sd");
    if (!r.selfdual_consistent) o.fail(tag + " self-duality criterion");
  };
  const auto t0 = Clock::now();
  for (const auto& c : fast_cases) run(c);
  const double fast_time = seconds_since(t0);
  within(o, fast_time, 60.0);
  std::string extra = "q=9 case skipped (fast tier)";
  if (slow) {
    const auto t1 = Clock::now();
    run({2, 9});
    within(o, seconds_since(t1) + fast_time, 600.0);
    extra = "q=9 case " + std::to_string(seconds_since(t1)) + " s";
  }
  if (o.pass)
    o.detail = "six cases in " + std::to_string(fast_time) + " s, " + extra;
  return o;
}

Outcome suite(const std::string& name, const VerifyOptions& opt, double limit) {
  Outcome o;
  const auto t0 = Clock::now();
  const VerifyReport r = verify_suite(name, opt);
  if (!r.passed) o.fail(r.counterexample.value_or("failed without counterexample"));
  if (r.assertions == 0) o.fail("no assertions");
  if (limit > 0) within(o, seconds_since(t0), limit);
  if (o.pass) o.detail = std::to_string(r.assertions) + " assertions";
  return o;
}

std::vector<PrimePower> qs_of(std::initializer_list<uint64_t> qs) {
  std::vector<PrimePower> out;
  for (uint64_t q : qs) out.push_back(odd_prime_power(q));
  return out;
}

Outcome eps_exhaustive() {
  VerifyOptions opt;
  opt.qs = qs_of({3, 5});
  opt.ns = {6, 8};
  return suite("eps", opt, 120.0);
}

Outcome counts_lemma() {
  VerifyOptions opt;
  opt.qs = qs_of({3, 5, 7});
  opt.ns = {1, 2, 3, 4, 5, 6, 7, 8};
  Outcome o = suite("counts", opt, 0);
  // The suite compares enumeration with a_p1; pin a_p1 to q^n - q^{n-2}
  // where that shape applies (n = 1, 2 give q + 1 and q^2).
  for (const auto& q : opt.qs)
    for (uint32_t n = 3; n <= 8; ++n)
      if (a_p1(q, n) != big_pow(q.q, n) - big_pow(q.q, n - 2))
        o.fail("a_p1 q=" + std::to_string(q.q) + " n=" + std::to_string(n));
  return o;
}

Outcome norm_lemma() {
  VerifyOptions opt;
  opt.qs = qs_of({3, 5, 7, 9, 11, 13});
  return suite("norm", opt, 0);
}

Outcome orbit_lemma() {
  VerifyOptions opt;
  opt.qs = qs_of({3, 5, 7});
  return suite("orbit_lemma", opt, 0);
}

Outcome quot_lemma() {
  VerifyOptions opt;
  opt.qs = qs_of({3, 5});
  return suite("quot", opt, 0);
}

Outcome cocycle() {
  VerifyOptions opt;
  opt.qs = qs_of({3, 5, 7});
  opt.ns = {6, 8};
  opt.random_trials = 10000;
  return suite("cocycle", opt, 0);
}

// leading - restricted has degree <= bound on every class r mod M with
// r = s mod 4, gcd(r, M) = 1.
void degree_bound(Outcome& o, const std::string& tag, const ConditionalPolynomial& cp,
                  uint64_t s, const IntPoly& leading, int bound, size_t& classes) {
  const uint64_t M = lcm_u64(guard_modulus_lcm(cp), 4);
  for (uint64_t r = 1; r < M; ++r) {
    if (gcd_u64(r, M) != 1 || r % 4 != s) continue;
    const IntPoly rest = poly_sub(restrict_to_class(cp, r, M, true), leading);
    ++classes;
    if (poly_degree(rest) > bound)
      o.fail(tag + " class " + std::to_string(r) + " mod " + std::to_string(M) +
             ": remainder degree " + std::to_string(poly_degree(rest)));
  }
}

Outcome corollaries() {
  Outcome o;
  for (uint32_t g : {3u, 5u, 7u, 9u})
    for (uint64_t q : {5, 9, 13, 17, 25, 29})
      if (sd(g, odd_prime_power(q)) != 0 || evaluate(symbolic_sd(g), odd_prime_power(q)) != 0)
        o.fail("sd(" + std::to_string(g) + "," + std::to_string(q) + ") != 0");

  size_t classes = 0;
  auto mono = [](std::initializer_list<std::pair<int64_t, uint32_t>> terms) {
    IntPoly f;
    for (const auto& [c, k] : terms) f = poly_add(f, monomial(c, k));
    return f;
  };
  for (uint32_t g = 8; g <= 14; ++g) {
    const auto h = symbolic_hyp(g);
    const auto s = symbolic_sd(g);
    const std::string gs = std::to_string(g);
    const uint32_t top = 2 * g - 1;
    if (g % 2 == 0) {
      degree_bound(o, "hyp g=" + gs + " 4|q-1", h, 1, mono({{2, top}, {1, g}}),
                   static_cast<int>(top / 3), classes);
      if (g >= 10) {
        degree_bound(o, "hyp g=" + gs + " 4|q+1", h, 3, mono({{2, top}, {1, g}, {-2, g - 3}}),
                     static_cast<int>(g - 4), classes);
        degree_bound(o, "sd g=" + gs + " 4|q-1", s, 1, mono({{1, g}, {-2, g - 2}, {2, g - 4}}),
                     static_cast<int>(g - 6), classes);
        degree_bound(o, "sd g=" + gs + " 4|q+1", s, 3, mono({{1, g}, {-2, g - 2}, {2, g - 3}}),
                     static_cast<int>(g - 6), classes);
      }
    } else if (g >= 9) {
      degree_bound(o, "hyp g=" + gs + " 4|q-1", h, 1, mono({{2, top}, {2, g}, {-2, g - 2}}),
                   static_cast<int>(g - 4), classes);
      degree_bound(o, "hyp g=" + gs + " 4|q+1", h, 3, mono({{2, top}, {2, g}, {-2, g - 1}}),
                   static_cast<int>(g - 4), classes);
      degree_bound(o, "sd g=" + gs + " 4|q+1", s, 3, mono({{2, g - 1}, {-2, g - 2}}),
                   static_cast<int>(g - 5), classes);
      degree_bound(o, "sd g=" + gs + " 4|q-1", s, 1, IntPoly{}, -1, classes);
    }
  }
  if (o.pass) o.detail = "sd vanishes on 24 points, degree bounds hold on " +
                         std::to_string(classes) + " residue classes";
  return o;
}

Outcome integrality() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto qs = odd_prime_powers_up_to(1000);
  size_t n = 0;
  for (uint32_t g = 2; g <= 30; ++g)
    for (const auto& q : qs) {
      // census() checks every division and the hyp/sd parity itself.
      const CensusReport r = census(g, q);
      if (r.hyp < 0 || r.sd < 0 || (r.hyp + r.sd) % 2 != 0 || r.y * 2 != r.hyp + r.sd)
        o.fail("g=" + std::to_string(g) + " q=" + std::to_string(q.q));
      ++n;
    }
  within(o, seconds_since(t0), 30.0);
  if (o.pass) o.detail = std::to_string(n) + " (g, q) pairs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = true;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--fast") == 0) {
      slow = false;
    } else {
      std::fprintf(stderr, "usage: %s [--fast]\n", argv[0]);
      return 2;
    }
  }
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"two-path formula agreement", formula_agreement},
      {"table fixtures and anchors", table_fixtures},
      {"oracle equality", [slow] { return oracle_equality(slow); }},
      {"epsilon closed form, exhaustive", eps_exhaustive},
      {"n-set counts of P^1, A^1, G_m, P^1_0", counts_lemma},
      {"norm lemma", norm_lemma},
      {"orbit lemma", orbit_lemma},
      {"quotient lemma", quot_lemma},
      {"cocycle, conjugation, homomorphism", cocycle},
      {"odd-genus vanishing and degree bounds", corollaries},
      {"integrality stress", integrality},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2zu %s: %s (%.2f s) %s\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].name, seconds_since(t0), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
