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

#include "hypcount/hypcount.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "hypcount/census.hpp"
#include "hypcount/error.hpp"
#include "hypcount/oracle.hpp"
#include "hypcount/symbolic.hpp"
#include "hypcount/verify.hpp"

struct hc_census {
  hypcount::CensusReport report;
};
struct hc_cpoly {
  hypcount::ConditionalPolynomial cp;
};
struct hc_table_report {
  hypcount::TableComparison cmp;
};
struct hc_oracle_result {
  hypcount::OracleResult result;
};
struct hc_verify_report {
  hypcount::VerifyReport report;
};

namespace {

using namespace hypcount;

thread_local std::string g_last_error;

hc_status fail(hc_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class Fn>
hc_status guarded(Fn&& fn) {
  try {
    fn();
    return HC_OK;
  } catch (const InvalidArgument& e) {
    return fail(HC_INVALID_ARGUMENT, e.what());
  } catch (const BudgetExceeded& e) {
    return fail(HC_BUDGET_EXCEEDED, e.what());
  } catch (const InternalError& e) {
    return fail(HC_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HC_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HC_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class T>
void require(const T* p, const char* what) {
  if (!p) throw InvalidArgument(std::string(what) + " is null");
}

Which to_which(hc_which w) {
  if (w == HC_HYP) return Which::Hyp;
  if (w == HC_SD) return Which::Sd;
  throw InvalidArgument("unknown table selector");
}

RenderFormat to_format(hc_format f) {
  switch (f) {
    case HC_FORMAT_TEXT:
      return RenderFormat::Text;
    case HC_FORMAT_JSON:
      return RenderFormat::Json;
    case HC_FORMAT_MARKDOWN:
      return RenderFormat::Markdown;
    case HC_FORMAT_CSV:
      return RenderFormat::Csv;
  }
  throw InvalidArgument("unknown output format");
}

const BigInt& census_field(const CensusReport& r, const std::string& f) {
  if (f == "hyp") return r.hyp;
  if (f == "sd") return r.sd;
  if (f == "y") return r.y;
  if (f == "h_A") return r.components.h_A;
  if (f == "h_B") return r.components.h_B;
  if (f == "h_C") return r.components.h_C;
  if (f == "h_D") return r.components.h_D;
  throw InvalidArgument("unknown census field '" + f + "'");
}

std::string census_text(const CensusReport& r, bool timings) {
  std::string s = "g = " + std::to_string(r.g) + ", q = " + std::to_string(r.q.q) + " (p = " +
                  std::to_string(r.q.p) + ", e = " + std::to_string(r.q.e) + ")\n";
  s += "  hyp = " + to_decimal(r.hyp) + "\n";
  s += "  sd  = " + to_decimal(r.sd) + "\n";
  s += "  y   = " + to_decimal(r.y) + "\n";
  s += "  h_A = " + to_decimal(r.components.h_A) + ", h_B = " + to_decimal(r.components.h_B) +
       ", h_C = " + to_decimal(r.components.h_C) + ", h_D = " + to_decimal(r.components.h_D) +
       "\n";
  if (timings && r.elapsed_seconds) s += "  elapsed = " + std::to_string(*r.elapsed_seconds) + " s\n";
  return s;
}

std::vector<std::string> census_cells(const CensusReport& r) {
  return {std::to_string(r.g),          std::to_string(r.q.q),        std::to_string(r.q.p),
          std::to_string(r.q.e),        to_decimal(r.hyp),            to_decimal(r.sd),
          to_decimal(r.y),              to_decimal(r.components.h_A), to_decimal(r.components.h_B),
          to_decimal(r.components.h_C), to_decimal(r.components.h_D)};
}

const std::vector<std::string> kCensusHeader = {"g",  "q",   "p",   "e",   "hyp", "sd",
                                                "y",  "h_A", "h_B", "h_C", "h_D"};

std::string join(const std::vector<std::string>& cells, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < cells.size(); ++i) s += (i ? sep : "") + cells[i];
  return s;
}

std::string markdown_row(const std::vector<std::string>& cells) {
  return "| " + join(cells, " | ") + " |\n";
}

std::string key_value_table(const std::vector<std::pair<std::string, std::string>>& kv,
                            hc_format format) {
  std::string s;
  if (format == HC_FORMAT_CSV) {
    s = "key,value\n";
    for (const auto& [k, v] : kv) s += k + "," + v + "\n";
  } else if (format == HC_FORMAT_MARKDOWN) {
    s = "| key | value |\n|---|---|\n";
    for (const auto& [k, v] : kv) s += markdown_row({k, v});
  } else {
    for (const auto& [k, v] : kv) s += k + ": " + v + "\n";
  }
  return s;
}

std::string opt_count(const std::optional<uint64_t>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

std::string table_report_text(const TableComparison& c) {
  std::string s = std::string(which_name(c.which)) + " g=" + std::to_string(c.g) + ": " +
                  std::to_string(c.mismatches.size()) + " mismatches over " +
                  std::to_string(c.points_checked) + " odd prime powers\n";
  if (c.known_issue) s += "  suspect token: " + *c.known_issue + "\n";
  if (!c.mismatches.empty()) s += "  row: " + c.row + "\n";
  for (const auto& m : c.mismatches)
    s += "  q=" + std::to_string(m.q.q) + ": table " + to_decimal(m.table_value) + ", formula " +
         to_decimal(m.formula_value) + "\n";
  if (c.alternative_row)
    s += "  alternative reading: " + *c.alternative_row + "\n  alternative reading mismatches: " +
         std::to_string(c.alternative_mismatches) + "\n";
  return s;
}

nlohmann::ordered_json table_report_json(const TableComparison& c) {
  nlohmann::ordered_json j;
  j["which"] = std::string(which_name(c.which));
  j["g"] = c.g;
  j["row"] = c.row;
  j["known_issue"] = c.known_issue ? nlohmann::ordered_json(*c.known_issue) : nullptr;
  j["points_checked"] = c.points_checked;
  nlohmann::ordered_json mm = nlohmann::ordered_json::array();
  for (const auto& m : c.mismatches)
    mm.push_back({{"q", m.q.q},
                  {"table", to_decimal(m.table_value)},
                  {"formula", to_decimal(m.formula_value)}});
  j["mismatches"] = mm;
  if (c.alternative_row) {
    j["alternative_row"] = *c.alternative_row;
    j["alternative_mismatches"] = c.alternative_mismatches;
  }
  return j;
}

}  // namespace

extern "C" {

const char* hc_version(void) { return "0.1.0"; }

const char* hc_status_name(hc_status status) {
  switch (status) {
    case HC_OK:
      return "ok";
    case HC_INVALID_ARGUMENT:
      return "invalid argument";
    case HC_BUDGET_EXCEEDED:
      return "budget exceeded";
    case HC_VERIFICATION_FAILED:
      return "verification failed";
    case HC_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* hc_last_error(void) { return g_last_error.c_str(); }

void hc_string_free(char* s) { std::free(s); }

hc_status hc_parse_prime_power(uint64_t q, uint64_t* p, uint32_t* e) {
  return guarded([&] {
    require(p, "p");
    require(e, "e");
    const PrimePower pq = odd_prime_power(q);
    *p = pq.p;
    *e = pq.e;
  });
}

hc_status hc_make_prime_power(uint64_t p, uint32_t e, uint64_t* q) {
  return guarded([&] {
    require(q, "q");
    *q = odd_prime_power(p, e).q;
  });
}

hc_status hc_census_compute(uint32_t g, uint64_t p, uint32_t e, hc_census** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    auto c = std::make_unique<hc_census>();
    c->report = census(g, odd_prime_power(p, e));
    *out = c.release();
  });
}

void hc_census_free(hc_census* c) { delete c; }

hc_status hc_census_get(const hc_census* c, const char* field, char** out) {
  return guarded([&] {
    require(c, "census");
    require(field, "field");
    require(out, "out");
    *out = dup(to_decimal(census_field(c->report, field)));
  });
}

hc_status hc_census_genus(const hc_census* c, uint32_t* g, uint64_t* q) {
  return guarded([&] {
    require(c, "census");
    if (g) *g = c->report.g;
    if (q) *q = c->report.q.q;
  });
}

hc_status hc_census_render(const hc_census* const* items, size_t n, hc_format format,
                           int with_timings, char** out) {
  return guarded([&] {
    require(out, "out");
    if (n > 0) require(items, "items");
    for (size_t i = 0; i < n; ++i) require(items[i], "census");
    std::string s;
    switch (format) {
      case HC_FORMAT_TEXT:
        for (size_t i = 0; i < n; ++i) s += census_text(items[i]->report, with_timings);
        break;
      case HC_FORMAT_JSON:
        if (n == 1) {
          s = to_json(items[0]->report, with_timings) + "\n";
        } else {
          s = "[";
          for (size_t i = 0; i < n; ++i) s += (i ? "," : "") + to_json(items[i]->report, with_timings);
          s += "]\n";
        }
        break;
      case HC_FORMAT_CSV:
        s = join(kCensusHeader, ",") + "\n";
        for (size_t i = 0; i < n; ++i) s += join(census_cells(items[i]->report), ",") + "\n";
        break;
      case HC_FORMAT_MARKDOWN:
        s = markdown_row(kCensusHeader) + "|";
        for (size_t i = 0; i < kCensusHeader.size(); ++i) s += "---|";
        s += "\n";
        for (size_t i = 0; i < n; ++i) s += markdown_row(census_cells(items[i]->report));
        break;
      default:
        throw InvalidArgument("unknown output format");
    }
    *out = dup(s);
  });
}

hc_status hc_symbolic_build(hc_which which, uint32_t g, hc_cpoly** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    auto p = std::make_unique<hc_cpoly>();
    p->cp = to_which(which) == Which::Hyp ? symbolic_hyp(g) : symbolic_sd(g);
    *out = p.release();
  });
}

hc_status hc_cpoly_from_json(const char* json, hc_cpoly** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = nullptr;
    auto p = std::make_unique<hc_cpoly>();
    p->cp = from_json(json);
    *out = p.release();
  });
}

hc_status hc_cpoly_parse(const char* text, hc_cpoly** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    auto p = std::make_unique<hc_cpoly>();
    p->cp = parse_conditional(text);
    *out = p.release();
  });
}

void hc_cpoly_free(hc_cpoly* cp) { delete cp; }

hc_status hc_cpoly_render(const hc_cpoly* cp, hc_format format, char** out) {
  return guarded([&] {
    require(cp, "polynomial");
    require(out, "out");
    *out = dup(render(cp->cp, to_format(format)));
  });
}

hc_status hc_cpoly_evaluate(const hc_cpoly* cp, uint64_t p, uint32_t e, char** out) {
  return guarded([&] {
    require(cp, "polynomial");
    require(out, "out");
    *out = dup(to_decimal(evaluate(cp->cp, odd_prime_power(p, e))));
  });
}

hc_status hc_cpoly_restrict(const hc_cpoly* cp, uint64_t r, uint64_t modulus,
                            int assume_large_char, char** out) {
  return guarded([&] {
    require(cp, "polynomial");
    require(out, "out");
    *out = dup(to_string(restrict_to_class(cp->cp, r, modulus, assume_large_char != 0)));
  });
}

int hc_cpoly_equal(const hc_cpoly* a, const hc_cpoly* b) {
  if (!a || !b) return 0;
  return a->cp == b->cp ? 1 : 0;
}

hc_status hc_table_render(hc_which which, uint32_t g_lo, uint32_t g_hi, hc_format format,
                          char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup(render_table(g_lo, g_hi, to_which(which), to_format(format)));
  });
}

hc_status hc_table_compare(hc_which which, uint32_t g, uint64_t q_bound, hc_table_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    auto r = std::make_unique<hc_table_report>();
    r->cmp = compare_with_table(g, to_which(which), q_bound);
    *out = r.release();
  });
}

size_t hc_table_report_mismatches(const hc_table_report* r) {
  return r ? r->cmp.mismatches.size() : 0;
}

int hc_table_report_known_issue(const hc_table_report* r) {
  return r && r->cmp.known_issue ? 1 : 0;
}

hc_status hc_table_report_render(const hc_table_report* r, hc_format format, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    if (format == HC_FORMAT_JSON) {
      *out = dup(table_report_json(r->cmp).dump() + "\n");
    } else if (format == HC_FORMAT_TEXT || format == HC_FORMAT_MARKDOWN ||
               format == HC_FORMAT_CSV) {
      if (format == HC_FORMAT_CSV) {
        std::string s = "which,g,q,table,formula\n";
        for (const auto& m : r->cmp.mismatches)
          s += std::string(which_name(r->cmp.which)) + "," + std::to_string(r->cmp.g) + "," +
               std::to_string(m.q.q) + "," + to_decimal(m.table_value) + "," +
               to_decimal(m.formula_value) + "\n";
        *out = dup(s);
      } else {
        *out = dup(table_report_text(r->cmp));
      }
    } else {
      throw InvalidArgument("unknown output format");
    }
  });
}

void hc_table_report_free(hc_table_report* r) { delete r; }

void hc_oracle_options_init(hc_oracle_options* o) {
  if (!o) return;
  o->method = HC_ORACLE_BOTH;
  o->max_work = kDefaultOracleBudget;
  o->threads = 0;
  o->record_orbits = 0;
  o->cache_dir = nullptr;
}

uint64_t hc_oracle_work(uint32_t g, uint64_t p, uint32_t e) {
  try {
    return oracle_work(odd_prime_power(p, e), g);
  } catch (const std::exception& ex) {
    g_last_error = ex.what();
    return UINT64_MAX;
  }
}

hc_status hc_oracle_run(uint32_t g, uint64_t p, uint32_t e, const hc_oracle_options* o,
                        hc_oracle_result** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    OracleOptions opt;
    if (o) {
      switch (o->method) {
        case HC_ORACLE_BURNSIDE:
          opt.method = OracleMethod::Burnside;
          break;
        case HC_ORACLE_ORBIT:
          opt.method = OracleMethod::Orbit;
          break;
        case HC_ORACLE_BOTH:
          opt.method = OracleMethod::Both;
          break;
        default:
          throw InvalidArgument("unknown oracle method");
      }
      opt.max_work = o->max_work;
      opt.threads = o->threads;
      opt.record_orbits = o->record_orbits != 0;
      if (o->cache_dir) opt.cache_dir = o->cache_dir;
    }
    auto r = std::make_unique<hc_oracle_result>();
    r->result = run_oracle(odd_prime_power(p, e), g, opt);
    *out = r.release();
  });
}

hc_status hc_oracle_get(const hc_oracle_result* r, const char* field, uint64_t* value,
                        int* present) {
  return guarded([&] {
    require(r, "result");
    require(field, "field");
    require(value, "value");
    const std::string f = field;
    const OracleResult& o = r->result;
    const std::optional<uint64_t>* v = nullptr;
    if (f == "hyp_burnside") v = &o.hyp_burnside;
    if (f == "hyp_orbit") v = &o.hyp_orbit;
    if (f == "y_orbit") v = &o.y_orbit;
    if (f == "sd_orbit") v = &o.sd_orbit;
    if (f == "selfdual_classes") v = &o.selfdual_classes;
    if (!v) throw InvalidArgument("unknown oracle field '" + f + "'");
    *value = v->value_or(0);
    if (present) *present = v->has_value() ? 1 : 0;
  });
}

int hc_oracle_checks_ok(const hc_oracle_result* r) {
  if (!r) return 0;
  const OracleResult& o = r->result;
  for (const auto& t : o.tallies)
    if (!t.constant) return 0;
  return o.selfdual_consistent && o.sanity_ok ? 1 : 0;
}

hc_status hc_oracle_render(const hc_oracle_result* r, hc_format format, int with_timings,
                           char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    const OracleResult& o = r->result;
    if (format == HC_FORMAT_JSON) {
      *out = dup(to_json(o, with_timings != 0) + "\n");
      return;
    }
    std::vector<std::pair<std::string, std::string>> kv = {
        {"g", std::to_string(o.g)},
        {"q", std::to_string(o.q.q)},
        {"hyp_burnside", opt_count(o.hyp_burnside)},
        {"hyp_orbit", opt_count(o.hyp_orbit)},
        {"y_orbit", opt_count(o.y_orbit)},
        {"sd_orbit", opt_count(o.sd_orbit)},
        {"selfdual_classes", opt_count(o.selfdual_classes)},
        {"selfdual_consistent", o.selfdual_consistent ? "yes" : "no"},
        {"point_counts", o.sanity_detail.empty() ? "-" : o.sanity_detail},
    };
    for (const auto& t : o.tallies)
      kv.emplace_back(std::string("tally ") + kind_letter(t.kind) + std::to_string(t.m),
                      std::to_string(t.elements) + " elements, " + std::to_string(t.stable_sets) +
                          " stable, " + std::to_string(t.positive_sets) + " with eps=+1" +
                          (t.constant ? "" : " (NOT constant)"));
    if (o.from_cache) kv.emplace_back("from_cache", "yes");
    if (with_timings) kv.emplace_back("elapsed_seconds", std::to_string(o.elapsed_seconds));
    *out = dup(key_value_table(kv, format));
  });
}

hc_status hc_oracle_dump(const hc_oracle_result* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    *out = dup(orbit_dump(r->result));
  });
}

void hc_oracle_result_free(hc_oracle_result* r) { delete r; }

size_t hc_verify_suite_count(void) { return verify_suite_names().size(); }

const char* hc_verify_suite_name(size_t i) {
  const auto& names = verify_suite_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

hc_status hc_verify_run(const char* suite, const uint64_t* qs, size_t nq, const uint32_t* ns,
                        size_t nn, uint64_t random_trials, hc_verify_report** out) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    *out = nullptr;
    VerifyOptions opt;
    if (nq) require(qs, "q list");
    if (nn) require(ns, "n list");
    for (size_t i = 0; i < nq; ++i) opt.qs.push_back(odd_prime_power(qs[i]));
    opt.ns.assign(ns, ns + nn);
    if (random_trials) opt.random_trials = random_trials;
    auto r = std::make_unique<hc_verify_report>();
    r->report = verify_suite(suite, opt);
    *out = r.release();
  });
}

int hc_verify_passed(const hc_verify_report* r) { return r && r->report.passed ? 1 : 0; }

hc_status hc_verify_render(const hc_verify_report* r, hc_format format, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    const VerifyReport& v = r->report;
    if (format == HC_FORMAT_JSON) {
      *out = dup(to_json(v) + "\n");
      return;
    }
    if (format != HC_FORMAT_TEXT) {
      std::vector<std::pair<std::string, std::string>> kv = {
          {"suite", v.suite},
          {"passed", v.passed ? "yes" : "no"},
          {"assertions", std::to_string(v.assertions)},
          {"counterexample", v.counterexample.value_or("-")}};
      *out = dup(key_value_table(kv, format));
      return;
    }
    std::string s = v.suite + ": " + (v.passed ? "PASS" : "FAIL") + " (" +
                    std::to_string(v.assertions) + " assertions)\n";
    for (const auto& n : v.notes) s += "  " + n + "\n";
    if (v.counterexample) s += "  counterexample: " + *v.counterexample + "\n";
    *out = dup(s);
  });
}

void hc_verify_report_free(hc_verify_report* r) { delete r; }

}  // extern "C"
