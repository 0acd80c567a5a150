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

#include <hypcount/hypcount.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { hc_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using CensusPtr = std::unique_ptr<hc_census, Deleter<hc_census, hc_census_free>>;
using CpolyPtr = std::unique_ptr<hc_cpoly, Deleter<hc_cpoly, hc_cpoly_free>>;
using TableReportPtr =
    std::unique_ptr<hc_table_report, Deleter<hc_table_report, hc_table_report_free>>;
using OraclePtr =
    std::unique_ptr<hc_oracle_result, Deleter<hc_oracle_result, hc_oracle_result_free>>;
using VerifyPtr =
    std::unique_ptr<hc_verify_report, Deleter<hc_verify_report, hc_verify_report_free>>;

struct ApiError : std::runtime_error {
  hc_status status;
  ApiError(hc_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

void check(hc_status s) {
  if (s != HC_OK) throw ApiError(s, std::string(hc_status_name(s)) + ": " + hc_last_error());
}

struct PrimePower {
  uint64_t q, p;
  uint32_t e;
};

PrimePower prime_power_of(uint64_t q) {
  PrimePower pp{q, 0, 0};
  check(hc_parse_prime_power(q, &pp.p, &pp.e));
  return pp;
}

uint64_t parse_u64(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("expected a non-negative integer, got '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw UsageError("integer out of range: '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

// "a", "a..b" or comma-separated mixtures of both.
std::vector<uint64_t> parse_range_list(const std::string& text) {
  std::vector<uint64_t> out;
  for (const auto& item : split(text, ',')) {
    const size_t dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_u64(item));
      continue;
    }
    const uint64_t lo = parse_u64(item.substr(0, dots));
    const uint64_t hi = parse_u64(item.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range '" + item + "'");
    if (hi - lo > 100000) throw UsageError("range too long: '" + item + "'");
    for (uint64_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<uint32_t> parse_genera(const std::string& text) {
  std::vector<uint32_t> out;
  for (uint64_t g : parse_range_list(text)) {
    if (g < 2 || g > 100000) throw UsageError("genus must satisfy 2 <= g, got " + std::to_string(g));
    out.push_back(static_cast<uint32_t>(g));
  }
  return out;
}

bool is_odd_prime_power(uint64_t q) {
  uint64_t p;
  uint32_t e;
  return hc_parse_prime_power(q, &p, &e) == HC_OK;
}

// Explicit values must be odd prime powers; inside an "a..b" range the others
// are skipped.
std::vector<PrimePower> parse_q_list(const std::string& text) {
  std::vector<PrimePower> out;
  for (const auto& item : split(text, ',')) {
    if (item.find("..") == std::string::npos) {
      out.push_back(prime_power_of(parse_u64(item)));
      continue;
    }
    for (uint64_t q : parse_range_list(item))
      if (is_odd_prime_power(q)) out.push_back(prime_power_of(q));
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.q < b.q; });
  out.erase(std::unique(out.begin(), out.end(), [](auto& a, auto& b) { return a.q == b.q; }),
            out.end());
  if (out.empty()) throw UsageError("no odd prime power in '" + text + "'");
  return out;
}

hc_format parse_format(const std::string& f) {
  if (f == "text") return HC_FORMAT_TEXT;
  if (f == "json") return HC_FORMAT_JSON;
  if (f == "csv") return HC_FORMAT_CSV;
  if (f == "markdown") return HC_FORMAT_MARKDOWN;
  throw UsageError("unknown format '" + f + "'");
}

hc_which parse_which(const std::string& w) {
  if (w == "hyp") return HC_HYP;
  if (w == "sd") return HC_SD;
  throw UsageError("unknown table '" + w + "' (expected hyp or sd)");
}

struct Options {
  std::string format = "text";
  bool timings = false;
  std::string g;
  std::string q;
  std::optional<uint64_t> p;
  std::optional<uint32_t> e;
  std::string which = "hyp";
  bool compare_table = false;
  std::optional<uint64_t> eval_q;
  std::optional<uint64_t> class_r;
  std::optional<uint64_t> class_m;
  bool large_char = false;
  std::string method = "both";
  uint64_t budget = 0;
  unsigned threads = 0;
  std::string cache;
  std::string dump;
  std::vector<std::string> suites;
  std::string n;
  uint64_t trials = 0;
};

std::vector<PrimePower> resolve_qs(const Options& o) {
  if (!o.q.empty() && (o.p || o.e)) throw UsageError("give either --q or --p/--e, not both");
  if (o.p || o.e) {
    if (!o.p) throw UsageError("--e needs --p");
    PrimePower pp{0, *o.p, o.e.value_or(1)};
    check(hc_make_prime_power(pp.p, pp.e, &pp.q));
    return {pp};
  }
  if (o.q.empty()) throw UsageError("missing --q (or --p/--e)");
  return parse_q_list(o.q);
}

unsigned worker_count(size_t jobs) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<size_t>(hw, std::max<size_t>(jobs, 1)));
}

int cmd_census(const Options& o, hc_which which) {
  const auto genera = parse_genera(o.g);
  const auto qs = resolve_qs(o);
  const hc_format fmt = parse_format(o.format);
  struct Job {
    uint32_t g;
    PrimePower q;
  };
  std::vector<Job> jobs;
  for (uint32_t g : genera)
    for (const auto& q : qs) jobs.push_back({g, q});

  std::vector<CensusPtr> results(jobs.size());
  const unsigned workers = worker_count(jobs.size());
  std::vector<std::future<void>> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.push_back(std::async(std::launch::async, [&, w] {
      for (size_t i = w; i < jobs.size(); i += workers) {
        hc_census* c = nullptr;
        check(hc_census_compute(jobs[i].g, jobs[i].q.p, jobs[i].q.e, &c));
        results[i].reset(c);
      }
    }));
  for (auto& f : pool) f.get();

  if (fmt == HC_FORMAT_TEXT && !o.timings) {
    const char* field = which == HC_HYP ? "hyp" : "sd";
    for (size_t i = 0; i < jobs.size(); ++i) {
      OwnedString v;
      check(hc_census_get(results[i].get(), field, &v.s));
      std::cout << field << "(" << jobs[i].g << ", " << jobs[i].q.q << ") = " << v.str() << "\n";
    }
    return kExitOk;
  }
  std::vector<const hc_census*> raw;
  for (auto& r : results) raw.push_back(r.get());
  OwnedString out;
  check(hc_census_render(raw.data(), raw.size(), fmt, o.timings, &out.s));
  std::cout << out.str();
  return kExitOk;
}

int cmd_table(const Options& o) {
  const auto genera = parse_genera(o.g);
  const hc_which which = parse_which(o.which);
  const hc_format fmt = parse_format(o.format);
  for (size_t i = 1; i < genera.size(); ++i)
    if (genera[i] != genera[i - 1] + 1) throw UsageError("--g must be a contiguous range");
  OwnedString out;
  check(hc_table_render(which, genera.front(), genera.back(), fmt, &out.s));
  std::cout << out.str();
  if (!o.compare_table) return kExitOk;

  int rc = kExitOk;
  for (uint32_t g : genera) {
    if (g > 10) {
      std::cerr << "no transcribed row for g=" << g << "; skipped\n";
      continue;
    }
    hc_table_report* raw = nullptr;
    check(hc_table_compare(which, g, 499, &raw));
    TableReportPtr rep(raw);
    OwnedString text;
    check(hc_table_report_render(rep.get(), fmt == HC_FORMAT_JSON ? HC_FORMAT_JSON : HC_FORMAT_TEXT,
                                 &text.s));
    std::cout << text.str();
    if (hc_table_report_mismatches(rep.get()) > 0 && !hc_table_report_known_issue(rep.get()))
      rc = kExitMismatch;
  }
  return rc;
}

int cmd_symbolic(const Options& o) {
  const auto genera = parse_genera(o.g);
  const hc_which which = parse_which(o.which);
  const hc_format fmt = parse_format(o.format);
  if (o.class_r.has_value() != o.class_m.has_value())
    throw UsageError("--class and --modulus go together");
  for (uint32_t g : genera) {
    hc_cpoly* raw = nullptr;
    check(hc_symbolic_build(which, g, &raw));
    CpolyPtr cp(raw);
    if (o.eval_q) {
      const PrimePower pp = prime_power_of(*o.eval_q);
      OwnedString v;
      check(hc_cpoly_evaluate(cp.get(), pp.p, pp.e, &v.s));
      std::cout << o.which << "(" << g << ", " << pp.q << ") = " << v.str() << "\n";
    } else if (o.class_r) {
      OwnedString v;
      check(hc_cpoly_restrict(cp.get(), *o.class_r, *o.class_m, o.large_char, &v.s));
      std::cout << o.which << "_" << g << " on q = " << *o.class_r << " mod " << *o.class_m
                << ": " << v.str() << "\n";
    } else {
      OwnedString v;
      check(hc_cpoly_render(cp.get(), fmt, &v.s));
      if (fmt == HC_FORMAT_TEXT) std::cout << o.which << "_" << g << " = ";
      std::cout << v.str();
      if (fmt == HC_FORMAT_TEXT) std::cout << "\n";
    }
  }
  return kExitOk;
}

std::string census_value(uint32_t g, const PrimePower& q, const char* field) {
  hc_census* raw = nullptr;
  check(hc_census_compute(g, q.p, q.e, &raw));
  CensusPtr c(raw);
  OwnedString v;
  check(hc_census_get(c.get(), field, &v.s));
  return v.str();
}

int cmd_oracle(const Options& o) {
  const auto genera = parse_genera(o.g);
  const auto qs = resolve_qs(o);
  const hc_format fmt = parse_format(o.format);
  hc_oracle_options opt;
  hc_oracle_options_init(&opt);
  if (o.method == "burnside")
    opt.method = HC_ORACLE_BURNSIDE;
  else if (o.method == "orbit")
    opt.method = HC_ORACLE_ORBIT;
  else if (o.method == "both")
    opt.method = HC_ORACLE_BOTH;
  else
    throw UsageError("unknown method '" + o.method + "'");
  if (o.budget) opt.max_work = o.budget;
  opt.threads = o.threads;
  opt.record_orbits = o.dump.empty() ? 0 : 1;
  std::string cache = o.cache;
  if (cache.empty())
    if (const char* env = std::getenv("HYPCOUNT_CACHE_DIR")) cache = env;
  opt.cache_dir = cache.empty() ? nullptr : cache.c_str();

  std::ofstream dump;
  if (!o.dump.empty()) {
    dump.open(o.dump);
    if (!dump) throw UsageError("cannot open dump file '" + o.dump + "'");
  }

  int rc = kExitOk;
  for (uint32_t g : genera) {
    for (const auto& q : qs) {
      const uint64_t work = hc_oracle_work(g, q.p, q.e);
      if (work > opt.max_work) {
        std::cerr << "refusing oracle run for g=" << g << ", q=" << q.q << ": estimated work "
                  << work << " exceeds budget " << opt.max_work << " (raise with --budget)\n";
        return kExitInvalid;
      }
      hc_oracle_result* raw = nullptr;
      check(hc_oracle_run(g, q.p, q.e, &opt, &raw));
      OraclePtr res(raw);

      const uint64_t hyp = std::stoull(census_value(g, q, "hyp"));
      const uint64_t sd = std::stoull(census_value(g, q, "sd"));
      std::vector<std::string> problems;
      auto compare = [&](const char* field, uint64_t expected) {
        uint64_t v = 0;
        int present = 0;
        check(hc_oracle_get(res.get(), field, &v, &present));
        if (present && v != expected)
          problems.push_back(std::string(field) + " = " + std::to_string(v) + ", formula gives " +
                             std::to_string(expected));
      };
      compare("hyp_burnside", hyp);
      compare("hyp_orbit", hyp);
      compare("sd_orbit", sd);
      if (!hc_oracle_checks_ok(res.get())) problems.push_back("internal consistency check failed");

      OwnedString text;
      check(hc_oracle_render(res.get(), fmt, o.timings, &text.s));
      if (fmt == HC_FORMAT_TEXT)
        std::cout << "oracle g=" << g << " q=" << q.q << " (census hyp=" << hyp << ", sd=" << sd
                  << ")\n";
      std::cout << text.str();
      if (problems.empty()) {
        if (fmt != HC_FORMAT_JSON) std::cout << "AGREES\n";
      } else {
        rc = kExitMismatch;
        std::cerr << "MISMATCH for g=" << g << ", q=" << q.q << "\n";
        for (const auto& pr : problems) std::cerr << "  " << pr << "\n";
        if (fmt != HC_FORMAT_JSON) std::cout << "MISMATCH\n";
      }
      if (dump) {
        OwnedString d;
        check(hc_oracle_dump(res.get(), &d.s));
        dump << d.str();
      }
    }
  }
  return rc;
}

int cmd_verify(const Options& o) {
  const hc_format fmt = parse_format(o.format);
  std::vector<std::string> suites = o.suites;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) {
    suites.clear();
    for (size_t i = 0; i < hc_verify_suite_count(); ++i) suites.push_back(hc_verify_suite_name(i));
  }
  std::vector<uint64_t> qs;
  if (!o.q.empty() || o.p)
    for (const auto& pp : resolve_qs(o)) qs.push_back(pp.q);
  std::vector<uint32_t> ns;
  if (!o.n.empty())
    for (uint64_t n : parse_range_list(o.n)) {
      if (n == 0 || n > 64) throw UsageError("n out of range: " + std::to_string(n));
      ns.push_back(static_cast<uint32_t>(n));
    }

  int rc = kExitOk;
  if (fmt == HC_FORMAT_JSON) std::cout << "[";
  for (size_t i = 0; i < suites.size(); ++i) {
    hc_verify_report* raw = nullptr;
    check(hc_verify_run(suites[i].c_str(), qs.data(), qs.size(), ns.data(), ns.size(), o.trials,
                        &raw));
    VerifyPtr rep(raw);
    OwnedString text;
    check(hc_verify_render(rep.get(), fmt, &text.s));
    std::string s = text.str();
    if (fmt == HC_FORMAT_JSON) {
      while (!s.empty() && s.back() == '\n') s.pop_back();
      std::cout << (i ? "," : "") << s;
    } else {
      std::cout << s;
    }
    if (!hc_verify_passed(rep.get())) rc = kExitMismatch;
  }
  if (fmt == HC_FORMAT_JSON) std::cout << "]\n";
  return rc;
}

void add_format(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "markdown"}));
}

void add_q(CLI::App* app, Options& o) {
  app->add_option("--q", o.q, "Odd prime powers: 9, 3,5,7 or 3..49");
  app->add_option("--p", o.p, "Characteristic");
  app->add_option("--e", o.e, "Degree of q over the prime field");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts of hyperelliptic and self-dual hyperelliptic curves over finite fields"};
  app.set_version_flag("--version", std::string(hc_version()));
  app.set_config("--config", "", "TOML or INI file with default option values");
  app.require_subcommand(1);
  Options o;

  auto* hyp = app.add_subcommand("hyp", "Number of hyperelliptic curves of genus g over F_q");
  auto* sd = app.add_subcommand("sd", "Number of self-dual hyperelliptic curves");
  for (auto* c : {hyp, sd}) {
    c->add_option("--g", o.g, "Genus or range a..b")->required();
    add_q(c, o);
    add_format(c, o);
    c->add_flag("--timings", o.timings, "Include timings");
  }

  auto* table = app.add_subcommand("table", "Closed forms for a range of genera");
  table->add_option("--g", o.g, "Genus or range a..b")->required();
  table->add_option("--which", o.which)->check(CLI::IsMember({"hyp", "sd"}));
  table->add_flag("--compare-table", o.compare_table,
                  "Check the transcribed reference rows against the regenerated forms");
  add_format(table, o);

  auto* sym = app.add_subcommand("symbolic", "Conditional polynomial for hyp_g or sd_g");
  sym->add_option("--g", o.g, "Genus or range a..b")->required();
  sym->add_option("--which", o.which)->check(CLI::IsMember({"hyp", "sd"}));
  sym->add_option("--eval", o.eval_q, "Evaluate at this q");
  sym->add_option("--class", o.class_r, "Restrict to q = r mod M");
  sym->add_option("--modulus", o.class_m, "Modulus M for --class");
  sym->add_flag("--large-char", o.large_char, "Assume the characteristic exceeds every p=l guard");
  add_format(sym, o);

  auto* oracle = app.add_subcommand("oracle", "Brute-force count over F_q");
  oracle->add_option("--g", o.g, "Genus or range a..b")->required();
  add_q(oracle, o);
  oracle->add_option("--method", o.method)->check(CLI::IsMember({"burnside", "orbit", "both"}));
  oracle->add_option("--budget", o.budget, "Work limit (stability tests)");
  oracle->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  oracle->add_option("--cache", o.cache, "Result cache directory (default $HYPCOUNT_CACHE_DIR)");
  oracle->add_option("--dump", o.dump, "Write one JSON line per orbit to this file");
  oracle->add_flag("--timings", o.timings, "Include timings");
  add_format(oracle, o);

  auto* verify = app.add_subcommand("verify", "Exhaustive checks of the lemmas");
  verify->add_option("--suite", o.suites, "Suite name or 'all'")->delimiter(',');
  add_q(verify, o);
  verify->add_option("--n", o.n, "Set sizes: 6,8 or 1..8");
  verify->add_option("--trials", o.trials, "Random trials for sampled identities");
  add_format(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*hyp) return cmd_census(o, HC_HYP);
    if (*sd) return cmd_census(o, HC_SD);
    if (*table) return cmd_table(o);
    if (*sym) return cmd_symbolic(o);
    if (*oracle) return cmd_oracle(o);
    if (*verify) return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.status == HC_INVALID_ARGUMENT || e.status == HC_BUDGET_EXCEEDED) return kExitInvalid;
    if (e.status == HC_VERIFICATION_FAILED) return kExitMismatch;
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return kExitInvalid;
}
