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

/* C interface to hypcount: census formulas, conditional polynomials,
 * brute-force oracle and verification suites.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Functions returning char* hand over a heap string that the caller frees
 * with hc_string_free. On failure a status other than HC_OK is returned and
 * hc_last_error() describes it (per thread, until the next failing call). */

#ifndef HYPCOUNT_HYPCOUNT_H_
#define HYPCOUNT_HYPCOUNT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HC_API
#else
#define HC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,
  HC_INVALID_ARGUMENT = 1,
  HC_BUDGET_EXCEEDED = 2,
  HC_VERIFICATION_FAILED = 3,
  HC_INTERNAL = 4
} hc_status;

typedef enum hc_format {
  HC_FORMAT_TEXT = 0,
  HC_FORMAT_JSON = 1,
  HC_FORMAT_MARKDOWN = 2,
  HC_FORMAT_CSV = 3
} hc_format;

typedef enum hc_which { HC_HYP = 0, HC_SD = 1 } hc_which;

typedef enum hc_oracle_method {
  HC_ORACLE_BURNSIDE = 0,
  HC_ORACLE_ORBIT = 1,
  HC_ORACLE_BOTH = 2
} hc_oracle_method;

HC_API const char* hc_version(void);
HC_API const char* hc_status_name(hc_status status);
HC_API const char* hc_last_error(void);
HC_API void hc_string_free(char* s);

/* Splits an odd prime power q into p^e. */
HC_API hc_status hc_parse_prime_power(uint64_t q, uint64_t* p, uint32_t* e);
/* Validates p (odd prime) and e >= 1 and returns q = p^e. */
HC_API hc_status hc_make_prime_power(uint64_t p, uint32_t e, uint64_t* q);

/* ---- census ---- */

typedef struct hc_census hc_census;

HC_API hc_status hc_census_compute(uint32_t g, uint64_t p, uint32_t e, hc_census** out);
HC_API void hc_census_free(hc_census* c);
/* field: "hyp", "sd", "y", "h_A", "h_B", "h_C" or "h_D"; decimal string. */
HC_API hc_status hc_census_get(const hc_census* c, const char* field, char** out);
HC_API hc_status hc_census_genus(const hc_census* c, uint32_t* g, uint64_t* q);
/* Renders n reports as one document (JSON: an object when n == 1, else an
 * array; CSV and markdown: one header, one row per report). */
HC_API hc_status hc_census_render(const hc_census* const* items, size_t n, hc_format format,
                                  int with_timings, char** out);

/* ---- conditional polynomials ---- */

typedef struct hc_cpoly hc_cpoly;

HC_API hc_status hc_symbolic_build(hc_which which, uint32_t g, hc_cpoly** out);
HC_API hc_status hc_cpoly_from_json(const char* json, hc_cpoly** out);
/* Bracket notation, as produced by hc_cpoly_render with HC_FORMAT_TEXT. */
HC_API hc_status hc_cpoly_parse(const char* text, hc_cpoly** out);
HC_API void hc_cpoly_free(hc_cpoly* cp);
HC_API hc_status hc_cpoly_render(const hc_cpoly* cp, hc_format format, char** out);
HC_API hc_status hc_cpoly_evaluate(const hc_cpoly* cp, uint64_t p, uint32_t e, char** out);
/* The polynomial valid on q = r mod modulus, rendered as text. */
HC_API hc_status hc_cpoly_restrict(const hc_cpoly* cp, uint64_t r, uint64_t modulus,
                                   int assume_large_char, char** out);
HC_API int hc_cpoly_equal(const hc_cpoly* a, const hc_cpoly* b);

HC_API hc_status hc_table_render(hc_which which, uint32_t g_lo, uint32_t g_hi, hc_format format,
                                 char** out);

typedef struct hc_table_report hc_table_report;

/* Transcribed closed form for g in [2, 10] against the regenerated one at
 * every odd prime power up to q_bound. */
HC_API hc_status hc_table_compare(hc_which which, uint32_t g, uint64_t q_bound,
                                  hc_table_report** out);
HC_API size_t hc_table_report_mismatches(const hc_table_report* r);
/* Nonzero when the row carries a documented suspect token. */
HC_API int hc_table_report_known_issue(const hc_table_report* r);
HC_API hc_status hc_table_report_render(const hc_table_report* r, hc_format format, char** out);
HC_API void hc_table_report_free(hc_table_report* r);

/* ---- oracle ---- */

typedef struct hc_oracle_options {
  hc_oracle_method method;
  uint64_t max_work; /* group-element-by-set stability tests */
  unsigned threads;  /* 0: hardware concurrency */
  int record_orbits;
  const char* cache_dir; /* NULL or "": no cache */
} hc_oracle_options;

typedef struct hc_oracle_result hc_oracle_result;

HC_API void hc_oracle_options_init(hc_oracle_options* o);
HC_API uint64_t hc_oracle_work(uint32_t g, uint64_t p, uint32_t e);
/* HC_BUDGET_EXCEEDED when the run would exceed max_work. */
HC_API hc_status hc_oracle_run(uint32_t g, uint64_t p, uint32_t e, const hc_oracle_options* o,
                               hc_oracle_result** out);
/* field: "hyp_burnside", "hyp_orbit", "y_orbit", "sd_orbit" or
 * "selfdual_classes". *present is 0 when the method did not compute it. */
HC_API hc_status hc_oracle_get(const hc_oracle_result* r, const char* field, uint64_t* value,
                               int* present);
/* Nonzero when the internal consistency checks (self-duality two ways,
 * point counts, per-subtype tallies) all held. */
HC_API int hc_oracle_checks_ok(const hc_oracle_result* r);
HC_API hc_status hc_oracle_render(const hc_oracle_result* r, hc_format format, int with_timings,
                                  char** out);
/* JSON lines, one per orbit; empty unless record_orbits was set. */
HC_API hc_status hc_oracle_dump(const hc_oracle_result* r, char** out);
HC_API void hc_oracle_result_free(hc_oracle_result* r);

/* ---- verification suites ---- */

typedef struct hc_verify_report hc_verify_report;

HC_API size_t hc_verify_suite_count(void);
HC_API const char* hc_verify_suite_name(size_t i);
/* Empty q or n lists select the suite defaults. */
HC_API hc_status hc_verify_run(const char* suite, const uint64_t* qs, size_t nq,
                               const uint32_t* ns, size_t nn, uint64_t random_trials,
                               hc_verify_report** out);
HC_API int hc_verify_passed(const hc_verify_report* r);
HC_API hc_status hc_verify_render(const hc_verify_report* r, hc_format format, char** out);
HC_API void hc_verify_report_free(hc_verify_report* r);

#ifdef __cplusplus
}
#endif

#endif /* HYPCOUNT_HYPCOUNT_H_ */
