/*
 * Copyright 2026 The relcalc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the relcalc library.
 *
 * Conventions:
 *   - Every fallible call returns relcalc_status; on failure a one-line
 *     message is available from relcalc_last_error() on the same thread.
 *   - Handles (relcalc_relation, relcalc_report) are opaque. The caller
 *     owns them and releases each with the matching *_destroy function.
 *   - Strings returned through char** are heap allocated by the library and
 *     must be released with relcalc_string_free().
 *   - Exact counts cross the boundary as decimal strings.
 *   - Composition follows function notation: relcalc_relation_compose(s, r)
 *     is S∘R, "first R, then S".
 */
#ifndef RELCALC_H
#define RELCALC_H

#include <stddef.h>
#include <stdint.h>

#if defined(RELCALC_BUILDING_LIBRARY)
#define RELCALC_API __attribute__((visibility("default")))
#else
#define RELCALC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum relcalc_status {
  RELCALC_OK = 0,
  RELCALC_E_INVALID_ARGUMENT = 1,
  RELCALC_E_PARSE = 2,
  RELCALC_E_DOMAIN = 3,
  RELCALC_E_SHAPE = 4,
  RELCALC_E_CAP = 5,
  RELCALC_E_BUDGET = 6,
  RELCALC_E_INTERNAL = 7
} relcalc_status;

typedef enum relcalc_property {
  RELCALC_RIGHT_UNIQUE = 0,
  RELCALC_RIGHT_TOTAL = 1,
  RELCALC_LEFT_UNIQUE = 2,
  RELCALC_LEFT_TOTAL = 3
} relcalc_property;

typedef enum relcalc_method { RELCALC_POINTWISE = 0, RELCALC_POINTFREE = 1 } relcalc_method;

typedef enum relcalc_side { RELCALC_RIGHT_INVERSE = 0, RELCALC_LEFT_INVERSE = 1 } relcalc_side;

/* Same order as the canonical class names ALL, RU, LU, ... RT_AND_LT. */
typedef enum relcalc_class {
  RELCALC_ALL = 0,
  RELCALC_RU,
  RELCALC_LU,
  RELCALC_RT,
  RELCALC_LT,
  RELCALC_FUNCTION,
  RELCALC_INJECTION,
  RELCALC_SURJECTION,
  RELCALC_BIJECTION,
  RELCALC_RU_AND_LU,
  RELCALC_RU_AND_RT,
  RELCALC_LU_AND_LT,
  RELCALC_RT_AND_LT
} relcalc_class;

typedef struct relcalc_relation relcalc_relation;
typedef struct relcalc_report relcalc_report;

typedef struct relcalc_property_set {
  int ru;
  int rt;
  int lu;
  int lt;
  int function;
  int injection;
  int surjection;
  int bijection;
} relcalc_property_set;

typedef struct relcalc_verify_limits {
  size_t max_set_size;
  size_t max_cells;
  double budget;
} relcalc_verify_limits;

typedef struct relcalc_probability {
  char* numerator;
  char* denominator;
  char* reduced_numerator;
  char* reduced_denominator;
  char* decimal;
  double value;
} relcalc_probability;

/* A class, or (is_pattern != 0) one exact combination of the four flags. */
typedef struct relcalc_mc_target {
  int is_pattern;
  relcalc_class cls;
  int rt;
  int lt;
  int ru;
  int lu;
} relcalc_mc_target;

typedef struct relcalc_mc_estimate {
  double estimate;
  uint64_t samples;
  uint64_t seed;
  double standard_error;
  uint64_t hits;
} relcalc_mc_estimate;

/* ---- general ------------------------------------------------------------ */

RELCALC_API const char* relcalc_version(void);
RELCALC_API const char* relcalc_last_error(void);
RELCALC_API void relcalc_string_free(char* s);

/* ---- relations ---------------------------------------------------------- */

/* `pairs` holds pair_count (i, j) label pairs, 1-based, flattened. */
RELCALC_API relcalc_status relcalc_relation_create(size_t n, size_t k, const size_t* pairs,
                                                   size_t pair_count, relcalc_relation** out);
RELCALC_API relcalc_status relcalc_relation_parse(const char* text, relcalc_relation** out);
RELCALC_API relcalc_status relcalc_relation_format(const relcalc_relation* rel, char** out);
RELCALC_API relcalc_status relcalc_relation_identity(size_t n, relcalc_relation** out);
RELCALC_API relcalc_status relcalc_relation_opposite(const relcalc_relation* rel, relcalc_relation** out);
RELCALC_API relcalc_status relcalc_relation_compose(const relcalc_relation* s, const relcalc_relation* r,
                                                    relcalc_relation** out);
RELCALC_API relcalc_status relcalc_relation_is_subset(const relcalc_relation* r, const relcalc_relation* s,
                                                      int* out);
RELCALC_API relcalc_status relcalc_relation_encode(const relcalc_relation* rel, uint64_t* out);
RELCALC_API relcalc_status relcalc_relation_decode(size_t n, size_t k, uint64_t index, relcalc_relation** out);
RELCALC_API int relcalc_relation_equal(const relcalc_relation* a, const relcalc_relation* b);
RELCALC_API size_t relcalc_relation_inputs(const relcalc_relation* rel);
RELCALC_API size_t relcalc_relation_outputs(const relcalc_relation* rel);
RELCALC_API size_t relcalc_relation_pair_count(const relcalc_relation* rel);
/* 1-based labels; 0 when out of range. */
RELCALC_API int relcalc_relation_contains(const relcalc_relation* rel, size_t i, size_t j);
RELCALC_API void relcalc_relation_destroy(relcalc_relation* rel);

/* ---- properties --------------------------------------------------------- */

RELCALC_API relcalc_status relcalc_has_property(const relcalc_relation* rel, relcalc_property p,
                                                relcalc_method method, int* out);
RELCALC_API relcalc_status relcalc_classify(const relcalc_relation* rel, relcalc_method method,
                                            relcalc_property_set* out);
RELCALC_API relcalc_status relcalc_verify_inverse(const relcalc_relation* r, const relcalc_relation* s,
                                                  relcalc_side side, int* out);

/* ---- counting ----------------------------------------------------------- */

RELCALC_API relcalc_status relcalc_class_from_name(const char* name, relcalc_class* out);
RELCALC_API const char* relcalc_class_name(relcalc_class cls);
RELCALC_API relcalc_status relcalc_count(relcalc_class cls, uint64_t n, uint64_t k, char** out);
RELCALC_API relcalc_status relcalc_binomial(uint64_t n, uint64_t j, char** out);
RELCALC_API relcalc_status relcalc_surjection_count(uint64_t n, uint64_t k, char** out);
RELCALC_API relcalc_status relcalc_injection_count(uint64_t n, uint64_t k, char** out);
RELCALC_API relcalc_status relcalc_stirling2(uint64_t n, uint64_t k, char** out);
RELCALC_API relcalc_status relcalc_bounds_ru_rt(uint64_t n, uint64_t k, char** lower, char** upper);

/* ---- tables and enumeration (TSV) --------------------------------------- */

/* name: figure1..figure7 or census. `exact` selects the long probability
 * format with numerator/denominator columns. */
RELCALC_API relcalc_status relcalc_table(const char* name, size_t max_n, size_t max_k, int exact,
                                         int half_even, char** out);
RELCALC_API relcalc_status relcalc_census(size_t n, size_t k, int include_empty, int allow_large,
                                          unsigned workers, char** out);
RELCALC_API relcalc_status relcalc_count_by_census(relcalc_class cls, size_t n, size_t k, int allow_large,
                                                   char** out);
RELCALC_API relcalc_status relcalc_enumerate(size_t n, size_t k, int include_empty, int allow_large,
                                             char** out);
RELCALC_API relcalc_status relcalc_appendix(size_t n, size_t k, char** out);

/* ---- verification ------------------------------------------------------- */

RELCALC_API relcalc_status relcalc_default_limits(const char* theorem_id, relcalc_verify_limits* out);
/* limits may be NULL for the theorem's defaults. On RELCALC_E_BUDGET, *out
 * still receives the partial report. */
RELCALC_API relcalc_status relcalc_verify(const char* theorem_id, const relcalc_verify_limits* limits,
                                          relcalc_report** out);
RELCALC_API uint64_t relcalc_report_checked(const relcalc_report* rep);
RELCALC_API uint64_t relcalc_report_counterexamples(const relcalc_report* rep);
RELCALC_API int relcalc_report_passed(const relcalc_report* rep);
RELCALC_API relcalc_status relcalc_report_summary(const relcalc_report* rep, char** out);
RELCALC_API relcalc_status relcalc_report_text(const relcalc_report* rep, char** out);
RELCALC_API void relcalc_report_destroy(relcalc_report* rep);
RELCALC_API relcalc_status relcalc_converse_witness(relcalc_relation** r, relcalc_relation** s);

/* ---- probability -------------------------------------------------------- */

RELCALC_API relcalc_status relcalc_probability_exact(relcalc_class cls, uint64_t n, uint64_t k,
                                                     unsigned places, int half_even, relcalc_probability* out);
RELCALC_API relcalc_status relcalc_probability_census(relcalc_class cls, size_t n, size_t k, unsigned places,
                                                      int half_even, relcalc_probability* out);
/* Frees the strings inside *p and zeroes it. */
RELCALC_API void relcalc_probability_clear(relcalc_probability* p);
RELCALC_API relcalc_status relcalc_probability_approx(relcalc_class cls, uint64_t n, uint64_t k, double* out);
RELCALC_API relcalc_status relcalc_rt_exponential_limit(double r, double* out);
RELCALC_API relcalc_status relcalc_estimate_mc(const relcalc_mc_target* target, size_t n, size_t k,
                                               uint64_t samples, uint64_t seed, unsigned workers,
                                               relcalc_mc_estimate* out);

#ifdef __cplusplus
}
#endif

#endif /* RELCALC_H */
