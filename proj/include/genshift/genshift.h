/* Copyright 2026 The genshift Authors
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
 * C interface to libgenshift: generalized shift operators on l2 over finite
 * and countable index sets.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every call returns a gs_status; on failure the
 * message of the last error on the calling thread is available through
 * gs_last_error(). Strings returned through char** are heap allocated and
 * released with gs_string_free().
 *
 * Indices are 1-based.
 */
#ifndef GENSHIFT_GENSHIFT_H_
#define GENSHIFT_GENSHIFT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GENSHIFT_BUILDING_LIBRARY)
#define GENSHIFT_API __declspec(dllexport)
#else
#define GENSHIFT_API __declspec(dllimport)
#endif
#else
#define GENSHIFT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* The values 0 and 2..6 double as the CLI exit codes. */
typedef enum gs_status {
  GS_OK = 0,
  GS_ERR_PARSE = 2,
  GS_ERR_INTEGRITY = 3,
  GS_NOT_IN_L2 = 4,
  GS_ERR_PRECONDITION = 5,
  GS_ERR_ORACLE_DISAGREEMENT = 6,
  GS_ERR_DOMAIN = 10,
  GS_ERR_CONSTRUCTION = 11,
  GS_ERR_NUMERIC = 12,
  GS_ERR_SEARCH_EXHAUSTED = 13,
  GS_ERR_INVALID_ARGUMENT = 14,
  GS_ERR_INTERNAL = 15
} gs_status;

typedef enum gs_verdict {
  GS_VERDICT_FALSE = 0,
  GS_VERDICT_TRUE = 1,
  GS_VERDICT_WINDOW_ONLY = 2
} gs_verdict;

typedef enum gs_norm_kind {
  GS_NORM_EXACT = 0,
  GS_NORM_INFINITE = 1,
  GS_NORM_WINDOW_LOWER_BOUND = 2
} gs_norm_kind;

typedef struct gs_classification {
  gs_verdict maps_into_l2;
  gs_norm_kind norm_kind;
  double operator_norm; /* +inf for GS_NORM_INFINITE */
  gs_verdict sigma_injective;
  gs_verdict sigma_surjective;
  gs_verdict isometry;
  gs_verdict compact;
} gs_classification;

typedef struct gs_map gs_map;
typedef struct gs_vector gs_vector;

GENSHIFT_API const char* gs_version(void);
GENSHIFT_API const char* gs_status_name(gs_status status);
/* Message of the last failed call on this thread; "" when none. */
GENSHIFT_API const char* gs_last_error(void);
GENSHIFT_API void gs_string_free(char* s);

/* ---- maps ---- */

/* Map file format, see README. */
GENSHIFT_API gs_status gs_map_from_json(const char* text, gs_map** out);
GENSHIFT_API gs_status gs_map_from_images(const uint64_t* images, size_t n,
                                          gs_map** out);
/* Shipped rule by name; pass param 0 for rules without a parameter. */
GENSHIFT_API gs_status gs_map_from_rule(const char* name, uint64_t param,
                                        gs_map** out);
GENSHIFT_API void gs_map_free(gs_map* map);

/* 1 for a finite index set; *size receives n (0 when countable). */
GENSHIFT_API int gs_map_is_finite(const gs_map* map, uint64_t* size);
GENSHIFT_API gs_status gs_map_eval(const gs_map* map, uint64_t k, uint64_t* out);
GENSHIFT_API gs_status gs_map_fiber_card(const gs_map* map, uint64_t a,
                                         uint64_t* card, int* is_infinite);
GENSHIFT_API gs_status gs_map_to_json(const gs_map* map, char** out);

/* ---- vectors (on the index set of a map) ---- */

GENSHIFT_API gs_status gs_vector_from_json(const gs_map* domain_of,
                                           const char* text, gs_vector** out);
GENSHIFT_API gs_status gs_vector_unit(const gs_map* domain_of, uint64_t theta,
                                      gs_vector** out);
GENSHIFT_API void gs_vector_free(gs_vector* v);
GENSHIFT_API gs_status gs_vector_to_json(const gs_vector* v, char** out);
GENSHIFT_API gs_status gs_vector_norm(const gs_vector* v, double* out);
GENSHIFT_API size_t gs_vector_support_size(const gs_vector* v);

/* ---- the operator ---- */

/* On GS_NOT_IN_L2, *offending receives the smallest support index whose
 * fiber is infinite and *out is left untouched. */
GENSHIFT_API gs_status gs_apply(const gs_map* map, const gs_vector* x,
                                gs_vector** out, uint64_t* offending);
/* +inf when the image is not in l2. */
GENSHIFT_API gs_status gs_apply_norm_sq(const gs_map* map, const gs_vector* x,
                                        double* out);
GENSHIFT_API gs_status gs_classify(const gs_map* map, uint64_t injectivity_window,
                                   uint64_t surjectivity_window,
                                   gs_classification* out);
/* allow_window_only != 0 accepts window-limited injectivity. */
GENSHIFT_API gs_status gs_solve(const gs_map* map, const gs_vector* y,
                                int allow_window_only, gs_vector** out);
GENSHIFT_API gs_status gs_in_domain(const gs_map* map, const gs_vector* z, int* out);
GENSHIFT_API int gs_is_compact(const gs_map* map);

/* ---- JSON reports ---- */

GENSHIFT_API gs_status gs_analyze_json(const gs_map* map, uint64_t window,
                                       uint64_t seed, char** out);
/* GS_ERR_PRECONDITION on finite domains or unbounded fibers. */
GENSHIFT_API gs_status gs_compact_witness_json(const gs_map* map, uint64_t count,
                                               uint64_t window, char** out);
/* GS_ERR_PRECONDITION when the fibers over M are certified bounded. */
GENSHIFT_API gs_status gs_divergence_witness_json(const gs_map* map, uint64_t k,
                                                  char** out);
/* random_count == 0 runs the exhaustive sweep over all n^n maps. The summary
 * is written to *out even when the status is GS_ERR_ORACLE_DISAGREEMENT. */
GENSHIFT_API gs_status gs_oracle_check_json(uint64_t n, uint64_t random_count,
                                            uint64_t seed, char** out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* GENSHIFT_GENSHIFT_H_ */
