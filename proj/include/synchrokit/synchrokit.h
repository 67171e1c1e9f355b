// Copyright 2026 The synchrokit Authors
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

#ifndef SYNCHROKIT_SYNCHROKIT_H_
#define SYNCHROKIT_SYNCHROKIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SYNCHROKIT_BUILDING)
#define SK_API __declspec(dllexport)
#else
#define SK_API __declspec(dllimport)
#endif
#else
#define SK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/*
 * C interface to synchrokit.
 *
 * Every fallible call returns an sk_status; on failure a message describing
 * the last error of the calling thread is available from sk_last_error().
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Strings returned through char** out-parameters are heap
 * allocated and released with sk_string_free. State subsets are passed as
 * 64-bit masks (bit q set <=> state q is a member), so subset operations
 * require at most 64 states.
 */

typedef enum sk_status {
  SK_OK = 0,
  SK_ERR_INVALID_ARGUMENT = 1,
  SK_ERR_PARSE = 2,
  SK_ERR_INVALID_LETTER = 3,
  SK_ERR_INVALID_STATE = 4,
  SK_ERR_SIZE = 5,
  SK_ERR_NOT_SYNCHRONIZING = 6,
  SK_ERR_NOT_EXTENSIBLE = 7,
  SK_ERR_DOMAIN = 8,
  SK_ERR_PRECONDITION = 9,
  SK_ERR_BUDGET = 10,
  SK_ERR_INTERNAL = 99
} sk_status;

typedef struct sk_dfa sk_dfa;
typedef struct sk_chain sk_chain;
typedef struct sk_levels sk_levels;
typedef struct sk_census sk_census;

SK_API const char* sk_version(void);
SK_API const char* sk_status_name(sk_status status);
SK_API const char* sk_last_error(void);
SK_API void sk_string_free(char* s);

/* ---- automata ---------------------------------------------------------- */

/* delta is row-major: delta[q * k + a]. */
SK_API sk_status sk_dfa_new(uint32_t n, uint32_t k, const char* const* letter_names,
                            const uint32_t* delta, sk_dfa** out);
SK_API sk_status sk_dfa_from_json(const char* json, sk_dfa** out);
SK_API sk_status sk_dfa_to_json(const sk_dfa* dfa, char** out);
SK_API sk_status sk_dfa_clone(const sk_dfa* dfa, sk_dfa** out);
SK_API void sk_dfa_free(sk_dfa* dfa);

SK_API uint32_t sk_dfa_states(const sk_dfa* dfa);
SK_API uint32_t sk_dfa_letters(const sk_dfa* dfa);
/* NULL when the index is out of range. Owned by the handle. */
SK_API const char* sk_dfa_letter_name(const sk_dfa* dfa, uint32_t letter);
SK_API sk_status sk_dfa_transition(const sk_dfa* dfa, uint32_t state, uint32_t letter,
                                   uint32_t* out);

typedef struct sk_letter_profile {
  int permutational;
  int involutory;
  int unitary;
  /* Valid when unitary: the letter is (moved_from -> moved_to). */
  uint32_t moved_from;
  uint32_t moved_to;
} sk_letter_profile;

SK_API sk_status sk_dfa_classify_letter(const sk_dfa* dfa, uint32_t letter,
                                        sk_letter_profile* out);
SK_API sk_status sk_dfa_is_eulerian(const sk_dfa* dfa, int* out);

SK_API sk_status sk_image(const sk_dfa* dfa, uint64_t set, uint32_t letter, uint64_t* out);
SK_API sk_status sk_preimage(const sk_dfa* dfa, uint64_t set, uint32_t letter, uint64_t* out);
SK_API sk_status sk_is_extensible(const sk_dfa* dfa, uint64_t set, uint32_t letter, int* out);

/* ---- words --------------------------------------------------------------
 * Words are strings of whitespace-separated letter names; with compact != 0
 * every character is one letter. */

SK_API sk_status sk_apply_word(const sk_dfa* dfa, uint64_t set, const char* word, int compact,
                               uint64_t* out);
SK_API sk_status sk_apply_word_inverse(const sk_dfa* dfa, uint64_t set, const char* word,
                                       int compact, uint64_t* out);

typedef struct sk_factor_report {
  int available; /* 0 when the letters a, b, w0, w1 are not all present */
  int has_aa;
  int has_bb;
  int has_w0b;
  int has_w1b;
  int has_last; /* 0 for the empty word */
  uint32_t last_letter;
} sk_factor_report;

typedef struct sk_word_report {
  int reset;
  uint32_t q0;    /* valid when reset */
  size_t length;
  int straight;   /* evaluated for q0; 0 when not a reset word */
  int greedy;
  sk_factor_report factors;
} sk_word_report;

SK_API sk_status sk_verify_word(const sk_dfa* dfa, const char* word, int compact,
                                sk_word_report* out);
/* Same checks against an explicit q0, for words that are not reset words. */
SK_API sk_status sk_check_word_at(const sk_dfa* dfa, const char* word, int compact, uint32_t q0,
                                  int* straight, int* greedy);
SK_API sk_status sk_involutory_reversal_holds(const sk_dfa* dfa, uint64_t set, const char* word,
                                              int compact, int* out);

SK_API sk_status sk_trace(const sk_dfa* dfa, const char* word, int compact, uint32_t q0,
                          sk_chain** out);
SK_API size_t sk_chain_rows(const sk_chain* chain);
/* extenders: bit a set <=> letter a extends the row's subset (k <= 64). */
SK_API sk_status sk_chain_row(const sk_chain* chain, size_t index, uint64_t* subset,
                              uint64_t* extenders);
SK_API void sk_chain_free(sk_chain* chain);

/* ---- synchronization ---------------------------------------------------- */

typedef enum sk_rt_method { SK_RT_FORWARD = 0, SK_RT_BACKWARD = 1 } sk_rt_method;

typedef struct sk_rt_result {
  uint64_t threshold;
  uint32_t q0;
  char* word; /* release with sk_string_free */
} sk_rt_result;

SK_API sk_status sk_is_synchronizing(const sk_dfa* dfa, int* out);
SK_API sk_status sk_reset_threshold(const sk_dfa* dfa, sk_rt_method method, sk_rt_result* out);
/* grown receives set.word^-1. */
SK_API sk_status sk_shortest_extending_word(const sk_dfa* dfa, uint64_t set, char** word,
                                            uint64_t* length, uint64_t* grown);

SK_API sk_status sk_backward_levels(const sk_dfa* dfa, uint32_t q0, uint64_t max_depth,
                                    sk_levels** out);
SK_API size_t sk_levels_count(const sk_levels* levels);
SK_API uint64_t sk_levels_width(const sk_levels* levels, size_t depth);
/* Returns 1 and stores the depth when Q was reached, 0 otherwise. */
SK_API int sk_levels_depth_to_full(const sk_levels* levels, uint64_t* depth);
SK_API void sk_levels_free(sk_levels* levels);

/* ---- the extremal series and reference automata ------------------------- */

typedef enum sk_series_word_kind { SK_SERIES_W = 0, SK_SERIES_RESET = 1 } sk_series_word_kind;

SK_API sk_status sk_series_am(uint32_t m, sk_dfa** out);
SK_API sk_status sk_series_word(uint32_t m, sk_series_word_kind kind, char** out);
SK_API sk_status sk_series_predicted_rt(uint32_t m, uint64_t* out);
SK_API sk_status sk_series_cerny(uint32_t n, sk_dfa** out);
SK_API sk_status sk_series_cerny_reset_word(uint32_t n, char** out);

/* ---- census -------------------------------------------------------------- */

typedef enum sk_bound_mode {
  SK_BOUND_NONE = 0,
  SK_BOUND_AUTO = 1, /* floor((n^2-3)/2), or floor((n^2-5)/2) when k == 2 */
  SK_BOUND_VALUE = 2
} sk_bound_mode;

typedef struct sk_census_spec {
  uint32_t n;
  uint32_t k;
  int eulerian_only;
  int up_to_iso;
  sk_bound_mode bound_mode;
  int64_t bound;        /* used with SK_BOUND_VALUE */
  uint32_t jobs;        /* 0 or 1: single-threaded */
  double budget;        /* 0: SYNCHROKIT_BUDGET or 1e9 */
  int force;
  int extension_samples; /* 0 off, < 0 all subsets, > 0 sampled */
  uint64_t seed;
} sk_census_spec;

SK_API void sk_census_spec_init(sk_census_spec* spec);
SK_API sk_status sk_census_estimate(const sk_census_spec* spec, double* out);
SK_API sk_status sk_census_run(const sk_census_spec* spec, sk_census** out);
SK_API void sk_census_free(sk_census* census);

typedef struct sk_census_summary {
  uint64_t tables_scanned;
  uint64_t total;
  uint64_t synchronizing;
  int has_max_rt;
  uint64_t max_rt;
  uint64_t witness_automata;
  int has_bound;
  int64_t bound;
  int bound_holds;
  uint64_t bound_violations;
  uint64_t eulerian_synchronizing;
  uint64_t kari_violations;
  uint64_t extension_checks;
  uint64_t extension_violations;
  uint64_t max_extension_length;
} sk_census_summary;

SK_API sk_status sk_census_summary_get(const sk_census* census, sk_census_summary* out);
SK_API size_t sk_census_witness_count(const sk_census* census);
SK_API sk_status sk_census_witness(const sk_census* census, size_t index, sk_dfa** out);
SK_API size_t sk_census_violation_count(const sk_census* census);
SK_API sk_status sk_census_violation(const sk_census* census, size_t index, sk_dfa** out);

SK_API sk_status sk_canonical_form(const sk_dfa* dfa, sk_dfa** out);

#ifdef __cplusplus
}
#endif

#endif /* SYNCHROKIT_SYNCHROKIT_H_ */
