// Copyright 2026 The Timeable Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TIMEABLE_TIMEABLE_H_
#define TIMEABLE_TIMEABLE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(TMB_BUILDING_LIBRARY)
#define TMB_API __attribute__((visibility("default")))
#else
#define TMB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

// Every function returning tmb_status leaves a message retrievable through
// tmb_last_error() on the calling thread when the status is not TMB_OK.
// Strings returned through char** are owned by the caller and released with
// tmb_string_free(). Rationals travel as "p/q" strings in lowest terms.
typedef enum {
  TMB_OK = 0,
  TMB_NEGATIVE = 1,  // well-formed input, negative verdict
  TMB_ERR_PARSE = 2,
  TMB_ERR_INVALID = 3,
  TMB_ERR_BUDGET = 4,
  TMB_ERR_ARGUMENT = 5,
  TMB_ERR_INTERNAL = 6,
} tmb_status;

typedef struct tmb_game tmb_game;

#define TMB_DEFAULT_BUDGET 1000000u

TMB_API const char* tmb_version(void);
TMB_API const char* tmb_last_error(void);
TMB_API void tmb_string_free(char* s);

// Games.
TMB_API tmb_status tmb_game_parse(const char* text, tmb_game** out);
TMB_API void tmb_game_free(tmb_game* game);
TMB_API tmb_status tmb_game_serialize(const tmb_game* game, char** out);
TMB_API tmb_status tmb_game_digest(const tmb_game* game, char** out);
TMB_API int tmb_game_num_nodes(const tmb_game* game);
TMB_API int tmb_game_num_infosets(const tmb_game* game);
// Validation report document.
TMB_API tmb_status tmb_game_validate(const tmb_game* game, char** report);

// Exact timeability. TMB_NEGATIVE when the contracted graph has a cycle.
// The report holds either the timing or the cycle of infoset names.
TMB_API tmb_status tmb_check(const tmb_game* game, char** report);
TMB_API tmb_status tmb_exact_timing(const tmb_game* game, char** timing);
// Layout DOT when exactly timeable, otherwise the contracted graph with the
// cycle highlighted.
TMB_API tmb_status tmb_dot(const tmb_game* game, char** dot);

// Randomized timing documents.
TMB_API tmb_status tmb_window_timing(const tmb_game* game, int n,
                                     char** timing);
TMB_API tmb_status tmb_delay_timing(const tmb_game* game, const char* eps,
                                    char** timing);
TMB_API tmb_status tmb_chain_timing(const tmb_game* game, const char* chain,
                                    uint64_t budget, char** timing);
// Chain from the base construction with size n and gap k, followed by one
// recursive step per entry of spreads (decimal integers).
TMB_API tmb_status tmb_indist_chain(int n, int k, const char* const* spreads,
                                    size_t num_spreads, uint64_t budget,
                                    char** chain);
// eps may be NULL. TMB_NEGATIVE when the achieved value exceeds eps.
TMB_API tmb_status tmb_verify_timing(const tmb_game* game, const char* timing,
                                     const char* eps, uint64_t budget,
                                     char** report);
// source is a timing document or, when is_chain is nonzero, a chain document.
TMB_API tmb_status tmb_estimate_timing(const tmb_game* game,
                                       const char* source, int is_chain,
                                       uint64_t seed, uint64_t samples,
                                       char** report);

// Distance between two distribution documents.
TMB_API tmb_status tmb_tv(const char* dist_a, const char* dist_b,
                          char** value);
// Largest distance between m-subsets of a chain's coordinates.
TMB_API tmb_status tmb_subset_tv(const char* chain, int m, char** report);

// Timed game document. The result carries a "provenance" member that game
// parsers ignore.
TMB_API tmb_status tmb_augment(const tmb_game* game, const char* timing,
                               uint64_t budget, char** augmented);
// profile may be NULL for uniform play by the other players. TMB_NEGATIVE
// when the gain bound fails.
TMB_API tmb_status tmb_advantage(const tmb_game* game, const char* timing,
                                 int player, const char* profile,
                                 uint64_t budget, char** report);

// kind: figure1 (params: variant 0..2), guessing (m, k), agenda-ar (r),
// gamma-r (r), perception (c), choiceless (digits of the sequence).
// text receives a one-line rendering where one exists, otherwise NULL.
TMB_API tmb_status tmb_family(const char* kind, const int* params,
                              size_t num_params, char** document,
                              char** text);
TMB_API tmb_status tmb_expand_choiceless(const char* choiceless,
                                         uint64_t limit, char** game);

// TMB_NEGATIVE when the verdict is negative.
TMB_API tmb_status tmb_verify_agenda(const char* agenda, const char* timing,
                                     const char* eps, const char* lambda,
                                     char** report);
TMB_API tmb_status tmb_shift_agenda(const char* agenda, const char* timing,
                                    const char* lambda, const char* n,
                                    char** shifted);
TMB_API tmb_status tmb_gap_ratios(const char* agenda, const char* timing,
                                  int c, char** report);
TMB_API tmb_status tmb_symmetrize(const char* choiceless, const char* timing,
                                  uint64_t limit, char** symmetric,
                                  char** report);

// Clock bounds are "scale:p/q" or "powmax:k".
TMB_API tmb_status tmb_lu_time(const tmb_game* game, const char* lower,
                               const char* upper, char** timing);
// TMB_NEGATIVE on a structural violation or when the achieved value exceeds
// eps (NULL means 0).
TMB_API tmb_status tmb_verify_lu(const tmb_game* game, const char* timing,
                                 const char* lower, const char* upper,
                                 const char* eps, uint64_t budget,
                                 char** report);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // TIMEABLE_TIMEABLE_H_
