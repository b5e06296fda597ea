/*
 * Copyright 2026 the paritylab authors
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
 * C surface of the paritylab shared library. Objects live behind opaque
 * handles; every operation returns a pl_status and reports details through
 * pl_last_error() (thread-local). Structured results come back as JSON in
 * heap strings released with pl_string_free().
 *
 * Status codes mirror the CLI exit codes: 0 ok, 2 input error, 3 internal
 * consistency violation, 4 resource cap exceeded.
 */

#ifndef PARITYLAB_PARITYLAB_H
#define PARITYLAB_PARITYLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pl_status {
    PL_OK = 0,
    PL_ERR_INPUT = 2,
    PL_ERR_INTERNAL = 3,
    PL_ERR_CAP = 4
} pl_status;

typedef struct pl_game pl_game;   /* parity game (edge priorities) */
typedef struct pl_aut pl_aut;     /* nondeterministic parity tree automaton */
typedef struct pl_tree pl_tree;   /* regular tree presentation */
typedef struct pl_guide pl_guide; /* guiding function bound to (A, B) */

/* Message of the last failing call on this thread; never NULL. */
const char* pl_last_error(void);

void pl_string_free(char* s);
void pl_game_free(pl_game* g);
void pl_aut_free(pl_aut* a);
void pl_tree_free(pl_tree* t);
void pl_guide_free(pl_guide* g);

/* ---- objects and their file formats -------------------------------- */

pl_status pl_game_parse(const char* text, pl_game** out);
pl_status pl_game_serialize(const pl_game* g, char** out);
pl_status pl_aut_parse(const char* json_text, int auto_complete, pl_aut** out);
/* provenance_json may be NULL; when given it is embedded verbatim. */
pl_status pl_aut_serialize(const pl_aut* a, const char* provenance_json, char** out);
pl_status pl_tree_parse(const char* json_text, pl_tree** out);
pl_status pl_tree_serialize(const pl_tree* t, char** out);
pl_status pl_guide_parse(const char* json_text, const pl_aut* a, const pl_aut* b,
                         pl_guide** out);
pl_status pl_guide_serialize(const pl_guide* g, char** out);

/* ---- parity games --------------------------------------------------- */

/* solver: "zielonka", "spm" or "both". JSON: winner, regions, strategies;
 * "both" diffs the partitions and fails with PL_ERR_INTERNAL on mismatch
 * (the report is still produced). */
pl_status pl_solve(const pl_game* g, const char* solver, char** report_json);

/* Transduction game over g with output index [j_lo, j_hi] and bound n.
 * reset_reading: "pre" or "post". Winner and configuration count in the
 * report; optional expansion game and its vertex-description sidecar. */
pl_status pl_reg_solve(const pl_game* g, uint32_t j_lo, uint32_t j_hi, uint32_t n,
                       const char* reset_reading, uint64_t state_cap, char** report_json,
                       pl_game** expansion_out, char** sidecar_out);

/* Classic register game; k = 0 picks ceil(log2 |V|) + 1. */
pl_status pl_lehtinen_solve(const pl_game* g, uint32_t k, uint64_t state_cap,
                            char** report_json);

/* ---- tree automata --------------------------------------------------- */

pl_status pl_membership(const pl_aut* a, const pl_tree* t, int* accepted);
pl_status pl_is_empty(const pl_aut* a, int* empty, pl_tree** witness_out);
pl_status pl_acceptance_game(const pl_aut* a, const pl_tree* t, pl_game** out);

/* ---- index synthesis -------------------------------------------------- */

pl_status pl_compose(const pl_aut* a, uint32_t j_lo, uint32_t j_hi, uint32_t n,
                     const char* reset_reading, uint64_t state_cap, pl_aut** out);

pl_status pl_probe(const pl_aut* a, uint32_t j_lo, uint32_t j_hi, const pl_tree* const* trees,
                   size_t n_trees, uint32_t n_max, const char* reset_reading,
                   uint64_t state_cap, unsigned threads, char** report_json);

/* ---- guidance ---------------------------------------------------------- */

/* Applies the guide to B's accepting run on the tree; the report carries
 * the guided run and its acceptance verdict. */
pl_status pl_guide_apply(const pl_aut* a, const pl_aut* b, const pl_guide* g,
                         const pl_tree* t, char** report_json);

pl_status pl_guide_preserve(const pl_aut* a, const pl_aut* b, const pl_guide* g,
                            const pl_tree* const* trees, size_t n_trees, unsigned threads,
                            char** report_json);

/* Segment check between B's accepting run on the tree and its guided image;
 * violations include the access word, segment word and both maxima. */
pl_status pl_guide_pump(const pl_aut* a, const pl_aut* b, const pl_guide* g,
                        const pl_tree* t, char** report_json);

/* ---- corpus generation -------------------------------------------------- */

pl_status pl_gen_game(uint64_t seed, uint32_t size, uint32_t pri_lo, uint32_t pri_hi,
                      uint32_t out_degree, pl_game** out);
/* parity: 0 even, 1 odd */
pl_status pl_gen_lasso(uint64_t seed, uint32_t size, uint32_t pri_lo, uint32_t pri_hi,
                       int parity, pl_game** out);
pl_status pl_gen_automaton(uint64_t seed, uint32_t size, uint32_t pri_lo, uint32_t pri_hi,
                           uint32_t out_degree, pl_aut** out);
pl_status pl_gen_tree(uint64_t seed, uint32_t size, pl_tree** out);
/* Guided pair; corpus trees come back as a JSON array of tree documents. */
pl_status pl_gen_pair(uint64_t seed, uint32_t size, uint32_t pri_lo, uint32_t pri_hi,
                      pl_aut** a_out, pl_aut** b_out, char** guide_json_out,
                      char** corpus_json_out);

#ifdef __cplusplus
}
#endif

#endif
