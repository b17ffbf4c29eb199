// Copyright 2026 The dsdlab Authors
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

#ifndef DSDLAB_DSDLAB_H
#define DSDLAB_DSDLAB_H

/* C interface to libdsdlab. Structured values cross the boundary as JSON
 * strings (UTF-8, NUL-terminated). Strings returned through char** out
 * parameters are owned by the caller and released with dsdlab_free_string.
 * On failure a function returns a nonzero status and leaves *out untouched;
 * dsdlab_last_error() then describes the failure on the calling thread. */

#include <stdint.h>

#if defined(_WIN32)
#define DSDLAB_API __declspec(dllexport)
#else
#define DSDLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as the CLI exit codes. */
typedef enum dsdlab_status {
    DSDLAB_OK = 0,
    DSDLAB_ERR_INTERNAL = 1,
    DSDLAB_ERR_INVALID = 2,
    DSDLAB_ERR_CEILING = 3,
    DSDLAB_ERR_INCOMPATIBLE = 4,
    DSDLAB_ERR_NOT_IN_LOGIC = 5,
    DSDLAB_ERR_EMPTY_STATE = 6
} dsdlab_status;

typedef struct dsdlab_session dsdlab_session;

DSDLAB_API const char *dsdlab_version(void);

/* Message and error name (e.g. "ZeroProbability") of the last failure on
 * this thread. Empty strings when the last call succeeded. */
DSDLAB_API const char *dsdlab_last_error(void);
DSDLAB_API const char *dsdlab_last_error_code(void);

DSDLAB_API void dsdlab_free_string(char *s);

/* Enumeration ceiling for q: exhaustive operations accept n <= ceiling.
 * Starts from the defaults and DSDLAB_CEILING_Q<q> environment variables. */
DSDLAB_API dsdlab_status dsdlab_set_ceiling(uint32_t q, uint32_t n);
DSDLAB_API uint32_t dsdlab_get_ceiling(uint32_t q);

/* D_q(n, m) (or D*_q with star != 0) as a decimal string; m < 0 gives the
 * total over all m. Any q >= 1. */
DSDLAB_API dsdlab_status dsdlab_count(uint32_t q, uint32_t n, int32_t m, int star, char **out);

/* Table of rows n = 0..max_n; format is "csv", "json" or "text". */
DSDLAB_API dsdlab_status dsdlab_count_table(uint32_t q, uint32_t max_n, int star, const char *format, char **out);

/* Comma-separated terms of A053601, A270880, A270881, A270882 or A270883. */
DSDLAB_API dsdlab_status dsdlab_oeis(const char *id, uint32_t max_n, char **out);

/* Called once per DSD with its JSON; return 0 to stop early. */
typedef int (*dsdlab_dsd_visitor)(const char *dsd_json, void *user);

/* Enumerates DSDs of GF(q)^n in canonical order. m < 0 means every block
 * count; anchor_json (nullable) is a vector in the subspace encoding. With
 * force != 0 the ceiling is ignored. */
DSDLAB_API dsdlab_status dsdlab_enum_visit(uint32_t q, uint32_t n, int32_t m, const char *anchor_json, int force,
                                           dsdlab_dsd_visitor visit, void *user);
DSDLAB_API dsdlab_status dsdlab_enum_count(uint32_t q, uint32_t n, int32_t m, const char *anchor_json, int force,
                                           uint64_t *out);

/* Lattice operations on DSD JSON. op is one of
 *   join, meet, proto_join, compat, refines, implies, validate, atoms, maximal_above.
 * refines(a, b) asks a <= b (every block of b inside a block of a).
 * implies needs omega_json; atoms takes omega in a; maximal_above takes an
 * atom in a. Boolean results are {"result":true|false}. */
DSDLAB_API dsdlab_status dsdlab_lattice(const char *op, const char *a_json, const char *b_json,
                                        const char *omega_json, char **out);

/* Born map {"eigenvalue":"probability"} of an attribute on a ket. */
DSDLAB_API dsdlab_status dsdlab_born(const char *attribute_json, const char *ket_json, char **out);

/* Every set partition of the space as a candidate attribute (value = block
 * index). Bounded by Bell(n); n <= 10. */
DSDLAB_API dsdlab_status dsdlab_suggest_attributes(const char *space_json, char **out);

/* Density matrix of a ket, {"ket":...}, or of a partition, {"space":[...],
 * "partition":[[labels]...]}. */
DSDLAB_API dsdlab_status dsdlab_density(const char *request_json, char **out);

/* Sessions. A session must not be used from two threads at once. */
DSDLAB_API dsdlab_status dsdlab_session_create(const char *space_json, uint64_t seed, const char *initial_state_json,
                                               dsdlab_session **out);
/* Builds a session from a script or transcript and applies its steps. */
DSDLAB_API dsdlab_status dsdlab_session_from_script(const char *script_json, dsdlab_session **out);
DSDLAB_API void dsdlab_session_destroy(dsdlab_session *session);

/* Registers an attribute (values object or full attribute JSON); *out_id gets
 * the id actually used. id may be NULL or empty. */
DSDLAB_API dsdlab_status dsdlab_session_define(dsdlab_session *session, const char *id, const char *attribute_json,
                                               char **out_id);

/* request: {"attribute": id | values | attribute, "id"?: str, "forced_outcome"?: r}
 * response: {"record":{...}, "born":{...}, "state":[...]} where born is the
 * distribution the outcome was drawn from. */
DSDLAB_API dsdlab_status dsdlab_session_measure(dsdlab_session *session, const char *request_json, char **out);

/* Born map for the current state without measuring. */
DSDLAB_API dsdlab_status dsdlab_session_preview(dsdlab_session *session, const char *attribute_json, char **out);

DSDLAB_API dsdlab_status dsdlab_session_reset(dsdlab_session *session);

/* {"space","seed","initial_state","state","stream_position","attributes","history","density"} */
DSDLAB_API dsdlab_status dsdlab_session_json(dsdlab_session *session, char **out);

/* Replayable transcript. */
DSDLAB_API dsdlab_status dsdlab_session_transcript(dsdlab_session *session, char **out);

#ifdef __cplusplus
}
#endif

#endif
