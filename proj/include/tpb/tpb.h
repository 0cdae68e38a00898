#ifndef TPB_H
#define TPB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Result codes, aligned with the command line exit contract:
 *   TPB_OK            success; for the membership test, ACCEPTED
 *   TPB_INVALID       well-formed data failing a semantic check, or REJECTED
 *   TPB_INDETERMINATE membership test inconclusive
 *   TPB_INPUT         malformed input (bad JSON, schema or type violations)
 *   TPB_INTERNAL      a bug in the library
 */
typedef enum tpb_code {
  TPB_OK = 0,
  TPB_INVALID = 1,
  TPB_INDETERMINATE = 2,
  TPB_INPUT = 3,
  TPB_INTERNAL = 4
} tpb_code;

/* Opaque handles. Create with the matching parse function, release with the
 * matching free function. Handles are immutable and safe to share across
 * threads once created. */
typedef struct tpb_fan tpb_fan;
typedef struct tpb_plmap tpb_plmap;
typedef struct tpb_psi tpb_psi;
typedef struct tpb_candidate tpb_candidate;

/* Every fallible function reports through its tpb_code and, when err is not
 * NULL, places a message in *err on failure. Strings returned through out
 * parameters are owned by the caller; release them with tpb_string_free.
 * Out parameters are written only on the codes documented for them. */

const char* tpb_version(void);

void tpb_string_free(char* s);

/* Format reference text. name may be "" for all formats. */
tpb_code tpb_schema(const char* name, char** out, char** err);

/* source labels the input in error messages (usually the file name). */
tpb_code tpb_fan_parse(const char* json, const char* source, tpb_fan** out, char** err);
void tpb_fan_free(tpb_fan* f);
tpb_code tpb_fan_emit(const tpb_fan* f, char** out, char** err);
/* 1 or 0; no error path. */
int tpb_fan_complete(const tpb_fan* f);
int tpb_fan_simplicial(const tpb_fan* f);

tpb_code tpb_plmap_parse(const char* json, const char* source, const tpb_fan* f,
                         tpb_plmap** out, char** err);
void tpb_plmap_free(tpb_plmap* m);
tpb_code tpb_plmap_emit(const tpb_plmap* m, char** out, char** err);
/* TPB_OK and *report = "" when the map is valid; TPB_INVALID with one
 * violation per line otherwise. */
tpb_code tpb_plmap_validate(const tpb_fan* f, const tpb_plmap* m, char** report, char** err);

/* Piecewise polynomial JSON of the k-th elementary generator class,
 * 1 <= k <= rank. */
tpb_code tpb_chern(const tpb_fan* f, const tpb_plmap* m, size_t generator, char** out,
                   char** err);

tpb_code tpb_psi_parse(const char* json, const char* source, const tpb_fan* f, tpb_psi** out,
                       char** err);
void tpb_psi_free(tpb_psi* p);
tpb_code tpb_psi_emit(const tpb_fan* f, const tpb_psi* p, char** out, char** err);
/* JSON array, one entry per ray: {"ray": i, "weights": [...], "type": [...]}. */
tpb_code tpb_psi_ray_report(const tpb_fan* f, const tpb_psi* p, char** out, char** err);
/* Degree warnings, one per line; "" when there are none. */
tpb_code tpb_psi_warnings(const tpb_fan* f, const tpb_psi* p, char** out, char** err);

tpb_code tpb_candidate_parse(const char* json, const char* source, const tpb_fan* f,
                             tpb_candidate** out, char** err);
void tpb_candidate_free(tpb_candidate* c);
tpb_code tpb_candidate_emit(const tpb_candidate* c, char** out, char** err);

/* Returns TPB_OK, TPB_INVALID or TPB_INDETERMINATE by verdict status and
 * writes the verdict JSON on all three. witnesses = 0 strips the witness
 * objects from the output. parallel is the worker count (0 and 1 are
 * serial); the result does not depend on it. */
tpb_code tpb_moduli_check(const tpb_fan* f, const tpb_psi* p, const tpb_candidate* c,
                          size_t parallel, int witnesses, char** verdict_json, char** err);

/* JSON array of accepted candidates in enumeration order. Errors with
 * TPB_INPUT when the tuple count exceeds limit. */
tpb_code tpb_moduli_census(const tpb_fan* f, const tpb_psi* p, size_t limit, size_t parallel,
                           char** out, char** err);

/* One-parameter subgroups, JSON in and out. */
tpb_code tpb_onepar_equivalent(const char* a_json, const char* a_source, const char* b_json,
                               const char* b_source, int* out, char** err);
/* Weighted flag JSON of the subgroup's parabolic flag. */
tpb_code tpb_onepar_flag(const char* json, const char* source, char** out, char** err);

/* Filtration JSON -> weighted flag JSON, and back. Export requires integer
 * weights. */
tpb_code tpb_klyachko_import(const char* json, const char* source, char** out, char** err);
tpb_code tpb_klyachko_export(const char* json, const char* source, char** out, char** err);

#ifdef __cplusplus
}
#endif

#endif
