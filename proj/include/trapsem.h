/* C interface to the trapsem library.
 *
 * All functions return a trapsem_status; results come back through out
 * parameters. Strings returned through char** are owned by the caller and
 * must be released with trapsem_string_free(). Programs are opaque handles
 * released with trapsem_program_free(). On any non-OK status,
 * trapsem_last_error() returns a one-line diagnostic for the calling thread.
 */
#ifndef TRAPSEM_H
#define TRAPSEM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct trapsem_program trapsem_program;

typedef enum trapsem_status {
    TRAPSEM_OK = 0,
    TRAPSEM_ERR_USAGE = 1,  /* bad arguments: unknown names, malformed input */
    TRAPSEM_ERR_PARSE = 2,  /* program text does not conform to the grammar */
    TRAPSEM_ERR_CAP = 3,    /* a configured resource cap was exceeded */
    TRAPSEM_ERR_CHECK = 4,  /* a check evaluated to false (not an error state) */
    TRAPSEM_ERR_INTERNAL = 5
} trapsem_status;

/* Resource caps; pass NULL wherever accepted to use the defaults below. */
typedef struct trapsem_options {
    int max_atoms_graph;   /* default 16: 2^n transition graphs */
    int max_atoms_enum3;   /* default 12: 3^n scans */
    size_t max_lfp_rules;  /* default 100000 */
} trapsem_options;

void trapsem_options_init(trapsem_options* opts);

const char* trapsem_last_error(void);
void trapsem_string_free(char* s);

/* --- programs ----------------------------------------------------------- */

trapsem_status trapsem_parse(const char* text, trapsem_program** out);
void trapsem_program_free(trapsem_program* p);

int trapsem_atom_count(const trapsem_program* p);
int trapsem_rule_count(const trapsem_program* p);
int trapsem_is_uni_rule(const trapsem_program* p);

/* Canonical program text. */
trapsem_status trapsem_pretty(const trapsem_program* p, char** out);
/* Atom table plus canonical rules as JSON. */
trapsem_status trapsem_program_json(const trapsem_program* p, char** out);
/* Per-atom completion disjuncts as JSON. */
trapsem_status trapsem_completion_json(const trapsem_program* p, char** out);
/* Least-fixpoint transformation, as canonical program text. */
trapsem_status trapsem_lfp(const trapsem_program* p, const trapsem_options* opts, char** out);

/* --- dynamics ------------------------------------------------------------ */

/* kind: "stable" | "supported"; format: "dot" | "json". */
trapsem_status trapsem_graph(const trapsem_program* p, const char* kind, const char* format,
                             const trapsem_options* opts, char** out);
/* Strict classes (terminal cycles) as JSON. strict_only != 0 is the only
 * supported mode; the argument documents the CLI flag. */
trapsem_status trapsem_classes(const trapsem_program* p, const char* kind, int strict_only,
                               const trapsem_options* opts, char** out);

/* --- trap spaces and models ---------------------------------------------- */

/* mode: "all" | "minimal" | "u-minimal" (u-minimal requires kind=stable). */
trapsem_status trapsem_trap_spaces(const trapsem_program* p, const char* kind, const char* mode,
                                   const trapsem_options* opts, char** out);
/* states: comma-separated interpretation strings (compact or explicit). */
trapsem_status trapsem_cover(const trapsem_program* p, const char* kind, const char* states,
                             const trapsem_options* opts, char** out);
/* semantics: stable | supported | stable-partial | supported-partial |
 * regular | l-stable; method: direct | trap | oracle. */
trapsem_status trapsem_models(const trapsem_program* p, const char* semantics,
                              const char* method, const trapsem_options* opts, char** out);

/* --- predicates ----------------------------------------------------------- */

/* property: supported-trap-space | stable-trap-space | trap-set | class |
 * strict-class | stable-model | supported-model | stable-partial |
 * supported-partial. `arg` is an interpretation string, or a comma-separated
 * state list for the set-valued properties (which also need `kind`).
 * Returns TRAPSEM_OK with *result=1, or TRAPSEM_ERR_CHECK with *result=0. */
trapsem_status trapsem_check(const trapsem_program* p, const char* property, const char* arg,
                             const char* kind, const trapsem_options* opts, int* result);

/* --- verification --------------------------------------------------------- */

/* corpus_json: JSON array of generator configs. Report is one line per
 * property per program; *failures receives the failed-line count. */
trapsem_status trapsem_verify(const char* corpus_json, char** report, int* failures);

#ifdef __cplusplus
}
#endif

#endif
