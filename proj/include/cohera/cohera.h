/* cohera: exact information algebra of coherent gamble sets — public C API.
 *
 * Handles are opaque; every function returns a cohera_status (COHERA_OK on
 * success) and reports results through out-parameters. Strings returned via
 * char** out-parameters are heap-allocated; release them with
 * cohera_string_free. cohera_last_error() returns a thread-local message for
 * the most recent failure on the calling thread (borrowed pointer, valid
 * until the next failing call on that thread).
 */
#ifndef COHERA_H
#define COHERA_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cohera_status {
  COHERA_OK = 0,
  COHERA_E_DUPLICATE_WORLD = 1,
  COHERA_E_EMPTY_SPACE = 2,
  COHERA_E_SPACE_MISMATCH = 3,
  COHERA_E_DIMENSION_MISMATCH = 4,
  COHERA_E_ZERO_QUERIED_HERE = 5,
  COHERA_E_ZERO_GAMBLE_QUERY = 6,
  COHERA_E_TOP_NOT_COHERENT = 7,
  COHERA_E_EMPTY_EVENT = 8,
  COHERA_E_TOO_FEW_PARTITIONS = 9,
  COHERA_E_LIMIT_EXCEEDED = 10,
  COHERA_E_UNKNOWN_QUESTION = 11,
  COHERA_E_UNKNOWN_NAME = 12,
  COHERA_E_UNSUPPORTED = 13,
  COHERA_E_PARSE = 14,
  COHERA_E_VALIDATION = 15,
  COHERA_E_NOT_IN_TARGET = 16,
  COHERA_E_NULL_ARGUMENT = 17,
  COHERA_E_INTERNAL = 100
} cohera_status;

typedef struct cohera_model cohera_model;
typedef struct cohera_set cohera_set;

/* --- library plumbing --- */

const char* cohera_version(void);
const char* cohera_status_name(cohera_status st);
const char* cohera_last_error(void);
void cohera_string_free(char* s);

/* --- models --- */

/* Loads and validates a JSON model file; the question list is join-closed. */
cohera_status cohera_model_load(const char* path, cohera_model** out);
cohera_status cohera_model_parse(const char* json_text, cohera_model** out);
void cohera_model_free(cohera_model* m);

/* 16-hex-digit digest of the canonical serialization. */
cohera_status cohera_model_digest(const cohera_model* m, char** out);
/* Canonical JSON (every lattice question listed; reloading adds nothing). */
cohera_status cohera_model_serialize(const cohera_model* m, char** out);
/* Newline-separated names of questions synthesized by join closure ("" when
 * the supplied family was already closed). */
cohera_status cohera_model_closure_additions(const cohera_model* m, char** out);
cohera_status cohera_model_world_count(const cohera_model* m, int* out);

/* --- sets of gambles --- */

/* Resolves a named set from the model. */
cohera_status cohera_model_set(const cohera_model* m, const char* name,
                               cohera_set** out);
/* Builds the closure of ad-hoc assertions with no model: each string is one
 * gamble as comma-separated rationals; all must share a dimension n >= 1, and
 * the space is synthesized with n placeholder worlds. */
cohera_status cohera_set_from_assertions(const char* const* gamble_csvs,
                                         int count, cohera_set** out);
void cohera_set_free(cohera_set* s);

/* Deterministic one-line description of the representation. */
cohera_status cohera_set_describe(const cohera_set* s, char** out);
/* 1 when the set is a coherent set of gambles, 0 when it is the contradiction
 * (the full gamble space). */
cohera_status cohera_set_is_coherent(const cohera_set* s, int* out);
/* Membership of a gamble (comma-separated rationals). The zero gamble is not
 * a valid query. */
cohera_status cohera_set_member(const cohera_set* s, const char* gamble_csv,
                                int* out);
/* Combination: closure of the union. COHERA_E_UNSUPPORTED when the pair has
 * no exact closed form (never an approximate answer). */
cohera_status cohera_set_combine(const cohera_set* a, const cohera_set* b,
                                 cohera_set** out);
/* Extraction to a named question of the model. */
cohera_status cohera_set_extract(const cohera_set* s, const cohera_model* m,
                                 const char* question, cohera_set** out);
/* Information order (set inclusion) and semantic equality. */
cohera_status cohera_set_leq(const cohera_set* a, const cohera_set* b, int* out);
cohera_status cohera_set_equal(const cohera_set* a, const cohera_set* b,
                               int* out);
/* Least question of the model's lattice (canonical order) whose extraction
 * leaves the set unchanged. *found is 0 when no listed question qualifies;
 * *out_name is then "". */
cohera_status cohera_set_support(const cohera_set* s, const cohera_model* m,
                                 char** out_name, int* found);

/* --- events and questions --- */

/* Saturation of a named event by a named question: the union of the question
 * blocks that meet the event. Returns the world names, comma-separated. */
cohera_status cohera_saturate(const cohera_model* m, const char* event_name,
                              const char* question, char** out_worlds);
/* Independence of two or more named questions (blocks cross-intersect). */
cohera_status cohera_independent(const cohera_model* m,
                                 const char* const* questions, int count,
                                 int* out);
/* Conditional independence given a further question. */
cohera_status cohera_cond_independent(const cohera_model* m,
                                      const char* const* questions, int count,
                                      const char* given, int* out);
/* The set-of-gambles embedding of a named non-empty event. */
cohera_status cohera_lift(const cohera_model* m, const char* event_name,
                          cohera_set** out);

/* --- maximal atoms (lexicographic family) --- */

/* Lists all |Omega|! lexicographic atoms, one per line, as world orders like
 * "b>a>c". |Omega| <= 8. */
cohera_status cohera_atoms(const cohera_model* m, char** out_listing,
                           long long* out_count);
/* Lists the atoms of the family that contain the named set (same line format),
 * preceded by nothing; *out_count is the number of lines. */
cohera_status cohera_at_of(const cohera_model* m, const char* set_name,
                           char** out_listing, long long* out_count);

/* --- verification runner --- */

/* Runs the named suites ("all" or a comma-separated subset of: axioms,
 * separoid, saturation, set-extraction, event-hom, atom-separoid,
 * atom-set-algebra, coherence) for space sizes 1..size_limit. m may be NULL;
 * when given, the axioms suite runs on that model alone. *out_report_json is
 * the full run report; *out_exit_status is 0 (clean) or 1 (asserted failure).
 * Size limits beyond a suite's cap return COHERA_E_LIMIT_EXCEEDED. */
cohera_status cohera_verify(const cohera_model* m, const char* suites_csv,
                            int size_limit, unsigned long long seed,
                            int n_samples, char** out_report_json,
                            int* out_exit_status);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* COHERA_H */
