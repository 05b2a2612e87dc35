#ifndef CLSTAB_H
#define CLSTAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ClstabNormalization {
  CLSTAB_NORMALIZATION_DIVIDED = 0,
  CLSTAB_NORMALIZATION_PLAIN = 1,
} ClstabNormalization;

typedef enum ClstabStatus {
  CLSTAB_STATUS_OK = 0,
  CLSTAB_STATUS_NULL_POINTER = 1,
  CLSTAB_STATUS_INVALID_UTF8 = 2,
  CLSTAB_STATUS_INVALID_INPUT = 3,
  CLSTAB_STATUS_OUT_OF_RANGE = 4,
  CLSTAB_STATUS_PANIC = 5,
} ClstabStatus;

/**
 * A partition overlaid pattern.
 */
typedef struct ClstabPop ClstabPop;

/**
 * An ordered list of POPs.
 */
typedef struct ClstabPopList ClstabPopList;

/**
 * A vector in one sector of the level-one Fock space.
 */
typedef struct ClstabVector ClstabVector;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread. Valid until the next
 * failing call; do not free.
 */
const char *clstab_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void clstab_string_free(char *s);

/**
 * Parses a POP from its JSON form, e.g.
 * `{"rows":[[1],[2,0]],"overlay":{"1,1":[1]}}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum ClstabStatus clstab_pop_parse(const char *json, struct ClstabPop **out);

/**
 * # Safety
 * `pop` must be null or a handle from this library, not yet freed.
 */
void clstab_pop_free(struct ClstabPop *pop);

/**
 * # Safety
 * `pop` must be a live handle and `out` writable.
 */
enum ClstabStatus clstab_pop_to_json(const struct ClstabPop *pop, char **out);

/**
 * # Safety
 * `pop` must be a live handle and `out` writable.
 */
enum ClstabStatus clstab_pop_rank(const struct ClstabPop *pop, size_t *out);

/**
 * # Safety
 * `pop` must be a live handle and `out` writable.
 */
enum ClstabStatus clstab_pop_depth(const struct ClstabPop *pop, int64_t *out);

/**
 * # Safety
 * `pop` must be a live handle and `out` writable.
 */
enum ClstabStatus clstab_pop_is_stable(const struct ClstabPop *pop, bool *out);

/**
 * The shifted POP `P^k` as a new handle.
 *
 * # Safety
 * `pop` must be a live handle and `out` writable.
 */
enum ClstabStatus clstab_pop_shift(const struct ClstabPop *pop, int64_t k, struct ClstabPop **out);

/**
 * All POPs with bounding sequence `lambda[0..len]`. A negative `depth`
 * means no depth filter.
 *
 * # Safety
 * `lambda` must point at `len` integers and `out` be writable.
 */
enum ClstabStatus clstab_pops_enumerate(const int64_t *lambda,
                                        size_t len,
                                        int64_t depth,
                                        struct ClstabPopList **out);

/**
 * # Safety
 * `list` must be a live handle and `out` writable.
 */
enum ClstabStatus clstab_pop_list_len(const struct ClstabPopList *list, size_t *out);

/**
 * A copy of entry `index`; the list keeps its own.
 *
 * # Safety
 * `list` must be a live handle and `out` writable.
 */
enum ClstabStatus clstab_pop_list_get(const struct ClstabPopList *list,
                                      size_t index,
                                      struct ClstabPop **out);

/**
 * # Safety
 * `list` must be null or a handle from this library, not yet freed.
 */
void clstab_pop_list_free(struct ClstabPopList *list);

/**
 * The vector `v_{P^k}` attached to a POP.
 *
 * # Safety
 * `pop` must be a live handle and `out` writable.
 */
enum ClstabStatus clstab_cl_vector(const struct ClstabPop *pop,
                                   int64_t k,
                                   enum ClstabNormalization norm,
                                   struct ClstabVector **out);

/**
 * Applies the translation by the root-lattice element with simple-root
 * coordinates `coords[0..len]`; `len` must equal the rank.
 *
 * # Safety
 * `v` must be a live handle, `coords` point at `len` integers and `out` be
 * writable.
 */
enum ClstabStatus clstab_vector_translate(const struct ClstabVector *v,
                                          const int64_t *coords,
                                          size_t len,
                                          struct ClstabVector **out);

/**
 * # Safety
 * `a` and `b` must be live handles and `out` writable.
 */
enum ClstabStatus clstab_vector_equal(const struct ClstabVector *a,
                                      const struct ClstabVector *b,
                                      bool *out);

/**
 * # Safety
 * `v` must be a live handle and `out` writable.
 */
enum ClstabStatus clstab_vector_is_zero(const struct ClstabVector *v, bool *out);

/**
 * One line per term, as in `clstab dump vector`.
 *
 * # Safety
 * `v` must be a live handle and `out` writable.
 */
enum ClstabStatus clstab_vector_to_string(const struct ClstabVector *v, char **out);

/**
 * # Safety
 * `v` must be null or a handle from this library, not yet freed.
 */
void clstab_vector_free(struct ClstabVector *v);

/**
 * Runs a command-line invocation (without the program name) and returns
 * its report lines joined by newlines. `exit_code` receives 0 when every
 * check passed and 1 otherwise. File options such as `--out` are ignored.
 *
 * # Safety
 * `argv` must point at `argc` NUL-terminated strings; `out` and
 * `exit_code` must be writable.
 */
enum ClstabStatus clstab_run(const char *const *argv, size_t argc, char **out, int32_t *exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLSTAB_H */
