#ifndef PTEGKIT_H
#define PTEGKIT_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum PtegStatus {
  PTEG_STATUS_OK = 0,
  PTEG_STATUS_NULL_ARGUMENT = 1,
  PTEG_STATUS_INVALID_UTF8 = 2,
  PTEG_STATUS_PARSE_ERROR = 3,
  PTEG_STATUS_INVALID_MODEL = 4,
  PTEG_STATUS_INVALID_ARGUMENT = 5,
  PTEG_STATUS_INFEASIBLE = 6,
  PTEG_STATUS_PANIC = 7,
} PtegStatus;

/**
 * Opaque handle to a validated, normalized model.
 */
typedef struct PtegModel PtegModel;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *ptegkit_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ptegkit_string_free(char *s);

/**
 * Parses and validates a TOML model, normalizing markings above one.
 *
 * # Safety
 * `toml` must be a nul-terminated string and `out` a valid pointer.
 */
enum PtegStatus ptegkit_model_parse(const char *toml, struct PtegModel **out);

/**
 * Releases a model. Null is ignored.
 *
 * # Safety
 * `m` must come from [`ptegkit_model_parse`] and not have been freed.
 */
void ptegkit_model_free(struct PtegModel *m);

/**
 * Number of transitions after normalization.
 *
 * # Safety
 * `m` must be a live model and `out` a valid pointer.
 */
enum PtegStatus ptegkit_model_transition_count(const struct PtegModel *m, size_t *out);

/**
 * Period set of `d`-periodic trajectories as text, e.g. `[7/2, 4]`,
 * `[0, inf)` or `empty`. `tensor` selects the `dn×dn` computation.
 *
 * # Safety
 * `m` must be a live model and `out` a valid pointer; free the result with
 * [`ptegkit_string_free`].
 */
enum PtegStatus ptegkit_period_set(const struct PtegModel *m, uint32_t d, bool tensor, char **out);

/**
 * Whether `lambda` (a rational string) is an admissible period.
 *
 * # Safety
 * `m` must be a live model, `lambda` nul-terminated and `out` valid.
 */
enum PtegStatus ptegkit_feasible_at(const struct PtegModel *m, const char *lambda, bool *out);

/**
 * Synthesizes the `d`-periodic trajectory for `u = 0` and writes its seed
 * `x(0) … x(d−1)` as JSON: `{"d": .., "lambda": "..", "transitions": [..],
 * "seed": [["p/q", ..], ..]}`. Returns `INFEASIBLE` with a witness circuit
 * in the error message when `lambda` is not a period.
 *
 * # Safety
 * `m` must be a live model, `lambda` nul-terminated and `out` valid; free
 * the result with [`ptegkit_string_free`].
 */
enum PtegStatus ptegkit_synthesize_json(const struct PtegModel *m,
                                        uint32_t d,
                                        const char *lambda,
                                        char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PTEGKIT_H */
