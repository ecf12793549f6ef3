#ifndef IRREDUNDANT_H
#define IRREDUNDANT_H

#pragma once

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum IrrStatus {
  IRR_STATUS_OK = 0,
  IRR_STATUS_NULL_POINTER = 1,
  IRR_STATUS_EMPTY_INTERVAL = 2,
  IRR_STATUS_OUT_OF_RANGE = 3,
  IRR_STATUS_PARSE_ERROR = 4,
  IRR_STATUS_INVALID_UTF8 = 5,
  IRR_STATUS_INCONSISTENT = 6,
  IRR_STATUS_INDEX_OUT_OF_BOUNDS = 7,
  IRR_STATUS_PANIC = 8,
} IrrStatus;

/**
 * Opaque multiset of intervals on `[0, n)`.
 */
typedef struct IrrFamily IrrFamily;

/**
 * Opaque solver output.
 */
typedef struct IrrSolution IrrSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static, NUL-terminated description of a status code.
 */
const char *irr_status_message(enum IrrStatus status);

/**
 * New empty family on `[0, n)`.
 */
struct IrrFamily *irr_family_new(size_t n);

/**
 * `m` random intervals on `[0, n)`; null when `n == 0`.
 */
struct IrrFamily *irr_family_random(size_t m, size_t n, uint64_t seed);

/**
 * Parses instance text (`n` on the first line, then `lo hi` per line).
 *
 * # Safety
 * `text` must be null or a valid NUL-terminated string; `out` must be null
 * or writable.
 */
enum IrrStatus irr_family_parse(const char *text, struct IrrFamily **out);

/**
 * Adds one occurrence of `[lo, hi)`.
 *
 * # Safety
 * `family` must be null or a live handle from this library.
 */
enum IrrStatus irr_family_push(struct IrrFamily *family, size_t lo, size_t hi);

/**
 * Ground-set size; 0 for a null handle.
 *
 * # Safety
 * `family` must be null or a live handle.
 */
size_t irr_family_n(const struct IrrFamily *family);

/**
 * Number of members with multiplicity; 0 for a null handle.
 *
 * # Safety
 * `family` must be null or a live handle.
 */
size_t irr_family_len(const struct IrrFamily *family);

/**
 * Member `index` in canonical order (right endpoint, then left).
 *
 * # Safety
 * `family` must be null or a live handle; `lo` and `hi` null or writable.
 */
enum IrrStatus irr_family_get(const struct IrrFamily *family, size_t index, size_t *lo, size_t *hi);

/**
 * New handle holding the left-to-right reflection of `family`.
 *
 * # Safety
 * `family` must be null or a live handle.
 */
struct IrrFamily *irr_family_mirror(const struct IrrFamily *family);

/**
 * # Safety
 * `family` must be null or a handle not yet freed.
 */
void irr_family_free(struct IrrFamily *family);

/**
 * Decides irredundancy by scanning every window. Quadratic in `n` windows.
 *
 * # Safety
 * `family` must be null or a live handle; `out` null or writable.
 */
enum IrrStatus irr_is_irredundant(const struct IrrFamily *family, bool *out);

/**
 * Runs the reduction and the tree extraction.
 *
 * # Safety
 * `family` must be null or a live handle; `out` null or writable.
 */
enum IrrStatus irr_solve(const struct IrrFamily *family, struct IrrSolution **out);

/**
 * Size of the minimum generating family.
 *
 * # Safety
 * `solution` must be null or a live handle.
 */
size_t irr_solution_generator_count(const struct IrrSolution *solution);

/**
 * Generator `index` in canonical order.
 *
 * # Safety
 * `solution` must be null or a live handle; `lo` and `hi` null or writable.
 */
enum IrrStatus irr_solution_generator(const struct IrrSolution *solution,
                                      size_t index,
                                      size_t *lo,
                                      size_t *hi);

/**
 * Number of reduced minimal bad intervals.
 *
 * # Safety
 * `solution` must be null or a live handle.
 */
size_t irr_solution_reduced_count(const struct IrrSolution *solution);

/**
 * Reduced interval `index` in canonical order.
 *
 * # Safety
 * `solution` must be null or a live handle; `lo` and `hi` null or writable.
 */
enum IrrStatus irr_solution_reduced(const struct IrrSolution *solution,
                                    size_t index,
                                    size_t *lo,
                                    size_t *hi);

/**
 * Size of the maximum irredundant subfamily.
 *
 * # Safety
 * `solution` must be null or a live handle.
 */
size_t irr_solution_irredundant_count(const struct IrrSolution *solution);

/**
 * Entry `index` of the irredundant sequence: the node point `x` and its
 * interval, in postorder.
 *
 * # Safety
 * `solution` must be null or a live handle; `x`, `lo` and `hi` null or
 * writable.
 */
enum IrrStatus irr_solution_irredundant(const struct IrrSolution *solution,
                                        size_t index,
                                        size_t *x,
                                        size_t *lo,
                                        size_t *hi);

/**
 * The CLI result block for this solution, headed by `source`. Release the
 * string with [`irr_string_free`]. Null on bad arguments.
 *
 * # Safety
 * `solution` must be null or a live handle; `source` null or a valid
 * NUL-terminated string.
 */
char *irr_solution_format(const struct IrrSolution *solution, const char *source);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void irr_string_free(char *s);

/**
 * # Safety
 * `solution` must be null or a handle not yet freed.
 */
void irr_solution_free(struct IrrSolution *solution);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IRREDUNDANT_H */
