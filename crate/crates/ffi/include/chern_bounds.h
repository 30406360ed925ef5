/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef CHERN_BOUNDS_H
#define CHERN_BOUNDS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which result was used to establish a bound.
 */
typedef enum CbRule {
  CB_RULE_IMMERSION_TRANSVERSALITY = 0,
  CB_RULE_INDEPENDENT_TRANSVERSALITY = 1,
  CB_RULE_ORIENTABLE_IMMERSION4K_PLUS2 = 2,
  CB_RULE_VANISHING_DUAL_PONTRYAGIN = 3,
  CB_RULE_ORIENTABLE_INDEPENDENT4K_PLUS2 = 4,
  CB_RULE_VANISHING_TOP_PONTRYAGIN = 5,
  CB_RULE_PARALLELIZABLE = 6,
  CB_RULE_ORIENTABLE_THREE_MANIFOLD = 7,
  CB_RULE_COMPLEMENT_CHERN_CLASS = 8,
  CB_RULE_KERNEL_CHERN_CLASS = 9,
} CbRule;

/**
 * Status codes. The values 2 to 4 agree with the CLI exit codes.
 */
typedef enum CbStatus {
  CB_STATUS_OK = 0,
  CB_STATUS_INVALID_ARGUMENT = 1,
  CB_STATUS_PARSE = 2,
  CB_STATUS_CATALOG = 3,
  CB_STATUS_INTERNAL = 4,
  CB_STATUS_NULL_POINTER = 5,
  CB_STATUS_INVALID_UTF8 = 6,
  CB_STATUS_PANIC = 7,
} CbStatus;

/**
 * Opaque product manifold.
 */
typedef struct CbManifold CbManifold;

/**
 * Opaque analysis result.
 */
typedef struct CbReport CbReport;

/**
 * Plain-data summary of a report.
 */
typedef struct CbBounds {
  uint32_t dimension;
  bool orientable;
  bool parallelizable;
  uint32_t tri_min_n;
  enum CbRule tri_min_rule;
  uint32_t tri_exist_n;
  enum CbRule tri_exist_rule;
  bool tri_optimal;
  uint32_t indep_max_n;
  enum CbRule indep_max_rule;
  uint32_t indep_exist_n;
  enum CbRule indep_exist_rule;
  bool indep_optimal;
} CbBounds;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses `expression` (NUL-terminated UTF-8) and stores a new manifold in
 * `*out`. `*out` is left untouched on failure.
 *
 * # Safety
 * `expression` must be NULL or a valid C string; `out` must be NULL or
 * writable.
 */
enum CbStatus cb_manifold_parse(const char *expression, struct CbManifold **out);

/**
 * Releases a manifold. NULL is ignored.
 *
 * # Safety
 * `manifold` must be NULL or a handle from `cb_manifold_parse` not yet freed.
 */
void cb_manifold_free(struct CbManifold *manifold);

/**
 * Real dimension of `manifold`, or 0 for NULL.
 *
 * # Safety
 * `manifold` must be NULL or a live handle.
 */
uint32_t cb_manifold_dimension(const struct CbManifold *manifold);

/**
 * Writes `c(C (x) TM)` as text, e.g. `1 - 3*a1^2`, into `*out`.
 *
 * # Safety
 * `manifold` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum CbStatus cb_manifold_chern_class(const struct CbManifold *manifold, char **out);

/**
 * Writes the JSON document printed by `chern-bounds chern --format json`.
 *
 * # Safety
 * `manifold` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum CbStatus cb_manifold_chern_json(const struct CbManifold *manifold, char **out);

/**
 * Runs the full analysis and stores a new report in `*out`.
 *
 * # Safety
 * `manifold` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum CbStatus cb_analyze(const struct CbManifold *manifold, struct CbReport **out);

/**
 * Releases a report. NULL is ignored.
 *
 * # Safety
 * `report` must be NULL or a handle from `cb_analyze` not yet freed.
 */
void cb_report_free(struct CbReport *report);

/**
 * Copies the numeric part of `report` into `*out`.
 *
 * # Safety
 * `report` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum CbStatus cb_report_bounds(const struct CbReport *report, struct CbBounds *out);

/**
 * Writes the JSON document printed by `chern-bounds analyze --format json`.
 *
 * # Safety
 * `report` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum CbStatus cb_report_to_json(const struct CbReport *report, char **out);

/**
 * Generic bound `floor(3n/2)` for totally real immersions of an
 * `n`-manifold, found by scanning the codimension inequality.
 *
 * # Safety
 * `out` must be NULL or writable.
 */
enum CbStatus cb_min_target_tri(uint32_t n, uint32_t *out);

/**
 * Generic bound `floor((n+1)/2)` for independent functions on an
 * `n`-manifold.
 *
 * # Safety
 * `out` must be NULL or writable.
 */
enum CbStatus cb_max_independent_count(uint32_t n, uint32_t *out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string from this library not yet freed.
 */
void cb_string_free(char *s);

/**
 * Message for the last failed call on this thread, or NULL after a
 * successful one. Valid until the next call into the library on this
 * thread; do not free.
 */
const char *cb_last_error_message(void);

/**
 * Library version, static storage.
 */
const char *cb_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHERN_BOUNDS_H */
