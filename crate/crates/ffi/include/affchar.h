#ifndef AFFCHAR_H
#define AFFCHAR_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum AffStatus {
  AFF_STATUS_OK = 0,
  /**
   * Malformed or mathematically invalid input.
   */
  AFF_STATUS_INVALID = 1,
  AFF_STATUS_UNSUPPORTED = 2,
  AFF_STATUS_NEGATIVE_VOLUME = 3,
  AFF_STATUS_CERTIFICATE_FAILURE = 4,
  AFF_STATUS_NUMERIC = 5,
  AFF_STATUS_NULL_POINTER = 6,
  /**
   * A string argument was not UTF-8.
   */
  AFF_STATUS_UTF8 = 7,
  /**
   * An internal panic was caught at the boundary.
   */
  AFF_STATUS_PANIC = 8,
} AffStatus;

/**
 * A character with an optional cocycle.
 */
typedef struct AffRep AffRep;

/**
 * A polygon surface with affine gluings.
 */
typedef struct AffSurface AffSurface;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * JSON description of the most recent failure on this thread, or null.
 * The pointer stays valid until the next library call on the same thread.
 */
const char *aff_last_error(void);

/**
 * Release a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void aff_string_free(char *s);

/**
 * Parse a rep.json document.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum AffStatus aff_rep_from_json(const char *json, struct AffRep **out);

/**
 * # Safety
 * `rep` must come from this library and not have been freed. Null is ignored.
 */
void aff_rep_free(struct AffRep *rep);

/**
 * # Safety
 * `rep` must be a live handle; `out` must be writable.
 */
enum AffStatus aff_rep_genus(const struct AffRep *rep, size_t *out);

/**
 * Serialize back to rep.json. Fails when the handle has no cocycle.
 *
 * # Safety
 * `rep` must be a live handle; `out` must be writable.
 */
enum AffStatus aff_rep_to_json(const struct AffRep *rep, char **out);

/**
 * Orbit-closure descriptor of the linear part, as JSON.
 *
 * # Safety
 * `rep` must be a live handle; `out` must be writable.
 */
enum AffStatus aff_rep_classify(const struct AffRep *rep, char **out);

/**
 * Sign of the volume of a Euclidean representation: 1, 0 or −1.
 *
 * # Safety
 * `rep` must be a live handle; `out` must be writable.
 */
enum AffStatus aff_rep_volume_sign(const struct AffRep *rep, int32_t *out);

/**
 * Seeded random walk; writes the summary report as JSON.
 * `moves` is `catalog`, `torelli` or a comma-separated list of labels.
 *
 * # Safety
 * `rep` must be a live handle, `moves` a NUL-terminated string, `out` writable.
 */
enum AffStatus aff_rep_walk(const struct AffRep *rep,
                            const char *moves,
                            uint64_t steps,
                            uint64_t seed,
                            char **out);

/**
 * Build a polygon surface whose holonomy is conjugate to the representation.
 *
 * # Safety
 * `rep` must be a live handle; `out` must be writable.
 */
enum AffStatus aff_rep_realize(const struct AffRep *rep, struct AffSurface **out);

/**
 * Parse a surface.json document.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum AffStatus aff_surface_from_json(const char *json, struct AffSurface **out);

/**
 * # Safety
 * `surface` must come from this library and not have been freed. Null is ignored.
 */
void aff_surface_free(struct AffSurface *surface);

/**
 * # Safety
 * `surface` must be a live handle; `out` must be writable.
 */
enum AffStatus aff_surface_to_json(const struct AffSurface *surface, char **out);

/**
 * # Safety
 * `surface` must be a live handle; `out` must be writable.
 */
enum AffStatus aff_surface_svg(const struct AffSurface *surface, char **out);

/**
 * # Safety
 * `surface` must be a live handle; `out` must be writable.
 */
enum AffStatus aff_surface_genus(const struct AffSurface *surface, size_t *out);

/**
 * Holonomy of the surface in its marking, as a new representation handle.
 *
 * # Safety
 * `surface` must be a live handle; `out` must be writable.
 */
enum AffStatus aff_surface_holonomy(const struct AffSurface *surface, struct AffRep **out);

/**
 * Admissibility of a period vector given as periods.json; writes
 * `{"accepted", "volume"}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum AffStatus aff_haupt_check(const char *json, char **out);

/**
 * Smallest scalar discreteness product over pairs of nontrivial n-th roots
 * of unity. `witness` is 1 when the product certifies non-discreteness.
 * For n = 1 there is no pair: `value` is NaN and `witness` 0.
 *
 * # Safety
 * `value` and `witness` must be writable.
 */
enum AffStatus aff_jorgensen_row(uint32_t n, double *value, int32_t *witness);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AFFCHAR_H */
