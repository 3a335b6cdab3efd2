/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef SURIS_H
#define SURIS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every call.
 */
typedef enum {
  SURIS_STATUS_OK = 0,
  SURIS_STATUS_NULL_POINTER = 1,
  SURIS_STATUS_INVALID_UTF8 = 2,
  SURIS_STATUS_PARSE = 3,
  SURIS_STATUS_DOMAIN = 4,
  SURIS_STATUS_INVALID_PRECISION = 5,
  SURIS_STATUS_NON_CONVERGENCE = 6,
  SURIS_STATUS_INADMISSIBLE_EPSILON = 7,
  SURIS_STATUS_NO_SIGN_CHANGE = 8,
  SURIS_STATUS_TAIL_NON_CONVERGENCE = 9,
  SURIS_STATUS_VERIFICATION = 10,
  SURIS_STATUS_CONFIG = 11,
  SURIS_STATUS_BUFFER_TOO_SMALL = 12,
  SURIS_STATUS_PANIC = 13,
} SurisStatus;

/**
 * Sign of the lobe action difference.
 */
typedef enum {
  SURIS_ORIENTATION_POSITIVE = 1,
  SURIS_ORIENTATION_NEGATIVE = -1,
  SURIS_ORIENTATION_DEGENERATE = 0,
} SurisOrientation;

/**
 * Selects a full-precision field of a [`SurisLobe`].
 */
typedef enum {
  SURIS_LOBE_FIELD_DELTA = 0,
  SURIS_LOBE_FIELD_EPS = 1,
  SURIS_LOBE_FIELD_NU = 2,
  SURIS_LOBE_FIELD_AREA_NUMERIC = 3,
  SURIS_LOBE_FIELD_MELNIKOV_AREA = 4,
  SURIS_LOBE_FIELD_ASYMPTOTIC_AREA = 5,
  SURIS_LOBE_FIELD_ANTI_INTEGRABLE_AREA = 6,
  SURIS_LOBE_FIELD_REL_ERR = 7,
  SURIS_LOBE_FIELD_TAIL_BOUND = 8,
} SurisLobeField;

/**
 * A measured lobe area.
 */
typedef struct SurisLobe SurisLobe;

/**
 * Map parameters at a fixed precision.
 */
typedef struct SurisMap SurisMap;

/**
 * `Gamma(nu)` by its three routes.
 */
typedef struct {
  double nu;
  double series;
  double elliptic;
  double asymptotic;
  uint64_t terms;
} SurisGamma;

/**
 * Critical points of the Melnikov series and its gap `L(theta_q) - L(theta_p)`.
 */
typedef struct {
  double theta_q;
  double theta_p;
  double l_q;
  double l_p;
  double gap;
} SurisMelnikovGap;

/**
 * Lobe-area record rounded to doubles. `rel_err` is NaN when `eps = 0`.
 */
typedef struct {
  double delta;
  double eps;
  double nu;
  double area_numeric;
  double melnikov_area;
  double asymptotic_area;
  double anti_integrable_area;
  double rel_err;
  double tail_bound;
  SurisOrientation orientation;
  uint32_t digits;
  uint64_t tail_terms;
} SurisLobeSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, a static NUL-terminated string.
 */
const char *suris_version(void);

/**
 * Message of the last failed call on this thread, empty after a success.
 * Valid until the next call on the same thread.
 */
const char *suris_last_error_message(void);

/**
 * Static name of a status code.
 */
const char *suris_status_name(SurisStatus status);

/**
 * Creates a map from decimal `delta` in (0, 1) and `eps >= 0` at `digits`
 * decimal digits (at least 30).
 *
 * # Safety
 * `delta` and `eps` are NUL-terminated strings; `out` is writable.
 */
SurisStatus suris_map_new(const char *delta, const char *eps, uint32_t digits, SurisMap **out);

/**
 * Releases a map; null is ignored.
 *
 * # Safety
 * `map` came from [`suris_map_new`] and is not used afterwards.
 */
void suris_map_free(SurisMap *map);

/**
 * The saddle multiplier `nu`.
 *
 * # Safety
 * `map` is a live handle; `out` is writable.
 */
SurisStatus suris_map_nu(const SurisMap *map, double *out);

/**
 * One forward step of the perturbed map on the lift.
 *
 * # Safety
 * `map` is a live handle; output pointers are writable.
 */
SurisStatus suris_map_forward(const SurisMap *map,
                              double theta,
                              double r,
                              double *theta_out,
                              double *r_out);

/**
 * One inverse step of the perturbed map on the lift.
 *
 * # Safety
 * `map` is a live handle; output pointers are writable.
 */
SurisStatus suris_map_inverse(const SurisMap *map,
                              double theta,
                              double r,
                              double *theta_out,
                              double *r_out);

/**
 * The integral `I(theta, r)` of the unperturbed map.
 *
 * # Safety
 * `map` is a live handle; `out` is writable.
 */
SurisStatus suris_map_invariant(const SurisMap *map, double theta, double r, double *out);

/**
 * The unperturbed potential `V(theta)`.
 *
 * # Safety
 * `map` is a live handle; `out` is writable.
 */
SurisStatus suris_map_potential(const SurisMap *map, double theta, double *out);

/**
 * `Gamma` at the map's `nu`.
 *
 * # Safety
 * `map` is a live handle; `out` is writable.
 */
SurisStatus suris_map_gamma(const SurisMap *map, SurisGamma *out);

/**
 * The Melnikov series `L(theta)` for `|theta| < 1/2`.
 *
 * # Safety
 * `map` is a live handle; `out` is writable.
 */
SurisStatus suris_map_melnikov_l(const SurisMap *map, double theta, double *out);

/**
 * Critical points and gap of the Melnikov series.
 *
 * # Safety
 * `map` is a live handle; `out` is writable.
 */
SurisStatus suris_map_melnikov_gap(const SurisMap *map, SurisMelnikovGap *out);

/**
 * Lobe area in the anti-integrable limit at the map's `eps`.
 *
 * # Safety
 * `map` is a live handle; `out` is writable.
 */
SurisStatus suris_map_anti_integrable(const SurisMap *map, double *out);

/**
 * Measures the lobe area by the symmetric-orbit finder with default options.
 *
 * # Safety
 * `map` is a live handle; `out` is writable.
 */
SurisStatus suris_map_lobe_area(const SurisMap *map, SurisLobe **out);

/**
 * Releases a lobe record; null is ignored.
 *
 * # Safety
 * `lobe` came from [`suris_map_lobe_area`] and is not used afterwards.
 */
void suris_lobe_free(SurisLobe *lobe);

/**
 * The lobe record rounded to doubles.
 *
 * # Safety
 * `lobe` is a live handle; `out` is writable.
 */
SurisStatus suris_lobe_summary(const SurisLobe *lobe, SurisLobeSummary *out);

/**
 * Writes one field of the record as a NUL-terminated decimal at the
 * record's precision. `needed` (optional) receives the buffer size required,
 * including the NUL; a short buffer gives `BufferTooSmall` and is left
 * untouched. `RelErr` at `eps = 0` is the empty string.
 *
 * # Safety
 * `lobe` is a live handle; `buf` is null or writable for `len` bytes;
 * `needed` is null or writable.
 */
SurisStatus suris_lobe_decimal(const SurisLobe *lobe,
                               SurisLobeField field,
                               char *buf,
                               size_t len,
                               size_t *needed);

/**
 * `Gamma(nu)` for a decimal `nu` in (0, 1) at `digits` digits.
 *
 * # Safety
 * `nu` is a NUL-terminated string; `out` is writable.
 */
SurisStatus suris_gamma(const char *nu, uint32_t digits, SurisGamma *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SURIS_H */
