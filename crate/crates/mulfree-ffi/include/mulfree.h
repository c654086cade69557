/* C interface to the mulfree library. All handles are opaque; every function returns an MfStatus and writes results through out-pointers. */

#ifndef MULFREE_H
#define MULFREE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum MfStatus {
  /**
   * Success; out-parameters are filled in.
   */
  MF_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  MF_STATUS_NULL_ARGUMENT = 1,
  /**
   * A parameter lies outside the function's domain.
   */
  MF_STATUS_INVALID_PARAMETER = 2,
  /**
   * The root solver exhausted its sweep budget.
   */
  MF_STATUS_NON_CONVERGENCE = 3,
  /**
   * An index exceeded the container's size.
   */
  MF_STATUS_OUT_OF_RANGE = 4,
  /**
   * An internal cross-check between independent computation routes failed.
   */
  MF_STATUS_NUMERIC_FAILURE = 5,
} MfStatus;

/**
 * A truncated moment sequence `m_0 ..= m_k`.
 */
typedef struct MfMoments MfMoments;

/**
 * A polynomial with extended-precision complex coefficients.
 */
typedef struct MfPoly MfPoly;

/**
 * A solved root set together with its residuals and solver record.
 */
typedef struct MfRoots MfRoots;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns a static, null-terminated description of a status code.
 */
const char *mf_status_message(enum MfStatus status);

/**
 * Mantissa width sufficient for degree-`n` work at time magnitude `s_mag`.
 */
uint32_t mf_required_bits(uintptr_t n, double s_mag);

/**
 * Creates the degree-`n` member of the time-`s` heat family. Passing 0 for
 * `precision_bits` selects a degree-dependent width.
 *
 * # Safety
 *
 * `out` must be valid for writing one pointer.
 */
enum MfStatus mf_hermite_new(uintptr_t n,
                             double s_re,
                             double s_im,
                             uint32_t precision_bits,
                             struct MfPoly **out);

/**
 * Creates the degree-`n` member of the shift family with shift `b` and
 * exponent `c`. Passing 0 for `precision_bits` selects a degree-dependent
 * width. `b = -n` is rejected for `c >= 1`.
 *
 * # Safety
 *
 * `out` must be valid for writing one pointer.
 */
enum MfStatus mf_laguerre_new(uintptr_t n,
                              double b_re,
                              double b_im,
                              uint64_t c,
                              uint32_t precision_bits,
                              struct MfPoly **out);

/**
 * Releases a polynomial handle. Null is ignored.
 *
 * # Safety
 *
 * `p` must be null or a handle returned by this library that has not been
 * freed yet.
 */
void mf_poly_free(struct MfPoly *p);

/**
 * Writes the degree of `p`.
 *
 * # Safety
 *
 * `p` must be a live handle; `out` must be valid for writing one `usize`.
 */
enum MfStatus mf_poly_degree(const struct MfPoly *p, uintptr_t *out);

/**
 * Order-`order` finite free multiplicative convolution of `a` and `b`.
 * Both degrees must be at most `order`.
 *
 * # Safety
 *
 * `a` and `b` must be live handles; `out` must be valid for writing one
 * pointer.
 */
enum MfStatus mf_poly_convolve(const struct MfPoly *a,
                               const struct MfPoly *b,
                               uintptr_t order,
                               struct MfPoly **out);

/**
 * Applies the order-`order` multiplicative heat operator at time `s`.
 * The degree of `p` must be at most `order`.
 *
 * # Safety
 *
 * `p` must be a live handle; `out` must be valid for writing one pointer.
 */
enum MfStatus mf_poly_heat(const struct MfPoly *p,
                           double s_re,
                           double s_im,
                           uintptr_t order,
                           struct MfPoly **out);

/**
 * Applies the shift operator with shift `b` and exponent `c`.
 *
 * # Safety
 *
 * `p` must be a live handle; `out` must be valid for writing one pointer.
 */
enum MfStatus mf_poly_shift(const struct MfPoly *p,
                            double b_re,
                            double b_im,
                            uint64_t c,
                            struct MfPoly **out);

/**
 * Serializes `p` as a JSON document preserving full precision. The returned
 * string belongs to the caller; release it with [`mf_string_free`].
 *
 * # Safety
 *
 * `p` must be a live handle; `out` must be valid for writing one pointer.
 */
enum MfStatus mf_poly_to_json(const struct MfPoly *p, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 *
 * `s` must be null or a string returned by this library that has not been
 * freed yet.
 */
void mf_string_free(char *s);

/**
 * Finds all roots of `p` with multiplicity. Passing 0 for `max_sweeps`
 * selects the default per-stage budget.
 *
 * # Safety
 *
 * `p` must be a live handle; `out` must be valid for writing one pointer.
 */
enum MfStatus mf_poly_find_roots(const struct MfPoly *p,
                                 uintptr_t max_sweeps,
                                 struct MfRoots **out);

/**
 * Writes the number of roots in `r`.
 *
 * # Safety
 *
 * `r` must be a live handle; `out` must be valid for writing one `usize`.
 */
enum MfStatus mf_roots_count(const struct MfRoots *r, uintptr_t *out);

/**
 * Writes root `index` and its residual, rounded to double precision.
 *
 * # Safety
 *
 * `r` must be a live handle; `re`, `im`, and `residual` must each be valid
 * for writing one `double`.
 */
enum MfStatus mf_roots_get(const struct MfRoots *r,
                           uintptr_t index,
                           double *re,
                           double *im,
                           double *residual);

/**
 * Writes the precision in bits and the total Aberth sweeps of the solve.
 *
 * # Safety
 *
 * `r` must be a live handle; `precision_bits` and `sweeps` must each be
 * valid for writing.
 */
enum MfStatus mf_roots_record(const struct MfRoots *r, uint32_t *precision_bits, uintptr_t *sweeps);

/**
 * Releases a root-set handle. Null is ignored.
 *
 * # Safety
 *
 * `r` must be null or a handle returned by this library that has not been
 * freed yet.
 */
void mf_roots_free(struct MfRoots *r);

/**
 * Mean power sums `m_1 ..= m_k` of the roots of `p`, computed from the
 * coefficients by Newton's identities without solving for the roots.
 *
 * # Safety
 *
 * `p` must be a live handle; `out` must be valid for writing one pointer.
 */
enum MfStatus mf_moments_from_coeffs(const struct MfPoly *p,
                                     uintptr_t k_max,
                                     struct MfMoments **out);

/**
 * Moments `m_1 ..= m_k` of the multiplicative normal law at time `s`,
 * cross-checked across its three closed-form routes. Passing 0 for
 * `precision_bits` selects 256.
 *
 * # Safety
 *
 * `out` must be valid for writing one pointer.
 */
enum MfStatus mf_mu_moments(double s_re,
                            double s_im,
                            uintptr_t k_max,
                            uint32_t precision_bits,
                            struct MfMoments **out);

/**
 * Moments `m_1 ..= m_k` of the multiplicative Poisson law with shift
 * density `beta` and exponent density `gamma`, cross-checked across its two
 * closed-form routes. `beta = -1` and `gamma < 0` are rejected. Passing 0
 * for `precision_bits` selects 256.
 *
 * # Safety
 *
 * `out` must be valid for writing one pointer.
 */
enum MfStatus mf_nu_moments(double beta_re,
                            double beta_im,
                            double gamma,
                            uintptr_t k_max,
                            uint32_t precision_bits,
                            struct MfMoments **out);

/**
 * Writes the highest order `k` stored in `m`.
 *
 * # Safety
 *
 * `m` must be a live handle; `out` must be valid for writing one `usize`.
 */
enum MfStatus mf_moments_order(const struct MfMoments *m, uintptr_t *out);

/**
 * Writes moment `k` (with `m_0 = 1` at `k = 0`), rounded to double
 * precision.
 *
 * # Safety
 *
 * `m` must be a live handle; `re` and `im` must each be valid for writing
 * one `double`.
 */
enum MfStatus mf_moments_get(const struct MfMoments *m, uintptr_t k, double *re, double *im);

/**
 * Releases a moment-sequence handle. Null is ignored.
 *
 * # Safety
 *
 * `m` must be null or a handle returned by this library that has not been
 * freed yet.
 */
void mf_moments_free(struct MfMoments *m);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MULFREE_H */
