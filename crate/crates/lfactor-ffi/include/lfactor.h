#ifndef LFACTOR_H
#define LFACTOR_H

/* Generated by cbindgen from lfactor-ffi; regenerate with cargo build, do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every FFI call.
 */
typedef enum LfStatus {
  /**
   * Success.
   */
  LF_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  LF_STATUS_NULL_ARG = 1,
  /**
   * A tail parameter list violated its validity rules.
   */
  LF_STATUS_INVALID_PARAM = 2,
  /**
   * Block sizes or shifts outside the calculus domain.
   */
  LF_STATUS_DOMAIN = 3,
  /**
   * A string argument was not valid UTF-8 or named nothing known.
   */
  LF_STATUS_BAD_NAME = 4,
  /**
   * Serialization failed.
   */
  LF_STATUS_JSON = 5,
  /**
   * An internal panic was caught at the boundary.
   */
  LF_STATUS_PANIC = 6,
} LfStatus;

/**
 * Opaque handle to a validated discrete-series tail parameter.
 */
typedef struct LfParam LfParam;

/**
 * Opaque handle to an exponent-weighted product of L-factors.
 */
typedef struct LfProduct LfProduct;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string; do not free.
 */
const char *lf_version(void);

/**
 * Builds a tail parameter from `len` segment lengths and a tail kind
 * (0 generic, 1 standard, 2 trivial). `entries` may be null when `len`
 * is zero.
 *
 * # Safety
 * `entries` must point to `len` readable i64 values when non-null.
 */
enum LfStatus lf_param_new(const int64_t *entries, size_t len, int32_t tail, struct LfParam **out);

/**
 * Frees a tail parameter handle; null is a no-op.
 */
void lf_param_free(struct LfParam *param);

/**
 * alpha_{c,a}(s; sigma_r); a null `param` means the bare tail.
 */
enum LfStatus lf_alpha_classical(int64_t c,
                                 int64_t a,
                                 const struct LfParam *param,
                                 struct LfProduct **out);

/**
 * Rank-one right factor beta_c(s).
 */
enum LfStatus lf_beta_classical(int64_t c, struct LfProduct **out);

/**
 * GL-block factor alpha_{(c,d),(a,b)}(s + offset), offset a rational
 * `offset_num / offset_den`.
 */
enum LfStatus lf_alpha_gl(int64_t c,
                          int64_t d,
                          int64_t a,
                          int64_t b,
                          int64_t offset_num,
                          int64_t offset_den,
                          struct LfProduct **out);

/**
 * Multiset union with exponent addition; exact cancellation applies.
 */
enum LfStatus lf_product_mul(const struct LfProduct *x,
                             const struct LfProduct *y,
                             struct LfProduct **out);

/**
 * Negates all exponents.
 */
enum LfStatus lf_product_inverse(const struct LfProduct *x, struct LfProduct **out);

/**
 * Refines every composite factor into the gated atoms.
 */
enum LfStatus lf_product_atomize(const struct LfProduct *x, struct LfProduct **out);

/**
 * Exact equality of symbol multisets; writes 1 or 0 through `eq`.
 */
enum LfStatus lf_product_eq(const struct LfProduct *x, const struct LfProduct *y, int32_t *eq);

/**
 * Serializes the product as a JSON array of factor records.
 */
enum LfStatus lf_product_to_json(const struct LfProduct *x, char **out);

/**
 * Frees a product handle; null is a no-op.
 */
void lf_product_free(struct LfProduct *x);

/**
 * Frees a string returned by this library; null is a no-op.
 */
void lf_string_free(char *s);

/**
 * Decomposes a target along `way` ("cl1".."cl3", "gl1".."gl4p") and
 * returns the leftover product plus the stated-closed-form replay as JSON.
 */
enum LfStatus lf_discrepancy_json(const char *way,
                                  int64_t c,
                                  int64_t d,
                                  int64_t a,
                                  int64_t b,
                                  const struct LfParam *param,
                                  char **out);

/**
 * Full holomorphy-strategy verdict for (c, a, sigma_r) as JSON.
 */
enum LfStatus lf_strategy_json(int64_t c, int64_t a, const struct LfParam *param, char **out);

/**
 * Inverse-product common-divisor report at rank c as JSON.
 */
enum LfStatus lf_gcd_corollary_json(int64_t c, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LFACTOR_H */
