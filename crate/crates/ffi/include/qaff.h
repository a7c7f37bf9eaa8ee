#ifndef QAFF_H
#define QAFF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QaffConvention {
  /**
   * Denominator `[d_j]_{q_j}`.
   */
  QAFF_CONVENTION_NODE_BASE = 0,
  /**
   * Denominator `[d_j]_q`.
   */
  QAFF_CONVENTION_DRINFELD = 1,
} QaffConvention;

typedef enum QaffDimVerdict {
  QAFF_DIM_VERDICT_FINITE = 0,
  QAFF_DIM_VERDICT_INFINITE = 1,
  QAFF_DIM_VERDICT_UNKNOWN = 2,
} QaffDimVerdict;

typedef enum QaffStatus {
  QAFF_STATUS_OK = 0,
  QAFF_STATUS_NULL_POINTER = 1,
  QAFF_STATUS_INVALID_ARGUMENT = 2,
  QAFF_STATUS_INVALID_TYPE = 3,
  QAFF_STATUS_ZERO_LEVEL = 4,
  QAFF_STATUS_ZERO_K = 5,
  QAFF_STATUS_SINGULAR_MATRIX = 6,
  QAFF_STATUS_TRUNCATION_EXCEEDED = 7,
  QAFF_STATUS_OVERFLOW = 8,
  QAFF_STATUS_INTERNAL = 9,
} QaffStatus;

/**
 * Opaque affine Cartan data.
 */
typedef struct QaffCartan QaffCartan;

/**
 * Opaque element of Q(q^{1/2}).
 */
typedef struct QaffScalar QaffScalar;

/**
 * Opaque truncated imaginary Verma module.
 */
typedef struct QaffVerma QaffVerma;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *qaff_status_message(enum QaffStatus status);

/**
 * Loads the untwisted affine type `series` (one of `A`..`G`) of finite rank `rank`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum QaffStatus qaff_cartan_load(char series, size_t rank, struct QaffCartan **out);

/**
 * # Safety
 * `cartan` must come from [`qaff_cartan_load`] and not be used afterwards. Null is ignored.
 */
void qaff_cartan_free(struct QaffCartan *cartan);

/**
 * Finite rank `n`; the affine matrix is `(n+1) x (n+1)`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum QaffStatus qaff_cartan_rank(const struct QaffCartan *cartan, size_t *out);

/**
 * Affine Cartan matrix entry `a_ij`, `0 <= i, j <= n`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum QaffStatus qaff_cartan_entry(const struct QaffCartan *cartan,
                                  size_t i,
                                  size_t j,
                                  int64_t *out);

/**
 * Symmetrizer entry `d_i`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum QaffStatus qaff_cartan_symmetrizer(const struct QaffCartan *cartan, size_t i, int64_t *out);

/**
 * `[n]_{q^d}`.
 *
 * # Safety
 * `out` must be valid.
 */
enum QaffStatus qaff_scalar_qint(int64_t n, uint32_t d, struct QaffScalar **out);

/**
 * Parses the textual form `num / den`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` valid.
 */
enum QaffStatus qaff_scalar_parse(const char *text, struct QaffScalar **out);

/**
 * # Safety
 * `scalar` must come from this library and not be used afterwards. Null is ignored.
 */
void qaff_scalar_free(struct QaffScalar *scalar);

/**
 * Exact equality.
 *
 * # Safety
 * Pointers must be valid.
 */
enum QaffStatus qaff_scalar_equal(const struct QaffScalar *a,
                                  const struct QaffScalar *b,
                                  bool *out);

/**
 * Canonical text `num / den`; release with [`qaff_string_free`].
 *
 * # Safety
 * Pointers must be valid.
 */
enum QaffStatus qaff_scalar_to_string(const struct QaffScalar *scalar, char **out);

/**
 * Value at `q = 1` as a reduced fraction `num / den`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum QaffStatus qaff_scalar_at_q1(const struct QaffScalar *scalar, int64_t *num, int64_t *den);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards. Null is ignored.
 */
void qaff_string_free(char *s);

/**
 * Checks the canonical relations for `1 <= k, l <= max_k` with formal `gamma`.
 * `out_checked` receives the number of relations examined.
 *
 * # Safety
 * Pointers must be valid.
 */
enum QaffStatus qaff_heis_verify(const struct QaffCartan *cartan,
                                 enum QaffConvention conv,
                                 int64_t max_k,
                                 bool *out_all_pass,
                                 size_t *out_checked);

/**
 * Checks the Weyl-algebra isomorphism at `gamma = q^level`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum QaffStatus qaff_weyl_verify(const struct QaffCartan *cartan,
                                 enum QaffConvention conv,
                                 int64_t level,
                                 int64_t max_k,
                                 bool *out_all_pass);

/**
 * Builds a truncated imaginary Verma module; `phi` uses the `prefix:period` grammar.
 *
 * # Safety
 * `phi` must be a NUL-terminated string and `out` valid.
 */
enum QaffStatus qaff_verma_build(const char *phi,
                                 int64_t level,
                                 size_t max_index,
                                 uint32_t max_exponent,
                                 struct QaffVerma **out);

/**
 * # Safety
 * `module` must come from [`qaff_verma_build`] and not be used afterwards. Null is ignored.
 */
void qaff_verma_free(struct QaffVerma *module);

/**
 * Truncated dimension of degree `n` and the verdict for the untruncated
 * module; `out_value` is meaningful only for a finite verdict.
 *
 * # Safety
 * Pointers must be valid.
 */
enum QaffStatus qaff_verma_graded_dim(const struct QaffVerma *module,
                                      int64_t n,
                                      uint64_t *out_dim,
                                      enum QaffDimVerdict *out_verdict,
                                      uint64_t *out_value);

/**
 * Gram-determinant scan over degrees `|n| <= N`. When reducible,
 * `out_has_witness` tells whether `out_witness` holds a vanishing degree.
 *
 * # Safety
 * Pointers must be valid.
 */
enum QaffStatus qaff_verma_irreducible(const struct QaffVerma *module,
                                       bool *out_irreducible,
                                       bool *out_has_witness,
                                       int64_t *out_witness);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QAFF_H */
