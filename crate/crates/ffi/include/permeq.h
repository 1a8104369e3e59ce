#ifndef PERMEQ_H
#define PERMEQ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PermeqStatus {
  PERMEQ_STATUS_OK = 0,
  PERMEQ_STATUS_NULL_POINTER = 1,
  // Parse errors, invalid arguments, unmet preconditions.
  PERMEQ_STATUS_INVALID_INPUT = 2,
  // A degree guard was exceeded.
  PERMEQ_STATUS_GUARD = 3,
  // A result failed its own check. Always a library bug.
  PERMEQ_STATUS_VERIFICATION = 4,
  PERMEQ_STATUS_OUT_OF_RANGE = 5,
  PERMEQ_STATUS_PANIC = 6,
} PermeqStatus;

typedef enum PermeqTheorem {
  PERMEQ_THEOREM_A1 = 1,
  PERMEQ_THEOREM_A2 = 2,
} PermeqTheorem;

typedef enum PermeqVerdict {
  PERMEQ_VERDICT_ONLY_TRIVIAL = 0,
  PERMEQ_VERDICT_INCONCLUSIVE = 1,
} PermeqVerdict;

// A replayable triviality certificate.
typedef struct PermeqCertificate PermeqCertificate;

// A permutation of `{1, ..., n}`.
typedef struct PermeqPermutation PermeqPermutation;

// A verified, sorted set of solutions.
typedef struct PermeqSolutionSet PermeqSolutionSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. Valid until the
// next call into the library from the same thread.
const char *permeq_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, freed once.
void permeq_string_free(char *s);

// Parses cycle notation such as `(1,2,3)(4,5)`. `degree = 0` takes the
// largest point mentioned.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum PermeqStatus permeq_perm_parse(const char *text,
                                    size_t degree,
                                    struct PermeqPermutation **out);

// Builds a permutation from its images `images[0..n]` (1-based values).
//
// # Safety
// `images` must point to `n` readable values; `out` must be writable.
enum PermeqStatus permeq_perm_from_images(const size_t *images,
                                          size_t n,
                                          struct PermeqPermutation **out);

// # Safety
// `p` must be null or a live handle.
void permeq_perm_free(struct PermeqPermutation *p);

// Degree of `p`, or 0 for a null handle.
//
// # Safety
// `p` must be null or a live handle.
size_t permeq_perm_degree(const struct PermeqPermutation *p);

// Writes the 1-based image table of `p` into `buf`, which holds `len` values.
//
// # Safety
// `p` must be a live handle; `buf` must have room for `len` values.
enum PermeqStatus permeq_perm_images(const struct PermeqPermutation *p, size_t *buf, size_t len);

// Canonical cycle notation; free with [`permeq_string_free`]. Null on a null handle.
//
// # Safety
// `p` must be null or a live handle.
char *permeq_perm_format(const struct PermeqPermutation *p);

// `out = a ∘ b` (apply `b` first).
//
// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum PermeqStatus permeq_perm_compose(const struct PermeqPermutation *a,
                                      const struct PermeqPermutation *b,
                                      struct PermeqPermutation **out);

// # Safety
// `p` must be a live handle; `out` must be writable.
enum PermeqStatus permeq_perm_inverse(const struct PermeqPermutation *p,
                                      struct PermeqPermutation **out);

// `out = p^k`; negative `k` gives powers of the inverse.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum PermeqStatus permeq_perm_power(const struct PermeqPermutation *p,
                                    int64_t k,
                                    struct PermeqPermutation **out);

// `out = tau ∘ p ∘ tau⁻¹`.
//
// # Safety
// `p`, `tau` must be live handles; `out` must be writable.
enum PermeqStatus permeq_perm_conjugate(const struct PermeqPermutation *p,
                                        const struct PermeqPermutation *tau,
                                        struct PermeqPermutation **out);

// Order of `p`; `OutOfRange` if it does not fit in 64 bits.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum PermeqStatus permeq_perm_order(const struct PermeqPermutation *p, uint64_t *out);

// Every `y` with `alpha ∘ y ∘ alpha⁻¹ = y^k`, by scanning `S_n`.
//
// # Safety
// `alpha` must be a live handle; `out` must be writable.
enum PermeqStatus permeq_enumerate_naive(const struct PermeqPermutation *alpha,
                                         uint32_t k,
                                         struct PermeqSolutionSet **out);

// Every `y` with `alpha ∘ y ∘ alpha⁻¹ = y²`, by the pruned search.
//
// # Safety
// `alpha` must be a live handle; `out` must be writable.
enum PermeqStatus permeq_enumerate_pruned(const struct PermeqPermutation *alpha,
                                          struct PermeqSolutionSet **out);

// Every `x` with `alpha ∘ x = x ∘ alpha ∘ x ∘ alpha`.
//
// # Safety
// `alpha` must be a live handle; `out` must be writable.
enum PermeqStatus permeq_solve_star(const struct PermeqPermutation *alpha,
                                    struct PermeqSolutionSet **out);

// Every `x` with `x ∘ x = sigma`; possibly empty.
//
// # Safety
// `sigma` must be a live handle; `out` must be writable.
enum PermeqStatus permeq_square_roots(const struct PermeqPermutation *sigma,
                                      struct PermeqSolutionSet **out);

// All solutions for a single `n`-cycle with `n = p·2^m`, by construction.
//
// # Safety
// `alpha` must be a live handle; `out` must be writable.
enum PermeqStatus permeq_b2_all_solutions(const struct PermeqPermutation *alpha,
                                          struct PermeqSolutionSet **out);

// # Safety
// `set` must be null or a live handle.
void permeq_set_free(struct PermeqSolutionSet *set);

// Number of members, or 0 for a null handle.
//
// # Safety
// `set` must be null or a live handle.
size_t permeq_set_len(const struct PermeqSolutionSet *set);

// A copy of member `index` in canonical order.
//
// # Safety
// `set` must be a live handle; `out` must be writable.
enum PermeqStatus permeq_set_get(const struct PermeqSolutionSet *set,
                                 size_t index,
                                 struct PermeqPermutation **out);

// The set as JSON: `{equation, degree, method, stats, count, solutions}`.
//
// # Safety
// `set` must be null or a live handle.
char *permeq_set_to_json(const struct PermeqSolutionSet *set);

// Checks the hypotheses of `theorem` for `alpha`.
//
// # Safety
// `alpha` must be a live handle; `out` must be writable.
enum PermeqStatus permeq_certify(const struct PermeqPermutation *alpha,
                                 enum PermeqTheorem theorem,
                                 struct PermeqCertificate **out);

// Certificate for the `n`-cycle from the odd prime divisors of `n`.
//
// # Safety
// `out` must be writable.
enum PermeqStatus permeq_certify_cyclic(size_t n, struct PermeqCertificate **out);

// # Safety
// `cert` must be a live handle.
enum PermeqVerdict permeq_cert_verdict(const struct PermeqCertificate *cert);

// Re-derives the verdict from the certificate's own records.
//
// # Safety
// `cert` must be a live handle.
enum PermeqStatus permeq_cert_replay(const struct PermeqCertificate *cert);

// # Safety
// `cert` must be null or a live handle.
char *permeq_cert_to_json(const struct PermeqCertificate *cert);

// # Safety
// `cert` must be null or a live handle.
void permeq_cert_free(struct PermeqCertificate *cert);

// The `n`-cycle `beta` and its solution `y` made of `n/p` cycles of length `p`.
//
// # Safety
// `out_beta` and `out_y` must be writable.
enum PermeqStatus permeq_b1_construct(size_t n,
                                      size_t p,
                                      struct PermeqPermutation **out_beta,
                                      struct PermeqPermutation **out_y);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PERMEQ_H */
