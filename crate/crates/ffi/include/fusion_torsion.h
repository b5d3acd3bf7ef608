#ifndef FUSION_TORSION_H
#define FUSION_TORSION_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes. Zero is success.
typedef enum FtStatus {
  FT_STATUS_OK = 0,
  FT_STATUS_NULL_POINTER = 1,
  FT_STATUS_INVALID_UTF8 = 2,
  FT_STATUS_PARSE = 3,
  FT_STATUS_UNKNOWN_LABEL = 4,
  FT_STATUS_AXIOM_VIOLATIONS = 5,
  FT_STATUS_BAD_PARAMETER = 6,
  FT_STATUS_UNSUPPORTED = 7,
  FT_STATUS_COMPUTATION = 8,
  FT_STATUS_IO = 9,
  FT_STATUS_PANIC = 10,
} FtStatus;

// Opaque handle to a fusion ring.
typedef struct FtProvider FtProvider;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. Valid until
// the next failing call on the same thread; do not free.
const char *ft_last_error_message(void);

// Library version as a static string; do not free.
const char *ft_version(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void ft_string_free(char *s);

// Builds a ring from a spec such as `uqsu11` or `free(so3,word:Z2)`.
//
// # Safety
// `spec` must be a NUL-terminated string; `out` a valid pointer.
enum FtStatus ft_provider_new(const char *spec, struct FtProvider **out);

// Releases a ring handle. Null is ignored.
//
// # Safety
// `p` must come from `ft_provider_new` and not have been freed.
void ft_provider_free(struct FtProvider *p);

// Canonical name of the ring.
//
// # Safety
// `p` must be a live handle; `out` a valid pointer.
enum FtStatus ft_provider_name(const struct FtProvider *p, char **out);

// `u ⊗ v` as JSON.
//
// # Safety
// `p` must be a live handle; `u`, `v` NUL-terminated; `out` valid.
enum FtStatus ft_decompose(const struct FtProvider *p, const char *u, const char *v, char **out);

// Axiom check over `labels` enumerated irreducibles and `triples` random
// associativity triples. A report with violations is still `FT_STATUS_OK`.
//
// # Safety
// `p` must be a live handle; `out` valid.
enum FtStatus ft_check_axioms(const struct FtProvider *p,
                              size_t labels,
                              size_t triples,
                              uint64_t seed,
                              char **out);

// Torsion set of the ring. `budget` may be null (defaults) or
// `key=value,...`.
//
// # Safety
// `p` must be a live handle; `budget` null or NUL-terminated; `out` valid.
enum FtStatus ft_torsion_report(const struct FtProvider *p, const char *budget, char **out);

// Identity-component report with default probe bounds.
//
// # Safety
// `p` must be a live handle; `budget` null or NUL-terminated; `out` valid.
enum FtStatus ft_component_report(const struct FtProvider *p, const char *budget, char **out);

// N-sequence of a finite group or word group.
//
// # Safety
// `p` must be a live handle; `budget` null or NUL-terminated; `out` valid.
enum FtStatus ft_nsequence(const struct FtProvider *p,
                           size_t max_stage,
                           uint64_t exponent_bound,
                           const char *budget,
                           char **out);

// Numeric su(1,1) checks at `q < 0`.
//
// # Safety
// `out` must be a valid pointer.
enum FtStatus ft_uq_verify(double q, size_t nmax, size_t fusion_nmax, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FUSION_TORSION_H */
