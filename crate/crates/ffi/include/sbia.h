#ifndef SBIA_H
#define SBIA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum SbiaStatus {
  SBIA_STATUS_OK = 0,
  SBIA_STATUS_NULL_POINTER = 1,
  SBIA_STATUS_INVALID_UTF8 = 2,
  SBIA_STATUS_PARSE = 3,
  SBIA_STATUS_UNIVERSE_MISMATCH = 4,
  SBIA_STATUS_INVALID_ARGUMENT = 5,
  SBIA_STATUS_PANIC = 6,
} SbiaStatus;

/**
 * Opaque normal-form handle.
 */
typedef struct SbiaNormalForm SbiaNormalForm;

/**
 * Opaque term handle.
 */
typedef struct SbiaTerm SbiaTerm;

/**
 * Message of the last failed call on this thread, or NULL. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *sbia_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void sbia_string_free(char *s);

/**
 * Parses a term such as `"x1 ^ (x2 v x3)"`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
enum SbiaStatus sbia_term_parse(const char *text, struct SbiaTerm **out);

/**
 * Prints a term in the ASCII syntax accepted by [`sbia_term_parse`].
 *
 * # Safety
 * `term` must be a live handle and `out` writable.
 */
enum SbiaStatus sbia_term_to_string(const struct SbiaTerm *term, char **out);

/**
 * # Safety
 * `term` must be NULL or a live handle from this library.
 */
void sbia_term_free(struct SbiaTerm *term);

/**
 * Normal form of `term` over `x1 … xn`.
 *
 * # Safety
 * `term` must be a live handle and `out` writable.
 */
enum SbiaStatus sbia_normalize(const struct SbiaTerm *term,
                               uint32_t n,
                               struct SbiaNormalForm **out);

/**
 * Normal form of the generator `x` over `x1 … xn`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SbiaStatus sbia_nf_generator(uint32_t x, uint32_t n, struct SbiaNormalForm **out);

/**
 * # Safety
 * `nf` must be NULL or a live handle from this library.
 */
void sbia_nf_free(struct SbiaNormalForm *nf);

/**
 * `a ∧ b`.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum SbiaStatus sbia_nf_meet(const struct SbiaNormalForm *a,
                             const struct SbiaNormalForm *b,
                             struct SbiaNormalForm **out);

/**
 * `a ∨ b`.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum SbiaStatus sbia_nf_join(const struct SbiaNormalForm *a,
                             const struct SbiaNormalForm *b,
                             struct SbiaNormalForm **out);

/**
 * `a ∖ b`.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum SbiaStatus sbia_nf_diff(const struct SbiaNormalForm *a,
                             const struct SbiaNormalForm *b,
                             struct SbiaNormalForm **out);

/**
 * `a ⊓ b`.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum SbiaStatus sbia_nf_isect(const struct SbiaNormalForm *a,
                              const struct SbiaNormalForm *b,
                              struct SbiaNormalForm **out);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum SbiaStatus sbia_nf_equal(const struct SbiaNormalForm *a,
                              const struct SbiaNormalForm *b,
                              bool *out);

/**
 * Natural partial order `a ≤ b`.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum SbiaStatus sbia_nf_leq(const struct SbiaNormalForm *a,
                            const struct SbiaNormalForm *b,
                            bool *out);

/**
 * Number of clauses (atoms below the element).
 *
 * # Safety
 * `nf` must be a live handle and `out` writable.
 */
enum SbiaStatus sbia_nf_len(const struct SbiaNormalForm *nf, size_t *out);

/**
 * Clause text such as `"1*0 v 12*0"`, or `"0"`.
 *
 * # Safety
 * `nf` must be a live handle and `out` writable.
 */
enum SbiaStatus sbia_nf_to_string(const struct SbiaNormalForm *nf, char **out);

/**
 * # Safety
 * `nf` must be a live handle and `out` writable.
 */
enum SbiaStatus sbia_nf_to_json(const struct SbiaNormalForm *nf, char **out);

/**
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum SbiaStatus sbia_nf_from_json(const char *json, struct SbiaNormalForm **out);

/**
 * Equality of two terms given as text, decided by normal forms.
 *
 * # Safety
 * `lhs`, `rhs` must be NUL-terminated strings and `out` writable.
 */
enum SbiaStatus sbia_terms_equal(const char *lhs, const char *rhs, uint32_t n, bool *out);

/**
 * Equality of two terms given as text, decided by exhaustive evaluation
 * in `(n+1)_L`.
 *
 * # Safety
 * `lhs`, `rhs` must be NUL-terminated strings and `out` writable.
 */
enum SbiaStatus sbia_oracle_equal(const char *lhs, const char *rhs, uint32_t n, bool *out);

/**
 * Counting data of the free algebra on `n` generators, as JSON.
 *
 * # Safety
 * `out` must be writable.
 */
enum SbiaStatus sbia_stats_json(uint32_t n, char **out);

#endif  /* SBIA_H */
