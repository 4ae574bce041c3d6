#ifndef OSCTAB_H
#define OSCTAB_H

/* Generated by cbindgen from the Rust sources; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum OsctabStatus {
  OSCTAB_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  OSCTAB_STATUS_NULL_ARGUMENT = 1,
  /**
   * Input text was not valid UTF-8.
   */
  OSCTAB_STATUS_INVALID_UTF8 = 2,
  /**
   * Input text could not be parsed.
   */
  OSCTAB_STATUS_PARSE = 3,
  /**
   * Input violated a precondition (bounds, shapes, chain steps).
   */
  OSCTAB_STATUS_INVALID = 4,
  /**
   * An internal invariant failed; please report.
   */
  OSCTAB_STATUS_INTERNAL = 5,
} OsctabStatus;

/**
 * Generalized oscillating tableau (alternating vertical-strip steps).
 */
typedef struct OsctabGenOsc OsctabGenOsc;

/**
 * Oscillating tableau.
 */
typedef struct OsctabOsc OsctabOsc;

/**
 * Semistandard tableau.
 */
typedef struct OsctabSsyt OsctabSsyt;

/**
 * Standard tableau.
 */
typedef struct OsctabSyt OsctabSyt;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. The string must be
 * released with [`osctab_string_free`].
 */
char *osctab_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string obtained from this library, not yet freed.
 */
void osctab_string_free(char *s);

/**
 * Parses a standard tableau (rows of entries, one row per line).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` valid for writes.
 */
enum OsctabStatus osctab_syt_parse(const char *text, struct OsctabSyt **out);

/**
 * Canonical text form, newline-terminated.
 *
 * # Safety
 * `h` must be a live handle and `out` valid for writes.
 */
enum OsctabStatus osctab_syt_to_string(const struct OsctabSyt *h, char **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `h` must be null or a live handle, not used afterwards.
 */
void osctab_syt_free(struct OsctabSyt *h);

/**
 * Parses an oscillating tableau (one bracketed partition per line).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` valid for writes.
 */
enum OsctabStatus osctab_osc_parse(const char *text, struct OsctabOsc **out);

/**
 * Canonical text form, newline-terminated.
 *
 * # Safety
 * `h` must be a live handle and `out` valid for writes.
 */
enum OsctabStatus osctab_osc_to_string(const struct OsctabOsc *h, char **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `h` must be null or a live handle, not used afterwards.
 */
void osctab_osc_free(struct OsctabOsc *h);

/**
 * Parses a semistandard tableau; the alphabet is its largest entry.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` valid for writes.
 */
enum OsctabStatus osctab_ssyt_parse(const char *text, struct OsctabSsyt **out);

/**
 * Canonical text form, newline-terminated.
 *
 * # Safety
 * `h` must be a live handle and `out` valid for writes.
 */
enum OsctabStatus osctab_ssyt_to_string(const struct OsctabSsyt *h, char **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `h` must be null or a live handle, not used afterwards.
 */
void osctab_ssyt_free(struct OsctabSsyt *h);

/**
 * Parses a generalized oscillating tableau (one partition per line).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` valid for writes.
 */
enum OsctabStatus osctab_gen_osc_parse(const char *text, struct OsctabGenOsc **out);

/**
 * Canonical text form, newline-terminated.
 *
 * # Safety
 * `h` must be a live handle and `out` valid for writes.
 */
enum OsctabStatus osctab_gen_osc_to_string(const struct OsctabGenOsc *h, char **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `h` must be null or a live handle, not used afterwards.
 */
void osctab_gen_osc_free(struct OsctabGenOsc *h);

/**
 * Standard tableau with columns at most `2k` long to oscillating tableau
 * with at most `k` columns.
 *
 * # Safety
 * `t` must be a live handle and `out` valid for writes.
 */
enum OsctabStatus osctab_syt_to_oscillating(const struct OsctabSyt *t,
                                            size_t k,
                                            struct OsctabOsc **out);

/**
 * # Safety
 * `o` must be a live handle and `out` valid for writes.
 */
enum OsctabStatus osctab_oscillating_to_syt(const struct OsctabOsc *o, struct OsctabSyt **out);

/**
 * Number of steps of an oscillating tableau, or 0 for null.
 *
 * # Safety
 * `o` must be null or a live handle.
 */
size_t osctab_osc_len(const struct OsctabOsc *o);

/**
 * # Safety
 * `t` must be a live handle and `out` valid for writes.
 */
enum OsctabStatus osctab_ssyt_to_gen_oscillating(const struct OsctabSsyt *t,
                                                 size_t k,
                                                 struct OsctabGenOsc **out);

/**
 * # Safety
 * `o` must be a live handle and `out` valid for writes.
 */
enum OsctabStatus osctab_gen_oscillating_to_ssyt(const struct OsctabGenOsc *o,
                                                 struct OsctabSsyt **out);

/**
 * Number of oscillating tableaux of length `n`, at most `k` columns, ending
 * at a column of height `m`, as a decimal string.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum OsctabStatus osctab_count_oscillating(size_t n, size_t k, size_t m, char **out);

/**
 * Standard tableaux of size `n` with columns at most `max_col_len` long and
 * `odd_cols` odd columns, as a decimal string.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum OsctabStatus osctab_count_syt(size_t n, size_t max_col_len, size_t odd_cols, char **out);

/**
 * Same count as [`osctab_count_oscillating`], from the Bessel determinant.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum OsctabStatus osctab_bessel_count(size_t n, size_t k, size_t m, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OSCTAB_H */
