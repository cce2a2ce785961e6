#ifndef GRIDPAL_H
#define GRIDPAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define GRIDPAL_KIND_PAL2D 0

#define GRIDPAL_KIND_HV 1

#define GRIDPAL_KIND_HORIZONTAL 2

#define GRIDPAL_KIND_VERTICAL 3

#define GRIDPAL_KIND_TRIVIAL 4

#define GRIDPAL_FAMILY_BINARY_MIN 0

#define GRIDPAL_FAMILY_Q_MIN 1

#define GRIDPAL_FAMILY_Q3_NONTRIVIAL 2

#define GRIDPAL_FAMILY_Q_NONTRIVIAL 3

#define GRIDPAL_OBJECTIVE_MAX 0

#define GRIDPAL_OBJECTIVE_MIN 1

/**
 * Result code of every fallible call.
 */
typedef enum GridpalStatus {
  GRIDPAL_STATUS_OK = 0,
  GRIDPAL_STATUS_NULL_POINTER = 1,
  GRIDPAL_STATUS_INVALID_UTF8 = 2,
  GRIDPAL_STATUS_PARSE = 3,
  GRIDPAL_STATUS_INVALID_ARGUMENT = 4,
  GRIDPAL_STATUS_SHAPE = 5,
  GRIDPAL_STATUS_NOT_PALINDROME = 6,
  GRIDPAL_STATUS_BUDGET_EXCEEDED = 7,
  GRIDPAL_STATUS_PANIC = 8,
} GridpalStatus;

/**
 * Opaque two-dimensional word.
 */
typedef struct GridpalWord GridpalWord;

/**
 * First occurrence of the forbidden pattern, 1-based inclusive bounds.
 */
typedef struct GridpalPattern {
  size_t i1;
  size_t i2;
  size_t j1;
  size_t j2;
  /**
   * Unicode scalar values of the differing corner symbols.
   */
  uint32_t x;
  uint32_t y;
} GridpalPattern;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never null.
 */
const char *gridpal_status_name(enum GridpalStatus status);

/**
 * Message for the most recent failure on this thread, or null. Valid until
 * the next failing call on the same thread.
 */
const char *gridpal_last_error_message(void);

/**
 * Parses grid text (one row per line) into a new handle.
 */
enum GridpalStatus gridpal_word_parse(const char *text, struct GridpalWord **out);

/**
 * Releases a handle. Null is ignored.
 */
void gridpal_word_free(struct GridpalWord *word);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void gridpal_string_free(char *s);

enum GridpalStatus gridpal_word_shape(const struct GridpalWord *word, size_t *rows, size_t *cols);

/**
 * Grid text of the word, newline-terminated rows.
 */
enum GridpalStatus gridpal_word_to_grid(const struct GridpalWord *word, char **out);

enum GridpalStatus gridpal_is_palindrome_2d(const struct GridpalWord *word, bool *out);

enum GridpalStatus gridpal_is_hv_palindrome(const struct GridpalWord *word, bool *out);

/**
 * Number of distinct palindromic factors of the given `GRIDPAL_KIND_*`.
 */
enum GridpalStatus gridpal_count_factors(const struct GridpalWord *word,
                                         uint32_t kind,
                                         size_t *out);

/**
 * Sets `found` and, when true, fills `out` with the first occurrence.
 */
enum GridpalStatus gridpal_find_pattern(const struct GridpalWord *word,
                                        bool *found,
                                        struct GridpalPattern *out);

/**
 * Sizes of the conjugacy class and of its palindromic and HV members.
 */
enum GridpalStatus gridpal_conjugates(const struct GridpalWord *word,
                                      size_t *class_size,
                                      size_t *pal_count,
                                      size_t *hv_count);

/**
 * Upper bound on distinct HV-palindromic factors of an `m`-by-`n` word.
 */
enum GridpalStatus gridpal_max_hv_bound(size_t m, size_t n, uint64_t *out);

/**
 * Builds a `GRIDPAL_FAMILY_*` construction with the given periods.
 */
enum GridpalStatus gridpal_construct(uint32_t family,
                                     size_t q,
                                     size_t periods_rows,
                                     size_t periods_cols,
                                     struct GridpalWord **out);

/**
 * Exhaustive optimum of the factor count over all `q`-ary `m`-by-`n`
 * words. `kind` must be `GRIDPAL_KIND_PAL2D` or `GRIDPAL_KIND_HV`; a zero
 * `budget` selects the library default.
 */
enum GridpalStatus gridpal_search_optimum(size_t q,
                                          size_t m,
                                          size_t n,
                                          uint32_t kind,
                                          uint32_t objective,
                                          uint64_t budget,
                                          size_t threads,
                                          size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRIDPAL_H */
