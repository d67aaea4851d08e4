#ifndef DUPFREE_H
#define DUPFREE_H

/* This file is generated by cbindgen from dupfree-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes for every FFI call.
 */
typedef enum DfStatus {
  DF_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  DF_STATUS_NULL_ARGUMENT = 1,
  /**
   * A parameter combination outside an operation's domain.
   */
  DF_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Text could not be parsed as a word.
   */
  DF_STATUS_PARSE_ERROR = 3,
  /**
   * A rule was applied to a word shorter than it requires.
   */
  DF_STATUS_WORD_TOO_SHORT = 4,
  /**
   * The requested factor is not a square.
   */
  DF_STATUS_NOT_A_SQUARE = 5,
  /**
   * The separation requirement on L failed.
   */
  DF_STATUS_SEPARATION_VIOLATION = 6,
  /**
   * The requested disjoint blocks cannot fit.
   */
  DF_STATUS_INFEASIBLE_PLAN = 7,
  /**
   * A plan does not decompose the word it is applied to.
   */
  DF_STATUS_MALFORMED_PLAN = 8,
  /**
   * A configured budget was exceeded.
   */
  DF_STATUS_RESOURCE_LIMIT = 9,
  /**
   * The rate of an empty code is undefined.
   */
  DF_STATUS_EMPTY_CODE = 10,
  /**
   * Decoding found no candidate codeword.
   */
  DF_STATUS_NO_CANDIDATE = 11,
  /**
   * Decoding found more than one candidate codeword.
   */
  DF_STATUS_AMBIGUOUS = 12,
  /**
   * An output buffer is too small; the required size was reported.
   */
  DF_STATUS_BUFFER_TOO_SMALL = 13,
} DfStatus;

/**
 * Corruption models exposed over the ABI.
 */
typedef enum DfModel {
  DF_MODEL_UNRESTRICTED = 0,
  DF_MODEL_DISJOINT = 1,
  DF_MODEL_EQUAL_LENGTH = 2,
  DF_MODEL_DISJOINT_EQUAL_LENGTH = 3,
} DfModel;

/**
 * Opaque handle to a word over `Z_q`.
 */
typedef struct DfWord DfWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * A short static description of a status code.
 */
const char *df_status_message(enum DfStatus status);

/**
 * Parses a word from its text form (digits for `q <= 10`, comma-separated
 * integers otherwise). On success writes a new handle to `out`.
 *
 * # Safety
 * `text` must point to a NUL-terminated string; `out` must be valid.
 */
enum DfStatus df_word_parse(const char *text, uint32_t q, struct DfWord **out);

/**
 * Formats a word into a newly allocated NUL-terminated string.
 *
 * # Safety
 * `word` must be a live handle; `out` must be valid. Release the string
 * with `df_string_free`.
 */
enum DfStatus df_word_to_text(const struct DfWord *word, char **out);

/**
 * Number of letters; zero for NULL.
 *
 * # Safety
 * `word` must be NULL or a live handle.
 */
size_t df_word_len(const struct DfWord *word);

/**
 * Alphabet size of a word; zero for NULL.
 *
 * # Safety
 * `word` must be NULL or a live handle.
 */
uint32_t df_word_alphabet_size(const struct DfWord *word);

/**
 * Copies the letters of a word into `buf`. Writes the letter count to
 * `count`; returns `BufferTooSmall` when `cap` is insufficient (the
 * count is still written, letting callers size a second call).
 *
 * # Safety
 * `word` must be a live handle; `buf` must hold `cap` entries.
 */
enum DfStatus df_word_letters(const struct DfWord *word, uint32_t *buf, size_t cap, size_t *count);

/**
 * Releases a word handle. NULL is ignored.
 *
 * # Safety
 * `word` must be NULL or a handle not yet freed.
 */
void df_word_free(struct DfWord *word);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void df_string_free(char *s);

/**
 * Applies one tandem duplication (`uvw -> uvvw`, `|u| = prefix_len`,
 * `|v| = dup_len`) and writes the result handle to `out`.
 *
 * # Safety
 * `word` must be a live handle; `out` must be valid.
 */
enum DfStatus df_apply_duplication(const struct DfWord *word,
                                   size_t prefix_len,
                                   size_t dup_len,
                                   struct DfWord **out);

/**
 * Whether the word contains no square with half-length in `forbidden`.
 *
 * # Safety
 * `word` must be a live handle; `forbidden` must hold `forbidden_len`
 * entries; `out` must be valid.
 */
enum DfStatus df_is_codeword(const struct DfWord *word,
                             const size_t *forbidden,
                             size_t forbidden_len,
                             bool *out);

/**
 * Counts the duplication-free code of length `n` over `Z_q`.
 *
 * # Safety
 * `forbidden` must hold `forbidden_len` entries; `out` must be valid.
 */
enum DfStatus df_count_code(size_t n,
                            uint32_t q,
                            const size_t *forbidden,
                            size_t forbidden_len,
                            uint64_t *out);

/**
 * The code rate `(1/n) log_q(code_size)`.
 *
 * # Safety
 * `out` must be valid.
 */
enum DfStatus df_rate(uint64_t code_size, size_t n, uint32_t q, double *out);

/**
 * The difference transform of `word` for length `l`.
 *
 * # Safety
 * `word` must be a live handle; `out` must be valid.
 */
enum DfStatus df_phi(const struct DfWord *word, size_t l, struct DfWord **out);

/**
 * The inverse transform of `word` for length `l`.
 *
 * # Safety
 * `word` must be a live handle; `out` must be valid.
 */
enum DfStatus df_phi_inverse(const struct DfWord *word, size_t l, struct DfWord **out);

/**
 * Greedy extraction of disjoint duplications of length `l`; writes the
 * 1-based span bounds into `starts`/`ends` and the span count to `count`.
 * When `cap` is too small the count is still written and the status is
 * `BufferTooSmall`.
 *
 * # Safety
 * `word` must be a live handle; `starts` and `ends` must hold `cap`
 * entries; `count` must be valid.
 */
enum DfStatus df_extract_disjoint_duplications(const struct DfWord *word,
                                               size_t l,
                                               size_t *starts,
                                               size_t *ends,
                                               size_t cap,
                                               size_t *count);

/**
 * Decodes a word corrupted by duplications of the known length `l` back
 * to the length-`n` codeword. `Ok` means a unique decode; the handle is
 * written to `out`.
 *
 * # Safety
 * `word` must be a live handle; `out` must be valid.
 */
enum DfStatus df_decode_uniform(const struct DfWord *word, size_t l, size_t n, struct DfWord **out);

/**
 * Decodes under the equal-length model, trying every length in L. On
 * success also reports which length decoded via `length_used` (may be
 * NULL).
 *
 * # Safety
 * `word` must be a live handle; `lengths` must hold `lengths_len`
 * entries; `out` must be valid.
 */
enum DfStatus df_decode_equal_length(const struct DfWord *word,
                                     const size_t *lengths,
                                     size_t lengths_len,
                                     size_t n,
                                     struct DfWord **out,
                                     size_t *length_used);

/**
 * Exhaustive decode for the disjoint models (`Disjoint` or
 * `DisjointEqualLength`), bounded by `budget` search nodes.
 *
 * # Safety
 * `word` must be a live handle; `lengths` must hold `lengths_len`
 * entries; `out` must be valid.
 */
enum DfStatus df_decode_bruteforce(const struct DfWord *word,
                                   const size_t *lengths,
                                   size_t lengths_len,
                                   size_t n,
                                   enum DfModel model,
                                   size_t budget,
                                   struct DfWord **out);

/**
 * Draws a corruption with `t` duplications under `model`, deterministic
 * in the seed, and writes the corrupted word to `out`.
 *
 * # Safety
 * `word` must be a live handle; `lengths` must hold `lengths_len`
 * entries; `out` must be valid.
 */
enum DfStatus df_sample_corruption(const struct DfWord *word,
                                   enum DfModel model,
                                   const size_t *lengths,
                                   size_t lengths_len,
                                   size_t t,
                                   uint64_t seed,
                                   struct DfWord **out);

/**
 * Exhaustively verifies one construction (`theorem` in 1..=3) at bounded
 * scale, or the negative control when `theorem` is 0. Writes whether the
 * check passed to `passed` and, when `report` is non-NULL, the stable
 * text report.
 *
 * `max_events = 0` leaves the per-derivation event count unbounded.
 *
 * # Safety
 * `lengths` must hold `lengths_len` entries; `passed` must be valid;
 * `report`, if non-NULL, receives a string to release with
 * `df_string_free`.
 */
enum DfStatus df_verify(uint32_t theorem,
                        size_t n,
                        uint32_t q,
                        const size_t *lengths,
                        size_t lengths_len,
                        size_t max_len,
                        size_t max_events,
                        size_t cap,
                        uint64_t seed,
                        bool *passed,
                        char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DUPFREE_H */
