#ifndef CPCODE_H
#define CPCODE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CpcStatus {
  CPC_STATUS_OK = 0,
  CPC_STATUS_INVALID_ARGUMENT = 1,
  CPC_STATUS_NULL_POINTER = 2,
  CPC_STATUS_DECODE_FAILURE = 3,
  CPC_STATUS_BUFFER_TOO_SMALL = 4,
  CPC_STATUS_NOT_IN_MESSAGE_SPACE = 5,
  CPC_STATUS_INTERNAL = 6,
  CPC_STATUS_PANIC = 7,
} CpcStatus;

// A CP code over a prime or prime-power field.
typedef struct CpcCode CpcCode;

// Messages returned by the list decoder.
typedef struct CpcList CpcList;

// Guruswami-Sudan parameters for `(n, k, s)`.
typedef struct CpcGsParams {
  size_t c;
  size_t tau;
  // Negative when no word is decodable.
  int64_t t;
  size_t ell;
} CpcGsParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates the CP code of length `q - 1` with messages of degree at most `k`.
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum CpcStatus cpc_code_new(uint32_t q, size_t k, struct CpcCode **out);

// # Safety
// `code` must be null or a handle from [`cpc_code_new`] not yet freed.
void cpc_code_free(struct CpcCode *code);

// Code length `n`, or 0 for a null handle.
//
// # Safety
// `code` must be null or a live handle.
size_t cpc_code_length(const struct CpcCode *code);

// Encodes `f` (coefficients, constant term first) into `2 n` interleaved doubles.
//
// # Safety
// `coeffs` must hold `len` values and `out` must hold `out_len` doubles.
enum CpcStatus cpc_cp_encode(const struct CpcCode *code,
                             const uint32_t *coeffs,
                             size_t len,
                             double *out,
                             size_t out_len);

// Unique decoding. On success the message is written to `coeffs_out` and its
// length to `written`; `corrected` (optional) receives the error count.
//
// # Safety
// `word` must hold `word_len` doubles, `coeffs_out` `cap` values; `written`
// must be valid and `corrected` null or valid.
enum CpcStatus cpc_cp_decode(const struct CpcCode *code,
                             const double *word,
                             size_t word_len,
                             uint32_t *coeffs_out,
                             size_t cap,
                             size_t *written,
                             size_t *corrected);

// List decoding with multiplicity `s`; the handle is written to `out`.
//
// # Safety
// `word` must hold `word_len` doubles and `out` must be valid.
enum CpcStatus cpc_cp_list_decode(const struct CpcCode *code,
                                  const double *word,
                                  size_t word_len,
                                  size_t s,
                                  struct CpcList **out);

// Number of messages in a list, or 0 for a null handle.
//
// # Safety
// `list` must be null or a live handle.
size_t cpc_list_len(const struct CpcList *list);

// Copies message `index` into `coeffs_out`.
//
// # Safety
// `list` must be live, `coeffs_out` must hold `cap` values, `written` must be valid.
enum CpcStatus cpc_list_get(const struct CpcList *list,
                            size_t index,
                            uint32_t *coeffs_out,
                            size_t cap,
                            size_t *written);

// # Safety
// `list` must be null or a handle from [`cpc_cp_list_decode`] not yet freed.
void cpc_list_free(struct CpcList *list);

// # Safety
// `out` must be valid.
enum CpcStatus cpc_gs_params(size_t n, size_t k, size_t s, struct CpcGsParams *out);

// Exhaustive minimum distance of the code's field image.
//
// # Safety
// `code` must be live and `out` valid.
enum CpcStatus cpc_min_distance(const struct CpcCode *code, size_t *out);

// Static, NUL-terminated description of a status code.
const char *cpc_status_message(enum CpcStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CPCODE_H */
