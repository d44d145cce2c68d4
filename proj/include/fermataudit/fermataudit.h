/*
 * fermataudit — exact-arithmetic root analysis of the Fermat slope
 * polynomial family, behind a C ABI.
 *
 * Every entry point returns an fa_status; on failure fa_last_error()
 * carries a message for the calling thread. Results are opaque fa_doc
 * handles that render deterministically to JSON or line-oriented text.
 * All rational inputs and outputs are exact "num/den" strings in lowest
 * terms; no floating point crosses this boundary.
 */

#ifndef FERMATAUDIT_H
#define FERMATAUDIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(FA_BUILD_SHARED)
#define FA_API __declspec(dllexport)
#else
#define FA_API __declspec(dllimport)
#endif
#else
#define FA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status values double as process exit codes: 0 success, 2 invalid
 * parameters, 3 tolerance failure, 1 anything else. A claim verdict of
 * "fails" inside a report is a successful audit, not an error. */
typedef enum fa_status {
  FA_OK = 0,
  FA_ERR_INTERNAL = 1,
  FA_ERR_PARAMETER = 2,
  FA_ERR_TOLERANCE = 3
} fa_status;

typedef enum fa_format { FA_FORMAT_JSON = 0, FA_FORMAT_TEXT = 1 } fa_format;

/* Opaque audit document: an instance report, a grid of reports, a triple
 * report, a search result, an exponent reduction, or a diagonal scan. */
typedef struct fa_doc fa_doc;

FA_API const char* fa_version(void);

/* Message for the most recent failing call on the calling thread. Owned by
 * the library; valid until the next failing call on the same thread. */
FA_API const char* fa_last_error(void);

/* Claim-by-claim audit of the slope polynomial at one (p, u) instance.
 * u is a rational string strictly inside (0, 1), e.g. "1/2". epsilon is a
 * positive rational string or NULL for the default 1/10^30. */
FA_API fa_status fa_audit_instance(int64_t p, const char* u, const char* epsilon, fa_doc** out);

/* Audits u = i/(u_count + 1), i = 1..u_count, for every listed p; entries
 * are sorted by (p, u). Invalid instances are recorded per entry instead of
 * failing the grid. */
FA_API fa_status fa_audit_grid(const int64_t* ps, size_t ps_len, int64_t u_count,
                               const char* epsilon, fa_doc** out);

/* Residual analysis of one candidate triple (x, y, z) for exponent p. */
FA_API fa_status fa_audit_triple(int64_t x, int64_t y, int64_t z, int64_t p, fa_doc** out);

/* Exhaustive exact search of 1 <= x <= y < z <= bound for exponent p. */
FA_API fa_status fa_search(int64_t p, int64_t bound, fa_doc** out);

/* Smallest odd prime factor p of n with n = p*q, or p = 4 when n is a
 * power of two. Requires n > 2. */
FA_API fa_status fa_reduce_exponent(int64_t n, fa_doc** out);

/* Scans 1 <= x <= xmax for integers z with z^n = 2*x^n. Requires n > 2. */
FA_API fa_status fa_diagonal_check(int64_t n, int64_t xmax, fa_doc** out);

/* Renders the whole document. *out is a NUL-terminated UTF-8 buffer with LF
 * line endings; release it with fa_string_free. Rendering is deterministic:
 * equal documents produce identical bytes. */
FA_API fa_status fa_doc_render(const fa_doc* doc, fa_format format, char** out);

/* Grid documents contain one entry per (p, u) instance; every other
 * document has exactly one entry. */
FA_API size_t fa_doc_entry_count(const fa_doc* doc);
FA_API fa_status fa_doc_entry_render(const fa_doc* doc, size_t index, fa_format format,
                                     char** out);

/* Stable filename-safe entry label, e.g. "p3_u1-4". */
FA_API fa_status fa_doc_entry_label(const fa_doc* doc, size_t index, char** out);

FA_API void fa_doc_free(fa_doc* doc);
FA_API void fa_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FERMATAUDIT_H */
