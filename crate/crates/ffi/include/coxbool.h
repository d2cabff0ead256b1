#ifndef COXBOOL_H
#define COXBOOL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of an FFI call.
 */
typedef enum CoxStatus {
  COX_STATUS_OK = 0,
  COX_STATUS_NULL_POINTER = 1,
  COX_STATUS_INVALID_ARGUMENT = 2,
  COX_STATUS_PARSE = 3,
  COX_STATUS_SIZE_LIMIT = 4,
  COX_STATUS_UNSUPPORTED = 5,
  COX_STATUS_INTERNAL = 6,
  COX_STATUS_BUFFER_TOO_SMALL = 7,
  COX_STATUS_PANIC = 8,
} CoxStatus;

/**
 * Opaque element of a finite Coxeter group.
 */
typedef struct CoxElement CoxElement;

/**
 * Opaque Coxeter graph.
 */
typedef struct CoxGraph CoxGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call on the same thread.
 */
const char *cox_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` is null or was returned by this library and not yet freed.
 */
void cox_string_free(char *s);

/**
 * Coxeter graph of a named family (`"A"`, `"C"`, `"D"`, `"AffA"`, ...).
 *
 * # Safety
 * `family` is a valid C string; `out` is writable.
 */
enum CoxStatus cox_graph_new(const char *family, size_t n, struct CoxGraph **out);

/**
 * # Safety
 * `g` is null or a handle from [`cox_graph_new`] not yet freed.
 */
void cox_graph_free(struct CoxGraph *g);

/**
 * # Safety
 * `g` is a valid handle; `out` is writable.
 */
enum CoxStatus cox_graph_vertex_count(const struct CoxGraph *g, size_t *out);

/**
 * Number of independent sets of size `k`, as a decimal string.
 *
 * # Safety
 * `g` is a valid handle; `out` is writable.
 */
enum CoxStatus cox_graph_independent_count(const struct CoxGraph *g, size_t k, char **out);

/**
 * Independent-set total of the graph with the generators `descents[0..len]`
 * removed, as a decimal string.
 *
 * # Safety
 * `g` is a valid handle; `descents` points to `len` readable values (or is
 * null with `len == 0`); `out` is writable.
 */
enum CoxStatus cox_graph_count_above_descents(const struct CoxGraph *g,
                                              const size_t *descents,
                                              size_t len,
                                              char **out);

/**
 * Parses one-line notation for an element of A, C or D of rank `n`.
 *
 * # Safety
 * `family` and `text` are valid C strings; `out` is writable.
 */
enum CoxStatus cox_element_parse(const char *family,
                                 size_t n,
                                 const char *text,
                                 struct CoxElement **out);

/**
 * # Safety
 * `e` is null or a handle from [`cox_element_parse`] not yet freed.
 */
void cox_element_free(struct CoxElement *e);

/**
 * # Safety
 * `e` is a valid handle; `out` is writable.
 */
enum CoxStatus cox_element_length(const struct CoxElement *e, size_t *out);

/**
 * Writes the 0-based ids of the right descents into `buf[0..cap]` and their
 * number into `out_len`. With a short buffer, `out_len` still receives the
 * required size and the call returns `BufferTooSmall`.
 *
 * # Safety
 * `e` is a valid handle; `buf` has room for `cap` values (or is null with
 * `cap == 0`); `out_len` is writable.
 */
enum CoxStatus cox_element_descents(const struct CoxElement *e,
                                    size_t *buf,
                                    size_t cap,
                                    size_t *out_len);

/**
 * Number of Boolean intervals with minimum `e`, as a decimal string.
 *
 * # Safety
 * `e` is a valid handle; `out` is writable.
 */
enum CoxStatus cox_element_count_above(const struct CoxElement *e, char **out);

/**
 * One-line notation of `e`.
 *
 * # Safety
 * `e` is a valid handle; `out` is writable.
 */
enum CoxStatus cox_element_to_string(const struct CoxElement *e, char **out);

/**
 * Number of rank-`k` Boolean intervals in the weak order of A, C or D of
 * rank `n`, as a decimal string.
 *
 * # Safety
 * `family` is a valid C string; `out` is writable.
 */
enum CoxStatus cox_global_rank_count(const char *family, size_t n, size_t k, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COXBOOL_H */
