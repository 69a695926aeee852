#ifndef INTERNORM_H
#define INTERNORM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. Library errors use the same numbers as the CLI exit codes.
 */
typedef enum InternormStatus {
  INTERNORM_STATUS_OK = 0,
  INTERNORM_STATUS_PARSE = 2,
  INTERNORM_STATUS_VALIDATION = 3,
  INTERNORM_STATUS_DEGENERATE = 4,
  INTERNORM_STATUS_RESOURCE = 5,
  INTERNORM_STATUS_NULL_POINTER = 6,
  INTERNORM_STATUS_INVALID_UTF8 = 7,
  INTERNORM_STATUS_INDEX_OUT_OF_RANGE = 8,
  INTERNORM_STATUS_PANIC = 9,
} InternormStatus;

/**
 * Parsed ribbon graph.
 */
typedef struct InternormGraph InternormGraph;

/**
 * Lattice polytope with integer vertices.
 */
typedef struct InternormPolytope InternormPolytope;

/**
 * Basic counts of a graph.
 */
typedef struct InternormCounts {
  size_t vertices;
  size_t edges;
  size_t faces;
  size_t genus;
  size_t components;
} InternormCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call into the library on this thread.
 */
const char *internorm_last_error(void);

/**
 * Parses a ribbon-graph file held in a NUL-terminated UTF-8 string.
 *
 * # Safety
 * `text` must be a valid C string and `out` a valid pointer.
 */
enum InternormStatus internorm_graph_parse(const char *text, struct InternormGraph **out);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `graph` must come from [`internorm_graph_parse`] and not be used afterwards.
 */
void internorm_graph_free(struct InternormGraph *graph);

/**
 * # Safety
 * `graph` and `out` must be valid pointers.
 */
enum InternormStatus internorm_graph_counts(const struct InternormGraph *graph,
                                            struct InternormCounts *out);

/**
 * Intersection norm of the class `class[0..len]`, which must have length 2·genus.
 *
 * # Safety
 * `graph` and `out` must be valid; `class` must hold `len` integers.
 */
enum InternormStatus internorm_norm(const struct InternormGraph *graph,
                                    const int64_t *class_,
                                    size_t len,
                                    size_t max_edges,
                                    uint64_t *out);

/**
 * Same value as [`internorm_norm`], found by the minimum-cycle search.
 *
 * # Safety
 * As for [`internorm_norm`].
 */
enum InternormStatus internorm_norm_oracle(const struct InternormGraph *graph,
                                           const int64_t *class_,
                                           size_t len,
                                           uint32_t bound,
                                           uint64_t *out);

/**
 * Dual unit ball of the norm.
 *
 * # Safety
 * `graph` and `out` must be valid pointers.
 */
enum InternormStatus internorm_dual_ball(const struct InternormGraph *graph,
                                         size_t max_edges,
                                         struct InternormPolytope **out);

/**
 * Releases a polytope. Null is ignored.
 *
 * # Safety
 * `polytope` must come from this library and not be used afterwards.
 */
void internorm_polytope_free(struct InternormPolytope *polytope);

/**
 * Ambient dimension; 0 for null.
 *
 * # Safety
 * `polytope` must be null or valid.
 */
size_t internorm_polytope_dim(const struct InternormPolytope *polytope);

/**
 * Number of vertices; 0 for null.
 *
 * # Safety
 * `polytope` must be null or valid.
 */
size_t internorm_polytope_vertex_count(const struct InternormPolytope *polytope);

/**
 * Copies vertex `index` (in sorted order) into `out[0..dim]`.
 *
 * # Safety
 * `polytope` must be valid and `out` must have room for `dim` integers.
 */
enum InternormStatus internorm_polytope_vertex(const struct InternormPolytope *polytope,
                                               size_t index,
                                               int64_t *out);

/**
 * Realizability report as text. Release the string with [`internorm_string_free`].
 *
 * # Safety
 * `graph` and `out` must be valid pointers.
 */
enum InternormStatus internorm_certify(const struct InternormGraph *graph,
                                       size_t max_edges,
                                       char **out);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void internorm_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INTERNORM_H */
