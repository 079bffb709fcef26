#ifndef PVC4_H
#define PVC4_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum Pvc4Status {
  PVC4_STATUS_OK = 0,
  PVC4_STATUS_NULL_POINTER = 1,
  PVC4_STATUS_INVALID_VERTEX = 2,
  PVC4_STATUS_SELF_LOOP = 3,
  PVC4_STATUS_PARSE_ERROR = 4,
  PVC4_STATUS_INVALID_INSTANCE = 5,
  PVC4_STATUS_INVALID_ARGUMENT = 6,
  PVC4_STATUS_NODE_BUDGET_EXCEEDED = 7,
  PVC4_STATUS_INTERNAL = 8,
} Pvc4Status;

/**
 * A graph with an optional forbidden set `V1`.
 */
typedef struct Pvc4Graph Pvc4Graph;

/**
 * Outcome of a solve or minimization.
 */
typedef struct Pvc4Result Pvc4Result;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *pvc4_status_message(enum Pvc4Status status);

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *pvc4_last_error(void);

/**
 * A graph on `n` isolated vertices. Free with [`pvc4_graph_free`].
 */
struct Pvc4Graph *pvc4_graph_new(size_t n);

/**
 * # Safety
 * `graph` must be null or a handle from this library not yet freed.
 */
void pvc4_graph_free(struct Pvc4Graph *graph);

/**
 * Adds the edge `u v`. Adding an existing edge is a no-op.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
enum Pvc4Status pvc4_graph_add_edge(struct Pvc4Graph *graph, size_t u, size_t v);

/**
 * Marks `v` as forbidden, turning later solves into disjoint solves.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
enum Pvc4Status pvc4_graph_add_v1(struct Pvc4Graph *graph, size_t v);

/**
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t pvc4_graph_num_vertices(const struct Pvc4Graph *graph);

/**
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t pvc4_graph_num_edges(const struct Pvc4Graph *graph);

/**
 * Parses the text format (`p pvc4 n m`, `e u v`, `v1 u`, 1-based ids) into
 * a new graph stored in `*out`.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum Pvc4Status pvc4_graph_parse(const char *text, struct Pvc4Graph **out);

/**
 * Decides whether a cover of size at most `k` exists; if the graph has
 * forbidden vertices the cover must avoid them. `node_cap` limits search
 * nodes per disjoint solve, 0 meaning the default.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum Pvc4Status pvc4_solve(const struct Pvc4Graph *graph,
                           int64_t k,
                           uint64_t node_cap,
                           struct Pvc4Result **out);

/**
 * Finds a minimum cover (avoiding forbidden vertices, if any).
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum Pvc4Status pvc4_minimize(const struct Pvc4Graph *graph,
                              uint64_t node_cap,
                              struct Pvc4Result **out);

/**
 * Sets `*is_cover` to whether deleting `cover[0..len]` leaves no 4-path
 * and the set avoids every forbidden vertex.
 *
 * # Safety
 * `graph` must be a live handle, `cover` must point to `len` readable ids
 * (or be null with `len == 0`), and `is_cover` must be valid.
 */
enum Pvc4Status pvc4_verify(const struct Pvc4Graph *graph,
                            const size_t *cover,
                            size_t len,
                            bool *is_cover);

/**
 * # Safety
 * `result` must be null or a live handle.
 */
bool pvc4_result_feasible(const struct Pvc4Result *result);

/**
 * Number of vertices in the cover; 0 when infeasible.
 *
 * # Safety
 * `result` must be null or a live handle.
 */
size_t pvc4_result_cover_len(const struct Pvc4Result *result);

/**
 * Cover vertices in ascending order, owned by the result; null when
 * infeasible or empty.
 *
 * # Safety
 * `result` must be null or a live handle.
 */
const size_t *pvc4_result_cover(const struct Pvc4Result *result);

/**
 * # Safety
 * `result` must be null or a live handle.
 */
uint64_t pvc4_result_nodes(const struct Pvc4Result *result);

/**
 * # Safety
 * `result` must be null or a live handle.
 */
uint64_t pvc4_result_leaves(const struct Pvc4Result *result);

/**
 * # Safety
 * `result` must be null or a handle from this library not yet freed.
 */
void pvc4_result_free(struct Pvc4Result *result);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PVC4_H */
