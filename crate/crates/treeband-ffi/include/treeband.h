#ifndef TREEBAND_H
#define TREEBAND_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum TbStatus {
  TB_STATUS_OK = 0,
  TB_STATUS_NULL_POINTER = 1,
  TB_STATUS_PARSE = 2,
  TB_STATUS_INVALID_GRAPH = 3,
  TB_STATUS_INVALID_PARAMETER = 4,
  TB_STATUS_STRUCTURE = 5,
  TB_STATUS_SIZE_LIMIT = 6,
  TB_STATUS_BUDGET = 7,
  TB_STATUS_PRECONDITION = 8,
  TB_STATUS_UTF8 = 9,
  TB_STATUS_PANIC = 10,
} TbStatus;

/**
 * Opaque graph handle.
 */
typedef struct TbGraph TbGraph;

/**
 * Opaque tree-layout handle.
 */
typedef struct TbLayout TbLayout;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into the library from the same thread.
 */
const char *tb_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *tb_version(void);

/**
 * Graph on `n` vertices from `m` edges stored as `2m` endpoints.
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (or be null with `m == 0`)
 * and `out_graph` must be writable.
 */
enum TbStatus tb_graph_new(uintptr_t n,
                           const uintptr_t *edges,
                           uintptr_t m,
                           struct TbGraph **out_graph);

/**
 * Graph from the text format: `n m` then one `u v` line per edge.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out_graph` writable.
 */
enum TbStatus tb_graph_parse(const char *text, struct TbGraph **out_graph);

/**
 * # Safety
 * `g` must come from this library and not be used afterwards; null is ignored.
 */
void tb_graph_free(struct TbGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
uintptr_t tb_graph_vertex_count(const struct TbGraph *g);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
uintptr_t tb_graph_edge_count(const struct TbGraph *g);

/**
 * # Safety
 * `t` must come from this library and not be used afterwards; null is ignored.
 */
void tb_layout_free(struct TbLayout *t);

/**
 * Layout from parent pointers, `-1` marking the root.
 *
 * # Safety
 * `parents` must point to `n` readable values and `out_layout` be writable.
 */
enum TbStatus tb_layout_new(const int64_t *parents, uintptr_t n, struct TbLayout **out_layout);

/**
 * Writes parent pointers into `buf`, `-1` for the root. `len` must be the
 * layout's vertex count.
 *
 * # Safety
 * `t` must be a live layout handle and `buf` writable for `len` values.
 */
enum TbStatus tb_layout_parents(const struct TbLayout *t, int64_t *buf, uintptr_t len);

/**
 * Bandwidth of `t` with respect to `g`, after validating it.
 *
 * # Safety
 * Handles must be live and `out_bandwidth` writable.
 */
enum TbStatus tb_layout_bandwidth(const struct TbGraph *g,
                                  const struct TbLayout *t,
                                  uintptr_t *out_bandwidth);

/**
 * Exact treebandwidth and an optimal layout. `max_states` of 0 selects the
 * default budget.
 *
 * # Safety
 * `g` must be live; both outputs writable.
 */
enum TbStatus tb_exact_treebandwidth(const struct TbGraph *g,
                                     uint64_t max_states,
                                     uintptr_t *out_value,
                                     struct TbLayout **out_layout);

/**
 * Decides `tbw(G) <= k`. On yes, `*out_layout` receives a witness; on no
 * it is set to null.
 *
 * # Safety
 * `g` must be live; outputs writable.
 */
enum TbStatus tb_decide_treebandwidth(const struct TbGraph *g,
                                      uintptr_t k,
                                      uint64_t max_states,
                                      bool *out_yes,
                                      struct TbLayout **out_layout);

/**
 * Approximation pipeline. On acceptance `*out_layout` is set; on a
 * certified rejection it is null and `*out_accepted` false.
 *
 * # Safety
 * `g` must be live; outputs writable.
 */
enum TbStatus tb_approximate_treebandwidth(const struct TbGraph *g,
                                           uintptr_t k,
                                           bool *out_accepted,
                                           struct TbLayout **out_layout);

/**
 * Exact treewidth (small graphs).
 *
 * # Safety
 * `g` must be live; `out_value` writable.
 */
enum TbStatus tb_treewidth(const struct TbGraph *g, uintptr_t *out_value);

/**
 * Largest `k` with the fan `F_k` as a minor rooted at some vertex.
 *
 * # Safety
 * `g` must be live; `out_value` writable.
 */
enum TbStatus tb_fan_number(const struct TbGraph *g, uintptr_t *out_value);

/**
 * Largest number of internally disjoint paths between two vertices.
 *
 * # Safety
 * `g` must be live; `out_value` writable.
 */
enum TbStatus tb_dipole_number(const struct TbGraph *g, uintptr_t *out_value);

/**
 * p-centered colouring from a layout: writes `n` colours into `colours`
 * and the palette size into `out_palette`.
 *
 * # Safety
 * Handles live; `colours` writable for `len` values; `out_palette` writable.
 */
enum TbStatus tb_pcentered_colouring(const struct TbGraph *g,
                                     const struct TbLayout *t,
                                     uintptr_t p,
                                     uintptr_t *colours,
                                     uintptr_t len,
                                     uintptr_t *out_palette);

/**
 * Exhaustively checks that `colours` is p-centered. `max_sets` of 0
 * selects the default budget.
 *
 * # Safety
 * `g` live; `colours` readable for `len` values; `out_ok` writable.
 */
enum TbStatus tb_verify_pcentered(const struct TbGraph *g,
                                  const uintptr_t *colours,
                                  uintptr_t len,
                                  uintptr_t p,
                                  uint64_t max_sets,
                                  bool *out_ok);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* TREEBAND_H */
