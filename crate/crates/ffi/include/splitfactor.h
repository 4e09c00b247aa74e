#ifndef SPLITFACTOR_H
#define SPLITFACTOR_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum {
  SF_STATUS_OK = 0,
  SF_STATUS_NULL_POINTER = 1,
  SF_STATUS_INVALID_ARGUMENT = 2,
  SF_STATUS_TOO_MANY_VERTICES = 3,
  SF_STATUS_NOT_SPLIT = 4,
  SF_STATUS_INVALID_BIPARTITION = 5,
  SF_STATUS_PARSE = 6,
  /**
   * Any other library error; see the message.
   */
  SF_STATUS_FAILED = 7,
  /**
   * A Rust panic was caught at the boundary.
   */
  SF_STATUS_PANIC = 8,
} SfStatus;

/**
 * The factor multigraph of a split graph.
 */
typedef struct SfFactorGraph SfFactorGraph;

/**
 * A simple graph.
 */
typedef struct SfGraph SfGraph;

/**
 * A graph with a designated clique side `K` and independent side `I`.
 */
typedef struct SfSplitGraph SfSplitGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL.
 *
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *sf_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *sf_version(void);

/**
 * Edgeless graph on `n` vertices.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
SfStatus sf_graph_new(size_t n, SfGraph **out);

/**
 * Decodes a NUL-terminated graph6 string.
 *
 * # Safety
 * `code` must be NUL-terminated; `out` must be valid for one write.
 */
SfStatus sf_graph_from_graph6(const char *code, SfGraph **out);

/**
 * # Safety
 * `g` must be a handle from this library that has not been freed.
 */
SfStatus sf_graph_add_edge(SfGraph *g, size_t u, size_t v);

/**
 * Number of vertices, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t sf_graph_order(const SfGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` valid for one write.
 */
SfStatus sf_graph_has_edge(const SfGraph *g, size_t u, size_t v, bool *out);

/**
 * graph6 encoding as a new string; free it with [`sf_string_free`].
 *
 * # Safety
 * `g` must be a live handle and `out` valid for one write.
 */
SfStatus sf_graph_to_graph6(const SfGraph *g, char **out);

/**
 * Number of 2-switches of the graph.
 *
 * # Safety
 * `g` must be a live handle and `out` valid for one write.
 */
SfStatus sf_graph_switch_degree(const SfGraph *g, size_t *out);

/**
 * Property flags: bit 0 active, bit 1 indecomposable, bit 2 prime, bit 3 split.
 *
 * # Safety
 * `g` must be a live handle and `out` valid for one write.
 */
SfStatus sf_graph_properties(const SfGraph *g, uint32_t *out);

/**
 * Number of factors in the canonical decomposition; 0 for the empty graph.
 *
 * # Safety
 * `g` must be a live handle and `out` valid for one write.
 */
SfStatus sf_graph_factor_count(const SfGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be NULL or a handle that has not been freed.
 */
void sf_graph_free(SfGraph *g);

/**
 * Split graph using the first bipartition in K-bitmask order.
 *
 * # Safety
 * `g` must be a live handle and `out` valid for one write.
 */
SfStatus sf_split_auto(const SfGraph *g, SfSplitGraph **out);

/**
 * Split graph with the given sides.
 *
 * # Safety
 * `g` must be a live handle and `out` valid for one write.
 */
SfStatus sf_split_new(const SfGraph *g, uint64_t k_mask, uint64_t i_mask, SfSplitGraph **out);

/**
 * Writes the clique and independent sides as bit masks.
 *
 * # Safety
 * `s` must be a live handle; `k_mask` and `i_mask` valid for one write each.
 */
SfStatus sf_split_sides(const SfSplitGraph *s, uint64_t *k_mask, uint64_t *i_mask);

/**
 * Copy of the underlying graph as a new handle.
 *
 * # Safety
 * `s` must be a live handle and `out` valid for one write.
 */
SfStatus sf_split_graph(const SfSplitGraph *s, SfGraph **out);

/**
 * Inverse: the sides swap roles, cross edges are kept.
 *
 * # Safety
 * `s` must be a live handle and `out` valid for one write.
 */
SfStatus sf_split_invert(const SfSplitGraph *s, SfSplitGraph **out);

/**
 * Co-inverse: same sides, each independent neighbourhood complemented in `K`.
 *
 * # Safety
 * `s` must be a live handle and `out` valid for one write.
 */
SfStatus sf_split_co_invert(const SfSplitGraph *s, SfSplitGraph **out);

/**
 * # Safety
 * `s` must be NULL or a handle that has not been freed.
 */
void sf_split_free(SfSplitGraph *s);

/**
 * Factor multigraph on the independent side.
 *
 * # Safety
 * `s` must be a live handle and `out` valid for one write.
 */
SfStatus sf_phi(const SfSplitGraph *s, SfFactorGraph **out);

/**
 * Multiplicity of the pair `{u, v}`, in original vertex numbers.
 *
 * # Safety
 * `f` must be a live handle and `out` valid for one write.
 */
SfStatus sf_factor_sigma(const SfFactorGraph *f, size_t u, size_t v, uint64_t *out);

/**
 * Total multiplicity, equal to the number of 2-switches.
 *
 * # Safety
 * `f` must be a live handle and `out` valid for one write.
 */
SfStatus sf_factor_size(const SfFactorGraph *f, uint64_t *out);

/**
 * Flags: bit 0 simple, bit 1 complete, bit 2 connected.
 *
 * # Safety
 * `f` must be a live handle and `out` valid for one write.
 */
SfStatus sf_factor_properties(const SfFactorGraph *f, uint32_t *out);

/**
 * # Safety
 * `f` must be NULL or a handle that has not been freed.
 */
void sf_factor_free(SfFactorGraph *f);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must be NULL or a string from this library that has not been freed.
 */
void sf_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPLITFACTOR_H */
