/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef KNOTCERT_H
#define KNOTCERT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum KcStatus {
  /**
   * The call succeeded and the checked property holds.
   */
  KC_STATUS_OK = 0,
  /**
   * The call succeeded and the checked property does not hold.
   */
  KC_STATUS_REFUTED = 1,
  /**
   * Malformed JSON, unknown labels, invalid diagram and the like.
   */
  KC_STATUS_INVALID_INPUT = 2,
  /**
   * A required pointer argument was null.
   */
  KC_STATUS_NULL_POINTER = 3,
  /**
   * A bug; the message says more.
   */
  KC_STATUS_INTERNAL = 4,
  /**
   * Certification hit the crossing bound on some cycle.
   */
  KC_STATUS_INCONCLUSIVE = 5,
} KcStatus;

typedef struct KcDiagram KcDiagram;

typedef struct KcGraph KcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or "" after a success.
 * Valid until the next knotcert call on the same thread.
 */
const char *kc_last_error(void);

/**
 * Library version, static storage.
 */
const char *kc_version(void);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void kc_string_free(char *s);

/**
 * Parses a graph file (`{"vertices": [...], "edges": [[a, b], ...]}`).
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum KcStatus kc_graph_from_json(const char *json, struct KcGraph **out);

/**
 * The graph obtained from K7 by the standard move script.
 *
 * # Safety
 * `out` must be writable.
 */
enum KcStatus kc_graph_construct_g7(struct KcGraph **out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum KcStatus kc_graph_to_json(const struct KcGraph *g, char **out);

/**
 * # Safety
 * `g` must be a live handle; the count pointers may be null.
 */
enum KcStatus kc_graph_counts(const struct KcGraph *g, size_t *vertices, size_t *edges);

/**
 * `KC_STATUS_OK` with the vertex map as a JSON object in `witness` (if not
 * null), or `KC_STATUS_REFUTED`.
 *
 * # Safety
 * `a` and `b` must be live handles; `witness` may be null.
 */
enum KcStatus kc_graph_is_isomorphic(const struct KcGraph *a,
                                     const struct KcGraph *b,
                                     char **witness);

/**
 * # Safety
 * `g` must be a handle from this library or null; it is invalid afterwards.
 */
void kc_graph_free(struct KcGraph *g);

/**
 * Parses a diagram file. Reference errors are reported here; structural
 * checks are left to [`kc_diagram_validate`].
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum KcStatus kc_diagram_from_json(const char *json, struct KcDiagram **out);

/**
 * `KC_STATUS_OK` if the diagram is valid, else `KC_STATUS_REFUTED` with the
 * violations as a JSON array in `violations` (if not null).
 *
 * # Safety
 * `d` must be a live handle; `violations` may be null.
 */
enum KcStatus kc_diagram_validate(const struct KcDiagram *d, char **violations);

/**
 * Certifies every cycle. `KC_STATUS_OK` when knotless, `KC_STATUS_REFUTED`
 * when a knot is found, `KC_STATUS_INCONCLUSIVE` otherwise. The JSON
 * report goes to `report` if not null.
 *
 * # Safety
 * `d` must be a live handle; `report` may be null.
 */
enum KcStatus kc_diagram_certify(const struct KcDiagram *d, size_t max_crossings, char **report);

/**
 * `KC_STATUS_OK` when some disjoint cycle pair has nonzero linking number.
 *
 * # Safety
 * `d` must be a live handle; `report` may be null.
 */
enum KcStatus kc_diagram_links(const struct KcDiagram *d, char **report);

/**
 * Checks a vertex permutation given in cycle notation, e.g. `(c h)(e i)`;
 * unmentioned vertices are fixed.
 *
 * # Safety
 * `d` must be a live handle; `cycles` a NUL-terminated string.
 */
enum KcStatus kc_diagram_check_symmetry(const struct KcDiagram *d,
                                        const char *cycles,
                                        bool reflect,
                                        bool flip);

/**
 * # Safety
 * `d` must be a handle from this library or null; it is invalid afterwards.
 */
void kc_diagram_free(struct KcDiagram *d);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KNOTCERT_H */
