#ifndef PATHPART_H
#define PATHPART_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum PpStatus {
  PP_STATUS_OK = 0,
  PP_STATUS_NULL_POINTER = 1,
  PP_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed JSON or word literal.
   */
  PP_STATUS_PARSE = 3,
  /**
   * Well-formed input describing an invalid object.
   */
  PP_STATUS_INVALID = 4,
  /**
   * The word is not in the domain.
   */
  PP_STATUS_NOT_IN_DOMAIN = 5,
  /**
   * A search or enumeration limit was reached.
   */
  PP_STATUS_LIMIT = 6,
  /**
   * Internal panic; the handle should not be reused.
   */
  PP_STATUS_INTERNAL = 7,
} PpStatus;

/**
 * A decorated graph.
 */
typedef struct PpDecGraph PpDecGraph;

/**
 * A partial group of any supported kind.
 */
typedef struct PpPartial PpPartial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, a static string.
 */
const char *pp_version(void);

/**
 * Message of the last failure on this thread. Valid until the next call
 * that fails.
 */
const char *pp_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void pp_string_free(char *s);

/**
 * Parses a decorated graph.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum PpStatus pp_decgraph_from_json(const char *json_text, struct PpDecGraph **out_graph);

/**
 * # Safety
 * `g` must be null or a handle from [`pp_decgraph_from_json`].
 */
void pp_decgraph_free(struct PpDecGraph *g);

/**
 * Parses a handle spec (any kind).
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum PpStatus pp_partial_from_json(const char *json_text, struct PpPartial **out_partial);

/**
 * The partial group of a decorated graph. The graph stays owned by the
 * caller.
 *
 * # Safety
 * `g` must be a live graph handle and `out` a valid pointer.
 */
enum PpStatus pp_partial_build(const struct PpDecGraph *g, struct PpPartial **out_partial);

/**
 * # Safety
 * `p` must be null or a partial-group handle from this library.
 */
void pp_partial_free(struct PpPartial *p);

/**
 * Whether `elem` (element text, e.g. `"a b.2"`) is an element.
 *
 * # Safety
 * Pointers must be valid; `elem` nul-terminated.
 */
enum PpStatus pp_partial_contains(const struct PpPartial *p, const char *elem, bool *out_result);

/**
 * Whether `word` (elements separated by `|`) lies in the domain.
 *
 * # Safety
 * Pointers must be valid; `word` nul-terminated.
 */
enum PpStatus pp_partial_in_domain(const struct PpPartial *p, const char *word, bool *out_result);

/**
 * Product of `word`; the returned text must be freed with
 * [`pp_string_free`]. Fails with `NotInDomain` outside the domain.
 *
 * # Safety
 * Pointers must be valid; `word` nul-terminated.
 */
enum PpStatus pp_partial_product(const struct PpPartial *p, const char *word, char **out_text);

/**
 * Number of elements of size at most `max_size`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum PpStatus pp_partial_element_count(const struct PpPartial *p,
                                       uintptr_t max_size,
                                       uintptr_t *out_count);

/**
 * Checks the axioms up to the bounds; `out_passed` is false on a
 * violation. Fails with `Limit` if the enumeration cap is reached.
 *
 * # Safety
 * Pointers must be valid.
 */
enum PpStatus pp_partial_check_axioms(const struct PpPartial *p,
                                      uintptr_t max_elem_size,
                                      uintptr_t max_word_len,
                                      bool *out_passed);

/**
 * Order of the automorphism group of a decorated graph.
 *
 * # Safety
 * Pointers must be valid.
 */
enum PpStatus pp_decgraph_aut_order(const struct PpDecGraph *g, uintptr_t *out_order);

/**
 * Whether the graph is recovered from its partial group using elements
 * of size at most `max_elem_size`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum PpStatus pp_decgraph_recover(const struct PpDecGraph *g,
                                  uintptr_t max_elem_size,
                                  bool *out_found);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PATHPART_H */
