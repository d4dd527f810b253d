#ifndef UCYCLE_UCYCLE_H
#define UCYCLE_UCYCLE_H

/*
 * ucycle: universal cycles for constrained word classes.
 *
 * A universal cycle for a class of n-letter words over a k-letter alphabet
 * is a cyclic string whose n-letter windows spell every member exactly
 * once. The library builds the transition digraph of a class (windows as
 * vertices, members as edges), decides whether an Euler circuit exists,
 * extracts one as a cycle, and independently verifies candidate cycles.
 *
 * All entry points return a ucy_status; results travel through out
 * parameters. Handles are opaque and freed with their destroy function.
 * Strings returned through char** are owned by the caller and released
 * with ucy_string_free. On any failure ucy_last_error() describes what
 * went wrong for the current thread.
 *
 * Typical use:
 *
 *   ucy_class_params params = {0};
 *   params.word_length = 3;
 *   params.alphabet_size = 3;
 *   ucy_class *cls = NULL;
 *   ucy_digraph *graph = NULL;
 *   char *cycle = NULL;
 *   if (ucy_class_create("noninjective", &params, &cls) == UCY_OK &&
 *       ucy_digraph_build(cls, &graph) == UCY_OK &&
 *       ucy_digraph_cycle(graph, 0, &cycle) == UCY_OK)
 *       printf("%s\n", cycle);
 *   ucy_string_free(cycle);
 *   ucy_digraph_destroy(graph);
 *   ucy_class_destroy(cls);
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(UCYCLE_BUILD)
#    define UCYCLE_API __declspec(dllexport)
#  else
#    define UCYCLE_API __declspec(dllimport)
#  endif
#else
#  define UCYCLE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ucy_class ucy_class;
typedef struct ucy_digraph ucy_digraph;

typedef enum ucy_status {
    UCY_OK = 0,
    UCY_ERROR_INVALID_ARGUMENT = 1,
    UCY_ERROR_CAP_EXCEEDED = 2,     /* word space k^n over the enumeration cap */
    UCY_ERROR_UNSUPPORTED = 3,      /* e.g. digraph for n = 1 */
    UCY_ERROR_NOT_EULERIAN = 4,     /* cycle requested, none exists */
    UCY_ERROR_OUT_OF_RANGE = 5,     /* index past the end of a listing */
    UCY_ERROR_BUFFER_TOO_SMALL = 6,
    UCY_ERROR_INTERNAL = 7
} ucy_status;

typedef enum ucy_existence {
    UCY_NOT_EXISTS = 0,
    UCY_EXISTS = 1,
    UCY_UNSETTLED = 2
} ucy_existence;

/*
 * Class construction. Registered class names:
 *
 *   all_words injective noninjective surjective nonsurjective
 *   alternating legal_ranking illegal_ranking password nonpassword
 *
 * alphabet_size may be 0 where the class implies it: rankings use k =
 * word_length, and the category classes (alternating, password,
 * nonpassword) use the sum of category_sizes. alternating needs exactly
 * two category sizes; password and nonpassword at least one; the rest
 * take none. symbols, when given, supplies one distinct display character
 * per letter; NULL picks a default. enumeration_cap of 0 keeps the
 * default of 10^7 words.
 */
typedef struct ucy_class_params {
    int32_t word_length;
    int32_t alphabet_size;
    const int32_t *category_sizes;
    int32_t category_count;
    const char *symbols;
    uint64_t enumeration_cap;
} ucy_class_params;

typedef struct ucy_class_info {
    int32_t word_length;
    int32_t alphabet_size;
    int32_t has_word_space;   /* 0 when k^n overflows 64 bits */
    uint64_t word_space;      /* k^n when has_word_space */
    int32_t has_closed_count; /* closed-form class size known */
    uint64_t closed_count;
    uint64_t enumeration_cap;
} ucy_class_info;

typedef struct ucy_existence_report {
    int32_t eulerian; /* 1 iff a universal cycle exists */
    uint64_t edge_count;
    uint64_t vertex_count;
    uint64_t degree_violations;     /* vertices with in-degree != out-degree */
    uint64_t nontrivial_components; /* weakly connected components holding an edge */
} ucy_existence_report;

typedef enum ucy_verify_outcome {
    UCY_VERIFY_VALID = 0,
    UCY_VERIFY_LENGTH_MISMATCH = 1,
    UCY_VERIFY_NON_MEMBER_WINDOW = 2,
    UCY_VERIFY_DUPLICATE_WINDOW = 3,
    UCY_VERIFY_INCOMPLETE = 4
} ucy_verify_outcome;

#define UCY_MAX_WINDOW 256

typedef struct ucy_verify_result {
    int32_t valid;
    ucy_verify_outcome outcome;
    uint64_t expected_length;
    uint64_t actual_length;
    uint64_t window_index; /* offending window; second occurrence for duplicates */
    uint64_t first_index;  /* first occurrence for duplicates */
    uint64_t missing_count;
    char window[UCY_MAX_WINDOW]; /* offending window, NUL-terminated */
} ucy_verify_result;

/* ---- lifecycle ---- */

UCYCLE_API ucy_status ucy_class_create(const char *class_name, const ucy_class_params *params,
                                       ucy_class **out_class);
UCYCLE_API void ucy_class_destroy(ucy_class *cls);

UCYCLE_API ucy_status ucy_digraph_build(const ucy_class *cls, ucy_digraph **out_graph);
UCYCLE_API void ucy_digraph_destroy(ucy_digraph *graph);

/* ---- class queries ---- */

UCYCLE_API ucy_status ucy_class_get_info(const ucy_class *cls, ucy_class_info *out_info);

/* Display symbols, NUL-terminated; needs k + 1 bytes. */
UCYCLE_API ucy_status ucy_class_get_symbols(const ucy_class *cls, char *buffer, size_t size);

/* Membership of one word, written with the class's display symbols. */
UCYCLE_API ucy_status ucy_class_contains(const ucy_class *cls, const char *word,
                                         int32_t *out_member);

/* Class size; enumerates when the cap permits, else falls back to the
 * closed form. Both routes must agree when available. */
UCYCLE_API ucy_status ucy_class_count(const ucy_class *cls, uint64_t *out_count);

/* What the existence rule for this class says, with the reason spelled
 * out. citation may be NULL when only the verdict is wanted. */
UCYCLE_API ucy_status ucy_class_theorem(const ucy_class *cls, ucy_existence *out_verdict,
                                        char *citation, size_t citation_size);

/* Common in/out degree the class's degree rule predicts for one window of
 * length n - 1, when a rule is bound and covers that window; out_known is
 * 0 otherwise. */
UCYCLE_API ucy_status ucy_class_predicted_degree(const ucy_class *cls, const char *window,
                                                 int32_t *out_known, uint64_t *out_degree);

/* ---- digraph queries ---- */

UCYCLE_API ucy_status ucy_digraph_report(const ucy_digraph *graph,
                                         ucy_existence_report *out_report);

/* Unbalanced vertices, by ascending index below the count reported in
 * ucy_existence_report.degree_violations. */
UCYCLE_API ucy_status ucy_digraph_violation(const ucy_digraph *graph, uint64_t index,
                                            char *vertex, size_t vertex_size,
                                            uint64_t *in_degree, uint64_t *out_degree);

/* Vertex listing with the vertex's weakly-connected-component id. */
UCYCLE_API ucy_status ucy_digraph_vertex(const ucy_digraph *graph, uint64_t index, char *vertex,
                                         size_t vertex_size, uint64_t *component);

/* Edge listing: the member word and the component it belongs to. */
UCYCLE_API ucy_status ucy_digraph_edge(const ucy_digraph *graph, uint64_t index, char *word,
                                       size_t word_size, uint64_t *component);

/* The universal cycle, as a display string of length edge_count. With
 * canonical_rotation nonzero the cycle is rotated to its lexicographically
 * least form. Fails with UCY_ERROR_NOT_EULERIAN when none exists. */
UCYCLE_API ucy_status ucy_digraph_cycle(const ucy_digraph *graph, int32_t canonical_rotation,
                                        char **out_cycle);

/* Window the extracted cycle starts from. */
UCYCLE_API ucy_status ucy_digraph_start_vertex(const ucy_digraph *graph, char *vertex,
                                               size_t vertex_size);

/* Graphviz rendering of the digraph. */
UCYCLE_API ucy_status ucy_digraph_dot(const ucy_digraph *graph, char **out_dot);

/* ---- verification ---- */

/* Checks a candidate cycle against the class definition by scanning its
 * cyclic windows; independent of the digraph machinery. The candidate is
 * written with the class's display symbols. A candidate that fails to
 * parse is UCY_ERROR_INVALID_ARGUMENT; a well-formed candidate that is
 * not a universal cycle is UCY_OK with out_result->valid == 0. */
UCYCLE_API ucy_status ucy_verify(const ucy_class *cls, const char *candidate,
                                 ucy_verify_result *out_result);

UCYCLE_API const char *ucy_verify_outcome_name(ucy_verify_outcome outcome);

/* ---- misc ---- */

UCYCLE_API void ucy_string_free(char *s);

UCYCLE_API const char *ucy_status_name(ucy_status status);

/* Description of the last failure on this thread; empty when the last
 * call succeeded. */
UCYCLE_API const char *ucy_last_error(void);

UCYCLE_API const char *ucy_version(void);

#ifdef __cplusplus
}
#endif

#endif /* UCYCLE_UCYCLE_H */
