#ifndef HOMTOP_H
#define HOMTOP_H

/* C interface to the homtop library.
 *
 * Graphs travel as JSON documents:
 *   {"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "b"]], "basepoint": "b"}
 * Loops are edges from a vertex to itself; "basepoint" may be null or absent
 * for unpointed graphs and must name a looped vertex otherwise.
 *
 * Every function that can fail returns a homtop_status; on failure
 * homtop_last_error() describes the problem for the calling thread.  Strings
 * returned through char** out parameters are heap-allocated and must be
 * released with homtop_string_free().
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum homtop_status {
  HOMTOP_OK = 0,
  HOMTOP_PARSE_ERROR = 1,
  HOMTOP_INVALID_ARGUMENT = 2,
  HOMTOP_LIMIT_EXCEEDED = 3,
  HOMTOP_INTERNAL_ERROR = 4
} homtop_status;

typedef struct homtop_graph homtop_graph;

const char* homtop_version(void);

/* Last error message for the calling thread; empty string when clear. */
const char* homtop_last_error(void);

void homtop_string_free(char* s);

/* ------------------------------------------------------------- graphs --- */

homtop_status homtop_graph_from_json(const char* text, homtop_graph** out);
homtop_status homtop_graph_to_json(const homtop_graph* g, char** out);
void homtop_graph_free(homtop_graph* g);

int homtop_graph_order(const homtop_graph* g);
long long homtop_graph_edge_count(const homtop_graph* g);
/* Basepoint vertex index, or -1 when the graph is unpointed. */
int homtop_graph_basepoint(const homtop_graph* g);

/* ------------------------------------------------------------ reports --- */

/* Multihom poset of maps source -> target plus its homotopy invariants.
 * pointed != 0 requires basepoints on both graphs. */
homtop_status homtop_hom_report(const homtop_graph* source, const homtop_graph* target,
                                int pointed, char** out_json);

/* kind: "categorical", "cartesian", "smash" or "exponential"; the result is
 * a graph JSON document (smash and exponential require basepoints). */
homtop_status homtop_product(const homtop_graph* a, const homtop_graph* b, const char* kind,
                             char** out_json);

/* Dismantle the graph by folds and report the fold sequence and core. */
homtop_status homtop_fold_report(const homtop_graph* g, char** out_json);

/* Loop graph of based closed walks of length bound.  depth 2 iterates once
 * more on the looped part of the first loop graph. */
homtop_status homtop_loop_report(const homtop_graph* g, int bound, int depth, char** out_json);

/* ------------------------------------------------------------- verify --- */

/* JSON array of registered check names. */
homtop_status homtop_verify_list(char** out_json);

/* Runs a named check.  options_json may be NULL or an object with any of
 * "size", "trials", "seed", "n", "bound", "threads".  On success *out_pass
 * is 1 when the check passed and 0 otherwise. */
homtop_status homtop_verify(const char* check, const char* options_json, char** out_json,
                            int* out_pass);

/* ---------------------------------------------------------- rendering --- */

/* Plain-text rendition of any report document. */
homtop_status homtop_render_text(const char* json, char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* HOMTOP_H */
