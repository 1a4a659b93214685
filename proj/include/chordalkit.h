/* C interface to the chordal-graph structure toolkit.
 *
 * Conventions:
 *   - Every operation returns a ck_status; CK_OK means success.
 *   - String outputs are heap-allocated, NUL-terminated, and owned by the
 *     caller; release them with ck_string_free.
 *   - On failure the output pointer is left untouched and ck_last_error()
 *     describes the problem (thread-local, valid until the next call on the
 *     same thread).
 */
#ifndef CHORDALKIT_H
#define CHORDALKIT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ck_graph ck_graph;

typedef enum ck_status {
    CK_OK = 0,
    CK_VERIFY_FAIL = 1,     /* a structural check found a violation */
    CK_NOT_CHORDAL = 2,     /* operation requires a chordal input */
    CK_RESOURCE_LIMIT = 3,  /* enumeration guard exceeded */
    CK_INVALID_ARGUMENT = 64,
    CK_PARSE_ERROR = 65,
    CK_INTERNAL_ERROR = 70
} ck_status;

const char* ck_version(void);
const char* ck_last_error(void);

void ck_string_free(char* s);

/* Edge-list text: one "u v" per line, '#' comments, lone "v" for an isolated
 * vertex. */
ck_status ck_graph_parse(const char* edge_list_text, ck_graph** out);
void ck_graph_free(ck_graph* g);

/* Full structure report: cliques with Simp/Sep and classification, separator
 * catalog with multiplicities, tree count, uniqueness/arbitrariness flags.
 * Non-chordal input yields CK_NOT_CHORDAL with the report still written. */
ck_status ck_analyze(const ck_graph* g, int as_json, char** out);

/* Exact clique-tree count as a decimal string. */
ck_status ck_trees_count(const ck_graph* g, char** out);

/* All clique trees in the tree serialization format, blank-line separated. */
ck_status ck_trees_enumerate(const ck_graph* g, char** out);

/* Junction-property verdict for a serialized tree; CK_VERIFY_FAIL when the
 * tree is not a clique tree (verdict text still written). */
ck_status ck_tree_check(const ck_graph* g, const char* tree_text, char** out);

/* All perfect sequences, one line of 1-based clique indices each. */
ck_status ck_sequences_enumerate(const ck_graph* g, char** out);

/* Running-intersection verdict for one sequence line; CK_VERIFY_FAIL when the
 * ordering is not a perfect sequence. */
ck_status ck_sequence_check(const ck_graph* g, const char* sequence_line, char** out);

/* Per-clique boundary classification. */
ck_status ck_boundary(const ck_graph* g, int as_json, char** out);

/* Materialized tree/sequence relation: node tables, edge list, connectivity. */
ck_status ck_relation(const ck_graph* g, int as_json, char** out);

/* Seeded alternating random walk over the relation; deterministic in the
 * seed. */
ck_status ck_walk(const ck_graph* g, int start_on_tree, long steps, uint64_t seed,
                  char** out);

/* Connected chordal graph on n vertices as edge-list text; method is
 * "tree-of-cliques" or "fill-in". */
ck_status ck_generate(int n, uint64_t seed, const char* method, char** out);

/* Structural-theorem suite over the exhaustive corpus (all connected chordal
 * graphs on <= max_n vertices) plus random_count seeded random graphs.
 * CK_VERIFY_FAIL when any check fails (report still written). */
ck_status ck_verify(int max_n, int random_count, uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CHORDALKIT_H */
