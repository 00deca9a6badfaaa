/* C interface to the sparsity library. Every call returns an spx_status;
 * on failure spx_last_error() describes the problem for the calling thread.
 * Strings returned through char** are owned by the caller and released
 * with spx_string_free. */
#ifndef SPARSITY_H
#define SPARSITY_H

#include <stddef.h>

#if defined(SPX_BUILDING_LIBRARY)
#define SPX_API __attribute__((visibility("default")))
#else
#define SPX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spx_status {
  SPX_OK = 0,
  SPX_ERR_INPUT = 1,
  SPX_ERR_PARSE = 2,
  SPX_ERR_VALIDATION = 3,
  SPX_ERR_CAPABILITY = 4,
  SPX_ERR_PRECONDITION = 5,
  SPX_ERR_STRATEGY = 6,
  SPX_ERR_STALL = 7,
  SPX_ERR_INTERNAL = 8
} spx_status;

typedef struct spx_graph spx_graph;

SPX_API const char* spx_version(void);
SPX_API const char* spx_status_name(spx_status status);
/* Message of the last failed call on this thread; "" if none. */
SPX_API const char* spx_last_error(void);

/* strict != 0 rejects duplicate edges and self-loops. */
SPX_API spx_status spx_graph_parse_edge_list(const char* text, int strict, spx_graph** out);
SPX_API spx_status spx_graph_parse_dimacs(const char* text, int strict, spx_graph** out);
/* Format chosen by content: DIMACS if a "p edge" line is present. */
SPX_API spx_status spx_graph_read_file(const char* path, int strict, spx_graph** out);
/* Generator spec such as "grid(w=3,h=4)" or "random_tree(n=20,seed=7)". */
SPX_API spx_status spx_graph_generate(const char* spec, spx_graph** out);
SPX_API void spx_graph_free(spx_graph* g);

SPX_API size_t spx_graph_vertex_count(const spx_graph* g);
SPX_API size_t spx_graph_edge_count(const spx_graph* g);
/* Edge list text with labels, as read back by spx_graph_parse_edge_list. */
SPX_API spx_status spx_graph_write_edge_list(const spx_graph* g, char** out);

/* Runs a named command; params_json may be NULL. *out receives the JSON
 * result envelope. */
SPX_API spx_status spx_run(const spx_graph* g, const char* command, const char* params_json, char** out);
/* Re-checks a certificate; *out receives {"verified", "violations"}. A
 * certificate that fails its checks is still SPX_OK. */
SPX_API spx_status spx_verify(const spx_graph* g, const char* certificate_json, char** out);
SPX_API spx_status spx_sweep(const char* config_json, char** out);

SPX_API void spx_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
