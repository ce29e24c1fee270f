/* C interface to the (I,F_k)-partition toolkit. */
#ifndef IFK_IFK_H
#define IFK_IFK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(IFK_BUILDING)
#define IFK_API __attribute__((visibility("default")))
#else
#define IFK_API
#endif

typedef enum ifk_status {
  IFK_OK = 0,
  IFK_ERR_PARSE = 1,
  IFK_ERR_INVALID_ARGUMENT = 2,
  IFK_ERR_OUT_OF_RANGE = 3,
  IFK_ERR_BUDGET_EXCEEDED = 4,
  IFK_ERR_PRECONDITION = 5,
  IFK_ERR_OVERFLOW = 6,
  IFK_ERR_NULL_POINTER = 7,
  IFK_ERR_INTERNAL = 8
} ifk_status;

typedef enum ifk_subset_mode {
  IFK_SUBSET_ALL = 0,
  IFK_SUBSET_NONEMPTY = 1,
  IFK_SUBSET_NONEMPTY_PROPER = 2
} ifk_subset_mode;

/* A precolored graph with its k and any leading comment lines. */
typedef struct ifk_graph ifk_graph;
/* An I/F assignment for every vertex of a particular graph. */
typedef struct ifk_coloring ifk_coloring;

/* Message for the last failing call on this thread; never NULL. */
IFK_API const char* ifk_last_error(void);
IFK_API const char* ifk_status_name(ifk_status status);

/* Strings and id arrays returned through out-parameters are owned by the
   caller and released with these. */
IFK_API void ifk_string_free(char* s);
IFK_API void ifk_ids_free(uint32_t* ids);

/* Graphs */
IFK_API ifk_status ifk_graph_parse(const char* text, size_t len, ifk_graph** out);
IFK_API void ifk_graph_free(ifk_graph* g);
IFK_API ifk_status ifk_graph_serialize(const ifk_graph* g, char** out);
IFK_API size_t ifk_graph_vertex_count(const ifk_graph* g);
IFK_API size_t ifk_graph_edge_count(const ifk_graph* g);
IFK_API int ifk_graph_k(const ifk_graph* g);
/* Edges in sorted order, u < v. */
IFK_API ifk_status ifk_graph_edge(const ifk_graph* g, size_t index, uint32_t* u, uint32_t* v);
/* Nonzero when some header comment line starts with `word`. */
IFK_API int ifk_graph_has_header(const ifk_graph* g, const char* word);
IFK_API ifk_status ifk_graph_delete_edge(const ifk_graph* g, uint32_t u, uint32_t v,
                                         ifk_graph** out);
IFK_API ifk_status ifk_graph_delete_vertex(const ifk_graph* g, uint32_t v, ifk_graph** out);
/* Same graph and precoloring under another k; states must stay in range. */
IFK_API ifk_status ifk_graph_with_k(const ifk_graph* g, int k, ifk_graph** out);
/* *acyclic is set to 1 for forests, in which case *girth is 0. */
IFK_API ifk_status ifk_graph_girth(const ifk_graph* g, size_t* girth, int* acyclic);

/* Coefficients and density */

/* c_u and c_f must hold k+1 entries; c_f[0] is written as 0. */
IFK_API ifk_status ifk_coefficients(int k, int64_t* c_e, int64_t* c_u, int64_t* c_f,
                                    int64_t* c_i);
IFK_API ifk_status ifk_coefficients_report(int k, char** tsv);
IFK_API ifk_status ifk_threshold(int k, int64_t* num, int64_t* den);
IFK_API ifk_status ifk_potential(const ifk_graph* g, const uint32_t* subset, size_t len,
                                 int64_t* value);
IFK_API ifk_status ifk_min_potential(const ifk_graph* g, ifk_subset_mode mode, int64_t* value,
                                     uint32_t** witness, size_t* witness_len);
IFK_API ifk_status ifk_mad(const ifk_graph* g, int64_t* num, int64_t* den, uint32_t** witness,
                           size_t* witness_len);

/* Colorings. max_nodes = 0 means no search budget; an exhausted budget
   returns IFK_ERR_BUDGET_EXCEEDED. */
IFK_API ifk_status ifk_solve(const ifk_graph* g, uint64_t max_nodes, int* feasible,
                             ifk_coloring** coloring);
IFK_API void ifk_coloring_free(ifk_coloring* c);
IFK_API ifk_status ifk_coloring_parse(const ifk_graph* g, const char* text, size_t len,
                                      ifk_coloring** out);
IFK_API ifk_status ifk_coloring_format(const ifk_graph* g, const ifk_coloring* c, char** out);
IFK_API ifk_status ifk_coloring_dot(const ifk_graph* g, const ifk_coloring* c, char** out);
/* *ok is 1 for a valid coloring; report lists one violation per line. */
IFK_API ifk_status ifk_verify(const ifk_graph* g, const ifk_coloring* c, int* ok, char** report);
/* report holds the verdict line, followed by a coloring when the graph is
   colorable. */
IFK_API ifk_status ifk_critical(const ifk_graph* g, uint64_t max_nodes, int* critical,
                                char** report);

/* Constructions. kind is 'U', 'F' or 'I'; j must be 0 for 'I'. */
IFK_API ifk_status ifk_gen_sharpness(int k, int t, ifk_graph** out);
IFK_API ifk_status ifk_gen_gadget(char kind, int j, int k, ifk_graph** out, uint32_t* root);
IFK_API ifk_status ifk_verify_gadget(char kind, int j, int k, uint64_t max_nodes, int* pass,
                                     char** report);
IFK_API ifk_status ifk_expand(const ifk_graph* g, ifk_graph** out);

/* Discharging: TSV report; *consistent is 1 when the charge sum equals
   -2 rho(V) and discharging conserved it. */
IFK_API ifk_status ifk_discharge_report(const ifk_graph* g, char** tsv, int* consistent);

#ifdef __cplusplus
}
#endif

#endif
