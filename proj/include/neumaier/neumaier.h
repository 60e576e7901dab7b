/* C interface to the neumaier library.
 *
 * Every fallible call returns an nm_status. On failure the message is available from
 * nm_last_error() on the same thread until the next call. Strings returned through
 * char** out-parameters are heap allocated and must be released with nm_string_free().
 */
#ifndef NEUMAIER_NEUMAIER_H
#define NEUMAIER_NEUMAIER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NM_API __declspec(dllexport)
#else
#define NM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nm_status {
  NM_OK = 0,
  NM_ERR_INVALID_ARGUMENT = 1,
  NM_ERR_PARSE = 2,
  NM_ERR_IO = 3,
  NM_ERR_LIMIT = 4,
  NM_ERR_INTERNAL = 5
} nm_status;

typedef struct nm_graph nm_graph;
typedef struct nm_closure nm_closure;

NM_API const char* nm_version(void);
NM_API const char* nm_last_error(void);
NM_API void nm_string_free(char* s);

/* Graphs. format is "json", "graph6" or NULL (by file extension / content). */
NM_API nm_status nm_graph_read(const char* path, nm_graph** out);
NM_API nm_status nm_graph_parse(const char* text, nm_graph** out);
NM_API nm_status nm_graph_write(const nm_graph* g, const char* path, const char* format);
NM_API nm_status nm_graph_serialize(const nm_graph* g, const char* format, char** out);
NM_API size_t nm_graph_vertex_count(const nm_graph* g);
NM_API size_t nm_graph_edge_count(const nm_graph* g);
NM_API void nm_graph_free(nm_graph* g);

/* Constructions. Alpha positions index the ascending list of primitive elements. */
NM_API nm_status nm_gamma_build(uint32_t m, uint32_t q1, uint32_t q2, size_t alpha1_position, size_t alpha2_position,
                                nm_graph** out);
NM_API nm_status nm_gk_build(const nm_graph* drg, nm_graph** out);
/* alpha = 0 selects the smallest common primitive root. */
NM_API nm_status nm_whiteman_build(uint32_t p, uint32_t q, uint32_t alpha, nm_graph** out);
/* name: "omega", "icosahedron" or "petersen". */
NM_API nm_status nm_fixture(const char* name, nm_graph** out);

/* Finite fields and cyclotomy (JSON results). */
NM_API nm_status nm_field_json(uint32_t p, uint32_t r, char** out_json);
NM_API nm_status nm_cyclo_table_json(uint32_t p, uint32_t r, uint32_t m, size_t alpha_position, char** out_json);

/* Classification. clique may be NULL (search when small enough). */
NM_API nm_status nm_classify_json(const nm_graph* g, const uint32_t* clique, size_t clique_len, int vertex_transitive,
                                  char** out_json);

/* Coherent closure. */
NM_API nm_status nm_wl_closure(const nm_graph* g, size_t cap, unsigned threads, nm_closure** out);
NM_API uint32_t nm_closure_rank(const nm_closure* c);
/* Rank, flags, support, axiom check and rank bounds for the graph the closure was computed from. */
NM_API nm_status nm_closure_report_json(const nm_closure* c, const nm_graph* g, char** out_json);
NM_API void nm_closure_free(nm_closure* c);
NM_API nm_status nm_min_poly_degree(const nm_graph* g, size_t cap, size_t* out);
NM_API nm_status nm_schur_verify_json(uint32_t m, uint32_t q1, uint32_t q2, size_t alpha1_position,
                                      size_t alpha2_position, char** out_json);

/* Searches. verify is "none", "construct" or "wl". Results: {"hits": [...], "csv": "..."}
 * and {"rows": [{"e": .., "hits": [...]}], "csv": "..."}. */
NM_API nm_status nm_search_pairs_json(uint32_t m, uint32_t q1_max, const char* verify, unsigned threads,
                                      int include_srg, uint32_t window_scale, char** out_json);
NM_API nm_status nm_search_nexus_json(uint32_t m_max, uint32_t q2_max, uint32_t e_max, const char* verify,
                                      unsigned threads, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* NEUMAIER_NEUMAIER_H */
