#ifndef POSETCM_H
#define POSETCM_H

#include <stddef.h>

#if defined(_WIN32)
#define PCM_API __declspec(dllexport)
#else
#define PCM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pcm_status {
  PCM_OK = 0,
  PCM_SYNTAX_ERROR,
  PCM_DUPLICATE_ELEMENT,
  PCM_UNKNOWN_NAME,
  PCM_ANTISYMMETRY_VIOLATION,
  PCM_NO_BOTTOM,
  PCM_NO_TOP,
  PCM_UNKNOWN_CATALOG_NAME,
  PCM_BAD_PARAM,
  PCM_UNBOUNDED_FACTOR,
  PCM_TOO_FEW_FACTORS,
  PCM_NOT_BOOLEAN,
  PCM_FEWER_THAN_TWO_ATOMS,
  PCM_NOT_INDEPENDENT,
  PCM_UNKNOWN_VERTEX,
  PCM_SIZE_LIMIT_EXCEEDED,
  PCM_EMPTY_COMPLEX,
  PCM_EMPTY_GRAPH,
  PCM_NOT_A_FACE,
  PCM_PAIRS_DONT_PARTITION,
  PCM_FACTOR_HAS_ZERO_DIVISORS,
  PCM_NOT_ASCENDING,
  PCM_INDEX_OUT_OF_RANGE,
  PCM_INDICES_NOT_DISTINCT_OR_ORDERED,
  PCM_NEED_EQUAL_SIZES_FOR_TRIPLE,
  PCM_WRONG_ARITY,
  PCM_INVALID_ARGUMENT,
  PCM_INTERNAL_ERROR,
} pcm_status;

typedef struct pcm_poset pcm_poset;
typedef struct pcm_graph pcm_graph;

typedef enum pcm_dialect { PCM_DIALECT_M2 = 0, PCM_DIALECT_SINGULAR = 1 } pcm_dialect;
typedef enum pcm_verdict { PCM_CM = 0, PCM_NOT_CM = 1, PCM_INCONCLUSIVE = 2 } pcm_verdict;

typedef struct pcm_config {
  size_t max_vertices;
  size_t max_homology_vertices;
  size_t max_search_nodes;
  size_t workers;
  int verbose;
} pcm_config;

/* Fills in the library defaults. */
PCM_API void pcm_config_init(pcm_config* cfg);

/* "SyntaxError", "EmptyGraph", ... */
PCM_API const char* pcm_status_name(pcm_status s);
/* Message of the last failing call on this thread, "" if none. */
PCM_API const char* pcm_last_error_message(void);
/* Frees any string returned through a char** out parameter. */
PCM_API void pcm_string_free(char* s);

PCM_API pcm_status pcm_poset_parse(const char* text, size_t len, pcm_poset** out);
PCM_API pcm_status pcm_poset_generate(const char* catalog, const long long* params, size_t n_params,
                                      pcm_poset** out);
PCM_API void pcm_poset_free(pcm_poset* p);
PCM_API size_t pcm_poset_size(const pcm_poset* p);
/* Borrowed pointer, valid while `p` lives. NULL when out of range. */
PCM_API const char* pcm_poset_element_name(const pcm_poset* p, size_t id);
PCM_API pcm_status pcm_poset_find(const pcm_poset* p, const char* name, size_t* id);
PCM_API pcm_status pcm_poset_leq(const pcm_poset* p, size_t a, size_t b, int* result);
/* Writes up to `cap` atom ids and stores the total count in *count. */
PCM_API pcm_status pcm_poset_atoms(const pcm_poset* p, size_t* ids, size_t cap, size_t* count);
PCM_API pcm_status pcm_poset_weight(const pcm_poset* p, size_t id, size_t* weight);
PCM_API pcm_status pcm_poset_is_boolean(const pcm_poset* p, int* result);
PCM_API pcm_status pcm_poset_format(const pcm_poset* p, char** text);
PCM_API pcm_status pcm_info_report(const pcm_poset* p, char** text);

PCM_API pcm_status pcm_graph_build(const pcm_poset* p, pcm_graph** out);
PCM_API void pcm_graph_free(pcm_graph* g);
PCM_API size_t pcm_graph_vertex_count(const pcm_graph* g);
PCM_API size_t pcm_graph_edge_count(const pcm_graph* g);
PCM_API pcm_status pcm_graph_vertex_element(const pcm_graph* g, size_t v, size_t* element);
PCM_API pcm_status pcm_graph_adjacent(const pcm_graph* g, size_t u, size_t v, int* result);
PCM_API pcm_status pcm_graph_dot(const pcm_graph* g, char** text);
PCM_API pcm_status pcm_graph_well_covered(const pcm_graph* g, const pcm_config* cfg, int* well_covered,
                                          int* very_well_covered);
PCM_API pcm_status pcm_graph_edge_ideal(const pcm_graph* g, pcm_dialect dialect, char** text);

/* Cohen-Macaulay verdict through the certificate pipeline. `json` may be NULL;
   when non-NULL it receives the certificate or NULL if none was produced. */
PCM_API pcm_status pcm_certify(const pcm_poset* p, const pcm_config* cfg, pcm_verdict* verdict, char** json);
PCM_API pcm_status pcm_reisner(const pcm_poset* p, const pcm_config* cfg, int* cohen_macaulay);

PCM_API pcm_status pcm_check_report(const pcm_poset* p, const pcm_config* cfg, int* consistent, char** text);
PCM_API pcm_status pcm_sweep_tsv(const char* sizes_text, size_t len, const pcm_config* cfg, char** text);

#ifdef __cplusplus
}
#endif

#endif
