/* SPDX-License-Identifier: Apache-2.0 */

/* C interface to the signed complete graph toolkit.
 *
 * Every fallible call returns an scg_status; on failure the message is
 * available from scg_last_error() on the calling thread until the next call.
 * Strings returned through char** out-parameters are owned by the caller and
 * released with scg_string_free(). Documents are JSON text with
 * "format_version": 1.
 */

#ifndef SCG_SCG_H
#define SCG_SCG_H

#include <stddef.h>
#include <stdint.h>

#if defined(SCG_BUILDING_LIBRARY)
#define SCG_API __attribute__((visibility("default")))
#else
#define SCG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum scg_status {
  SCG_OK = 0,
  SCG_ERR_INVALID_ARGUMENT = 1,
  SCG_ERR_OUT_OF_RANGE = 2,
  SCG_ERR_PRECONDITION = 3,
  SCG_ERR_CAPACITY = 4,
  SCG_ERR_NUMERIC = 5,
  SCG_ERR_PARSE = 6,
  SCG_ERR_IO = 7,
  SCG_ERR_INTERNAL = 8
} scg_status;

typedef enum scg_comparison { SCG_LESS = -1, SCG_EQUAL = 0, SCG_GREATER = 1 } scg_comparison;

/* (K_n, H^-): the complete graph on n vertices with the edges of H negative. */
typedef struct scg_graph scg_graph;
/* Index cache shared by the searches; optionally backed by a file. */
typedef struct scg_cache scg_cache;

typedef struct scg_search_options {
  scg_cache* cache;  /* may be NULL */
  unsigned threads;  /* 0 = hardware concurrency */
} scg_search_options;

SCG_API const char* scg_version(void);
SCG_API const char* scg_last_error(void);
SCG_API const char* scg_status_name(scg_status status);
SCG_API void scg_string_free(char* s);

/* Graphs. `edges` holds edge_count (i, j) pairs, 0-based. */
SCG_API scg_status scg_graph_create(int n, const int* edges, size_t edge_count, scg_graph** out);
SCG_API scg_status scg_graph_from_json(const char* document, scg_graph** out);
/* Family DSL such as "u1:4" or "qst:2,1", embedded on vertices 0..k-1 of K_n. */
SCG_API scg_status scg_graph_from_family(const char* family, int n, scg_graph** out);
SCG_API void scg_graph_destroy(scg_graph* g);
SCG_API int scg_graph_order(const scg_graph* g);
SCG_API scg_status scg_graph_to_json(const scg_graph* g, char** document);
SCG_API scg_status scg_graph_switch(const scg_graph* g, const int* vertices, size_t count, scg_graph** out);
SCG_API scg_status scg_graph_relocate(const scg_graph* g, int u, int v, int w, scg_graph** out);
SCG_API scg_status scg_graph_induced(const scg_graph* g, const int* vertices, size_t count, scg_graph** out);

/* Spectra. `width` is a rational or decimal string; NULL selects 2^-40. */
SCG_API scg_status scg_charpoly(const scg_graph* g, char** document);
SCG_API scg_status scg_index(const scg_graph* g, const char* width, char** document);
SCG_API scg_status scg_compare(const scg_graph* a, const scg_graph* b, scg_comparison* result, char** document);
/* Partition document: graph fields plus "blocks" and "p". */
SCG_API scg_status scg_quotient(const char* partition_document, char** document);
/* name: star, q1, qst, u1. Parameters a formula does not use are ignored. */
SCG_API scg_status scg_formula(const char* name, int n, int k, int s, int t, char** document);

/* Cache. A missing file opens an empty cache; rejected entries are counted. */
SCG_API scg_status scg_cache_open(const char* path, scg_cache** out, size_t* rejected);
SCG_API scg_status scg_cache_save(const scg_cache* cache, const char* path);
SCG_API size_t scg_cache_size(const scg_cache* cache);
SCG_API size_t scg_cache_hits(const scg_cache* cache);
SCG_API void scg_cache_destroy(scg_cache* cache);

/* Verifiers. `passed` receives 1 when every assertion held, else 0. */
SCG_API scg_status scg_verify_lemma(const char* name, int n_max, char** report, int* passed);
/* klass: "unicyclic" or "cactus"; cycles is used only for cacti. */
SCG_API scg_status scg_search_max(int n, int k, const char* klass, int cycles, const scg_search_options* options,
                                  char** report);
SCG_API scg_status scg_verify_theorem(int n_min, int n_max, const scg_search_options* options, char** report,
                                      int* passed);
/* which: "star" or "qst". */
SCG_API scg_status scg_verify_corollary(const char* which, int n_max, const scg_search_options* options,
                                        char** report, int* passed);
/* consistent receives 1 for a CONSISTENT verdict, 0 for COUNTEREXAMPLE. */
SCG_API scg_status scg_check_conjecture(int n, int k, int cycles, const scg_search_options* options, char** report,
                                        int* consistent);
SCG_API scg_status scg_check_rotation(const scg_graph* g, int trials, uint64_t seed, char** report, int* passed);
SCG_API scg_status scg_check_interlacing(const scg_graph* g, int trials, uint64_t seed, char** report, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* SCG_SCG_H */
