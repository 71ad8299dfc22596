#ifndef DTILE_DTILE_H
#define DTILE_DTILE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DTILE_API __declspec(dllexport)
#else
#define DTILE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes. Zero is success; the rest mirror the library's error kinds. */
typedef enum {
  DTILE_OK = 0,
  DTILE_ERR_LOOP_EDGE,
  DTILE_ERR_TWO_CYCLE,
  DTILE_ERR_OUT_OF_RANGE,
  DTILE_ERR_SAME_VERTEX,
  DTILE_ERR_ZERO_SIZE,
  DTILE_ERR_TOO_SMALL,
  DTILE_ERR_NOT_ORIENTED,
  DTILE_ERR_ZERO_PART,
  DTILE_ERR_PART_TOO_SMALL,
  DTILE_ERR_BAD_PARAMETERS,
  DTILE_ERR_DIVISIBLE_BY_THREE,
  DTILE_ERR_ZERO_MODULUS,
  DTILE_ERR_NOT_COPRIME,
  DTILE_ERR_BAD_TARGETS,
  DTILE_ERR_BAD_SIZES,
  DTILE_ERR_NOT_TOURNAMENT,
  DTILE_ERR_BAD_DEMAND,
  DTILE_ERR_NOT_A_PARTITION,
  DTILE_ERR_OVERLAP,
  DTILE_ERR_BAD_SIZE,
  DTILE_ERR_BAD_PATTERN,
  DTILE_ERR_PARSE,
  DTILE_ERR_IO,
  DTILE_ERR_NULL_ARGUMENT,
  DTILE_ERR_INTERNAL
} dtile_status;

/* Filled on failure when non-NULL; release msg with dtile_free_error_content. */
typedef struct {
  int status;
  char* msg;
} dtile_error;

/* Outcomes of searches. */
enum { DTILE_FOUND = 0, DTILE_NOT_FOUND = 1, DTILE_EXHAUSTED = 2 };

typedef struct {
  uint64_t node_limit;
  uint64_t copy_limit;
} dtile_budget;

typedef struct dtile_graph dtile_graph;
typedef struct dtile_pattern dtile_pattern;

DTILE_API const char* dtile_version(void);
DTILE_API const char* dtile_status_name(int status);
DTILE_API void dtile_free_error_content(dtile_error* err);
DTILE_API void dtile_string_free(char* s);
/* 0 restores the hardware default. */
DTILE_API void dtile_set_threads(int n);
DTILE_API dtile_budget dtile_default_budget(void);

/* Graphs. A graph may carry a three-part frame and per-vertex A/B/C roles. */
DTILE_API dtile_graph* dtile_graph_from_edges(int n, const int* edges, size_t edge_count, dtile_error* err);
DTILE_API dtile_graph* dtile_graph_parse(const char* edge_list_text, dtile_error* err);
DTILE_API dtile_graph* dtile_graph_read_file(const char* path, dtile_error* err);
/* Families: round (params: n, d_0..d_{n-1}), round-tournament (n), f-graph (t),
   square-excluder (t), turanable (a, b, c), abc-no-factor (a, b, c, k),
   abc-unmatched (a, b, c, k), 1bc-no-factor (b, c, k), sharpness (s, t). */
DTILE_API dtile_graph* dtile_generate(const char* family, const int64_t* params, size_t param_count,
                                      dtile_error* err);
DTILE_API void dtile_graph_free(dtile_graph* g);
DTILE_API int dtile_graph_order(const dtile_graph* g);
DTILE_API size_t dtile_graph_edge_count(const dtile_graph* g);
DTILE_API int dtile_graph_has_parts(const dtile_graph* g);
/* labels[v] in {0, 1, 2}. */
DTILE_API int dtile_graph_set_parts(dtile_graph* g, const int* labels, int n, dtile_error* err);
/* format: "edgelist", "dot" or "json". */
DTILE_API char* dtile_graph_write(const dtile_graph* g, const char* format, dtile_error* err);

/* Patterns: dabc:a,b,c | tt:k | cyc:l | path:l | cycpow:l,k | pathpow:l,k | k4m */
DTILE_API dtile_pattern* dtile_pattern_parse(const char* spec, dtile_error* err);
DTILE_API void dtile_pattern_free(dtile_pattern* p);
DTILE_API int dtile_pattern_order(const dtile_pattern* p);
DTILE_API dtile_graph* dtile_pattern_graph(const dtile_pattern* p, dtile_error* err);

/* Typed queries. Return DTILE_FOUND / DTILE_NOT_FOUND / DTILE_EXHAUSTED, or -1
   on error. dtile_embed writes the map when map_capacity suffices. */
DTILE_API int dtile_embed(const dtile_pattern* p, const dtile_graph* g, dtile_budget budget, int* map,
                          size_t map_capacity, dtile_error* err);
DTILE_API int dtile_has_factor(const dtile_pattern* p, const dtile_graph* g, dtile_budget budget, dtile_error* err);
/* Solves the (a,b,c) residue system at `targets` by closed form (brute = 0) or
   exhaustive search. Returns 1 and writes out[3] when solvable, 0 when not,
   -1 on error. */
DTILE_API int dtile_congruence_solve(int64_t a, int64_t b, int64_t c, const int64_t* targets, int brute,
                                     int64_t* out, dtile_error* err);

/* JSON queries: return a string to release with dtile_string_free, or NULL on
   error. Every document carries "schema": 1. */
DTILE_API char* dtile_embed_json(const dtile_pattern* p, const dtile_graph* g, dtile_budget budget,
                                 dtile_error* err);
DTILE_API char* dtile_find_tt_json(const dtile_graph* g, int k, dtile_error* err);
DTILE_API char* dtile_scan_squares_json(const dtile_graph* g, int l_min, int l_max, dtile_budget budget,
                                        dtile_error* err);
DTILE_API char* dtile_count_json(const dtile_graph* g, dtile_error* err);
DTILE_API char* dtile_factor_json(const dtile_pattern* p, const dtile_graph* g, dtile_budget budget,
                                  dtile_error* err);
/* Maximum tiling; with a frame and a role pattern also the obstruction report. */
DTILE_API char* dtile_tiling_json(const dtile_pattern* p, const dtile_graph* g, dtile_budget budget,
                                  dtile_error* err);
/* mode: "closed", "brute" or "both"; targets may be NULL for (1,-1,0). */
DTILE_API char* dtile_congruence_abc_json(int64_t a, int64_t b, int64_t c, const int64_t* targets, const char* mode,
                                          dtile_error* err);
DTILE_API char* dtile_congruence_1bc_json(int64_t b, int64_t c, const char* mode, dtile_error* err);
/* Needs a frame. Census of index vectors, robust set above threshold, lattice
   basis, 2-transferral and, when `t` > 0, the linking-count matrix. */
DTILE_API char* dtile_lattice_json(const dtile_pattern* p, const dtile_graph* g, uint64_t threshold, int t,
                                   dtile_budget budget, dtile_error* err);

typedef struct {
  double gamma;
  double c1;
  double c2;
  double c3;
  int slack; /* good-vertex slack; negative means floor(c3 * gamma * n) */
  int restarts;
  uint64_t seed;
} dtile_extremal_params;
DTILE_API dtile_extremal_params dtile_default_extremal_params(void);
/* Uses the graph's frame, or the best tripartition found by local search. */
DTILE_API char* dtile_extremal_json(const dtile_graph* g, const dtile_extremal_params* params, dtile_error* err);

typedef struct {
  dtile_budget budget;
  uint64_t seed;
  uint64_t samples;
  int mutate;
} dtile_verify_config;
DTILE_API dtile_verify_config dtile_default_verify_config(void);
/* names: comma-separated check names or "all". all_pass may be NULL. */
DTILE_API char* dtile_verify_json(const char* names, const dtile_verify_config* cfg, int with_timing,
                                  int* all_pass, dtile_error* err);
/* Comma-separated list of check names. Static storage. */
DTILE_API const char* dtile_check_names(void);

#ifdef __cplusplus
}
#endif

#endif
