/*
 * dicore C API.
 *
 * Digraphs are opaque handles created by the dicore_digraph_* constructors
 * or dicore_sample and released with dicore_digraph_free. Handles are
 * immutable and may be shared between threads.
 *
 * Every function that can fail returns a dicore_status. On failure a
 * message is available from dicore_last_error() on the calling thread until
 * the next failing call there. Vertices are 0-based at this interface; the
 * digraph text format is 1-based.
 *
 * Strings returned through char** are heap-allocated and released with
 * dicore_string_free.
 */
#ifndef DICORE_DICORE_H
#define DICORE_DICORE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DICORE_BUILDING)
#define DICORE_API __declspec(dllexport)
#else
#define DICORE_API __declspec(dllimport)
#endif
#else
#define DICORE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define DICORE_DEFAULT_BUDGET UINT64_C(100000000)

typedef enum dicore_status {
  DICORE_OK = 0,
  DICORE_ERR_INVALID_ARGUMENT = 1,
  DICORE_ERR_OUT_OF_RANGE = 2,
  DICORE_ERR_PARSE = 3,
  DICORE_ERR_IO = 4,
  DICORE_ERR_LIMIT = 5,
  DICORE_ERR_BUFFER_TOO_SMALL = 6,
  DICORE_ERR_INTERNAL = 7
} dicore_status;

typedef struct dicore_digraph dicore_digraph;

DICORE_API const char* dicore_version(void);
DICORE_API const char* dicore_status_name(dicore_status status);
DICORE_API const char* dicore_last_error(void);
/* 1-based line of the last DICORE_ERR_PARSE on this thread, 0 otherwise. */
DICORE_API size_t dicore_last_error_line(void);
DICORE_API void dicore_string_free(char* s);

/* ---- digraphs ---------------------------------------------------------- */

DICORE_API dicore_status dicore_digraph_new(size_t n, dicore_digraph** out);
/* Arc i is tails[i] -> heads[i]. Loops and out-of-range vertices fail;
 * repeated arcs are merged. */
DICORE_API dicore_status dicore_digraph_from_arcs(size_t n, const uint32_t* tails, const uint32_t* heads, size_t m,
                                                  dicore_digraph** out);
DICORE_API dicore_status dicore_digraph_parse(const char* text, dicore_digraph** out);
DICORE_API dicore_status dicore_digraph_read_file(const char* path, dicore_digraph** out);
/* Text format with arcs in lexicographic order. */
DICORE_API dicore_status dicore_digraph_format(const dicore_digraph* d, char** text_out);
DICORE_API void dicore_digraph_free(dicore_digraph* d);

DICORE_API size_t dicore_digraph_vertex_count(const dicore_digraph* d);
DICORE_API size_t dicore_digraph_arc_count(const dicore_digraph* d);
DICORE_API dicore_status dicore_digraph_has_arc(const dicore_digraph* d, uint32_t u, uint32_t v, int* out);
DICORE_API dicore_status dicore_digraph_is_acyclic(const dicore_digraph* d, int* out);

/* ---- D(n, p) ----------------------------------------------------------- */

DICORE_API dicore_status dicore_sample(size_t n, double p, uint64_t seed, uint64_t stream, dicore_digraph** out);
DICORE_API dicore_status dicore_probability_mass(const dicore_digraph* d, double p, double* mass, double* log_mass);

/* ---- maximum density --------------------------------------------------- */

typedef enum dicore_density_method { DICORE_DENSITY_EXACT = 0, DICORE_DENSITY_BRUTE = 1 } dicore_density_method;

typedef struct dicore_density {
  uint64_t numerator;   /* m(D) in lowest terms */
  uint64_t denominator;
  uint64_t witness_arcs; /* arcs induced by the witness */
  uint64_t witness_size;
} dicore_density;

/* witness may be NULL. Otherwise it receives witness_size sorted vertices
 * and witness_capacity must be at least that (n always suffices). */
DICORE_API dicore_status dicore_max_density(const dicore_digraph* d, dicore_density_method method,
                                            dicore_density* out, uint32_t* witness, size_t witness_capacity);
DICORE_API dicore_status dicore_threshold_probability(const dicore_digraph* pattern, size_t n, double* out);

/* ---- acyclic homomorphisms --------------------------------------------- */

typedef enum dicore_search_outcome {
  DICORE_FOUND = 0,
  DICORE_NOT_FOUND = 1,
  DICORE_BUDGET_EXCEEDED = 2
} dicore_search_outcome;

typedef enum dicore_core_verdict { DICORE_CORE = 0, DICORE_NOT_CORE = 1, DICORE_UNKNOWN = 2 } dicore_core_verdict;

/* image has |V(from)| entries. */
DICORE_API dicore_status dicore_verify_acyclic_hom(const dicore_digraph* from, const dicore_digraph* to,
                                                   const uint32_t* image, int* out);
/* image (nullable) receives |V(from)| entries when the outcome is FOUND.
 * nodes (nullable) receives the number of search nodes expanded. */
DICORE_API dicore_status dicore_find_acyclic_hom(const dicore_digraph* from, const dicore_digraph* to,
                                                 uint64_t budget, dicore_search_outcome* outcome, uint32_t* image,
                                                 uint64_t* nodes);
/* witness (nullable) receives |V(d)| entries when the verdict is NOT_CORE. */
DICORE_API dicore_status dicore_is_core(const dicore_digraph* d, uint64_t budget, dicore_core_verdict* verdict,
                                        uint32_t* witness, uint64_t* nodes);
DICORE_API dicore_status dicore_is_automorphism(const dicore_digraph* d, const uint32_t* image, int* out);
/* embedding (nullable) receives |V(pattern)| entries when FOUND. */
DICORE_API dicore_status dicore_contains(const dicore_digraph* host, const dicore_digraph* pattern, uint64_t budget,
                                         dicore_search_outcome* outcome, uint32_t* embedding, uint64_t* nodes);

/* ---- Chernoff bounds --------------------------------------------------- */

typedef struct dicore_tail_bound {
  double rate_bound;
  double quadratic_bound;
} dicore_tail_bound;

typedef struct dicore_relative_bound {
  double general;
  double simplified; /* meaningful only when has_simplified */
  int has_simplified;
} dicore_relative_bound;

DICORE_API double dicore_chernoff_rate(double x);
DICORE_API dicore_status dicore_chernoff_upper(double lambda, double t, dicore_tail_bound* out);
DICORE_API dicore_status dicore_chernoff_lower(double lambda, double t, dicore_tail_bound* out);
DICORE_API dicore_status dicore_corollary_bound(double eps, double mean, dicore_relative_bound* out);

/* ---- experiments ------------------------------------------------------- */

DICORE_API size_t dicore_experiment_count(void);
DICORE_API const char* dicore_experiment_id(size_t index);
/* config_json (nullable) is a JSON object overlaid on the experiment's
 * defaults. csv_out receives the CSV table. */
DICORE_API dicore_status dicore_experiment_run(const char* id, const char* config_json, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* DICORE_DICORE_H */
