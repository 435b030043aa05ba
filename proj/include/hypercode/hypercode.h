/*
 * C interface to the hypercode library: binary linear codes from hypergraph
 * incidence matrices.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Functions that can fail return an hc_status; on
 * failure hc_last_error() describes the problem for the calling thread.
 * Strings returned through char** out-parameters are released with
 * hc_string_free. Vertex and edge indices are 0-based.
 */
#ifndef HYPERCODE_HYPERCODE_H
#define HYPERCODE_HYPERCODE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(HYPERCODE_BUILDING_LIBRARY)
#define HC_API __declspec(dllexport)
#else
#define HC_API __declspec(dllimport)
#endif
#else
#define HC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,
  HC_ERR_INVALID_ARGUMENT = 1,
  HC_ERR_INDEX = 2,
  HC_ERR_DIMENSION_MISMATCH = 3,
  HC_ERR_PRECONDITION = 4,
  HC_ERR_NO_NONZERO_CODEWORD = 5,
  HC_ERR_RESOURCE = 6,
  HC_ERR_PARSE = 7,
  HC_ERR_DIVISION_BY_ZERO = 8,
  HC_ERR_ENGINE_DISAGREEMENT = 9,
  HC_ERR_INTERNAL = 10
} hc_status;

typedef struct hc_matrix hc_matrix;
typedef struct hc_hypergraph hc_hypergraph;
typedef struct hc_report hc_report;

HC_API const char* hc_version(void);
HC_API const char* hc_status_name(hc_status status);
/* Message of the last failed call on this thread; "" if none. */
HC_API const char* hc_last_error(void);
HC_API void hc_string_free(char* s);

/* Enumeration cap from HYPERCODE_ENUM_CAP, or the built-in default. */
HC_API hc_status hc_enum_cap_from_env(uint64_t* out);

/* ---- matrices ---------------------------------------------------------- */

HC_API hc_status hc_matrix_parse(const char* text, hc_matrix** out);
HC_API hc_status hc_matrix_format(const hc_matrix* m, char** out);
HC_API void hc_matrix_free(hc_matrix* m);
HC_API size_t hc_matrix_rows(const hc_matrix* m);
HC_API size_t hc_matrix_cols(const hc_matrix* m);
HC_API hc_status hc_matrix_get(const hc_matrix* m, size_t row, size_t col, int* out);
HC_API hc_status hc_matrix_rank(const hc_matrix* m, size_t* out);

/* ---- hypergraphs ------------------------------------------------------- */

HC_API hc_status hc_hypergraph_parse(const char* text, hc_hypergraph** out);
HC_API hc_status hc_hypergraph_format(const hc_hypergraph* h, char** out);
HC_API void hc_hypergraph_free(hc_hypergraph* h);
HC_API size_t hc_hypergraph_num_vertices(const hc_hypergraph* h);
HC_API size_t hc_hypergraph_num_edges(const hc_hypergraph* h);
HC_API size_t hc_hypergraph_edge_size(const hc_hypergraph* h, size_t edge);
/* Vertex i (ascending order) of an edge; indices are not range-checked. */
HC_API size_t hc_hypergraph_edge_vertex(const hc_hypergraph* h, size_t edge, size_t i);
HC_API hc_status hc_hypergraph_incidence(const hc_hypergraph* h, hc_matrix** out);

HC_API hc_status hc_family_k3partite(size_t n, hc_hypergraph** out);
HC_API hc_status hc_family_projective_geometry(size_t n, hc_hypergraph** out);
HC_API hc_status hc_family_fano(hc_hypergraph** out);
/* first_row is a '0'/'1' string. */
HC_API hc_status hc_family_circulant(const char* first_row, hc_hypergraph** out);
HC_API hc_status hc_family_block_circulant(size_t k, size_t m, hc_hypergraph** out);

/* ---- analysis ---------------------------------------------------------- */

typedef enum hc_method { HC_METHOD_AUTO = 0, HC_METHOD_CODEWORD = 1, HC_METHOD_EONV = 2, HC_METHOD_BOTH = 3 } hc_method;

typedef struct hc_analysis_options {
  hc_method method;
  int weights;        /* nonzero: compute the weight distribution */
  int has_early_exit; /* nonzero: stop at the first weight <= early_exit */
  size_t early_exit;
  unsigned threads;
  uint64_t enum_cap;  /* maximum weight evaluations per search */
} hc_analysis_options;

/* Defaults: automatic engine choice, no weights, no early exit, one thread,
 * enumeration cap from hc_enum_cap_from_env (built-in default if invalid). */
HC_API void hc_analysis_options_init(hc_analysis_options* options);

HC_API hc_status hc_analyze_hypergraph(const hc_hypergraph* h, const hc_analysis_options* options, hc_report** out);
/* Rows of the matrix act as vertices for the eonv engine. */
HC_API hc_status hc_analyze_matrix(const hc_matrix* m, const hc_analysis_options* options, hc_report** out);

HC_API void hc_report_free(hc_report* r);
HC_API size_t hc_report_length(const hc_report* r);
HC_API size_t hc_report_dimension(const hc_report* r);
HC_API int hc_report_has_min_distance(const hc_report* r);
HC_API size_t hc_report_min_distance(const hc_report* r);
HC_API int hc_report_min_distance_exact(const hc_report* r);
/* Engine(s) that produced the distance; never HC_METHOD_AUTO. */
HC_API hc_method hc_report_method(const hc_report* r);
HC_API int hc_report_has_witness(const hc_report* r);
HC_API size_t hc_report_witness_size(const hc_report* r);
HC_API size_t hc_report_witness_vertex(const hc_report* r, size_t i);
HC_API int hc_report_self_orthogonal(const hc_report* r);
HC_API int hc_report_self_dual(const hc_report* r);
HC_API int hc_report_has_weight_distribution(const hc_report* r);
/* Number of distinct weights with a nonzero count. */
HC_API size_t hc_report_weight_distribution_size(const hc_report* r);
HC_API hc_status hc_report_weight_distribution_entry(const hc_report* r, size_t i, size_t* weight, uint64_t* count);

/* ---- polynomials over GF(2) --------------------------------------------
 * Polynomials are ascending coefficient strings: "1000101" = 1 + x^4 + x^6.
 * Results use the same form, with "0" for the zero polynomial. */

HC_API hc_status hc_poly_gcd(const char* a, const char* b, char** out);
HC_API hc_status hc_poly_mul(const char* a, const char* b, char** out);
HC_API hc_status hc_poly_rem(const char* a, const char* b, char** out);
HC_API hc_status hc_poly_cyclic_dimension(const char* p, size_t n, size_t* out);

/* ---- self-duality scan ------------------------------------------------- */

typedef struct hc_scan_options {
  size_t max_vertices;
  size_t uniformity;
  uint64_t budget;
  uint64_t seed;
} hc_scan_options;

typedef struct hc_scan_finding {
  uint64_t sample_index;
  const hc_hypergraph* hypergraph; /* valid only during the callback */
  size_t rank;
  int self_orthogonal;
  int self_dual;
  int structural;
  int graph_criterion; /* -1 when the sample is not 2-uniform */
} hc_scan_finding;

typedef void (*hc_scan_callback)(const hc_scan_finding* finding, void* user_data);

HC_API hc_status hc_selfdual_scan(const hc_scan_options* options, hc_scan_callback callback, void* user_data);

/* ---- reproduction checks ----------------------------------------------- */

typedef struct hc_criterion_result {
  const char* tag;
  const char* title;
  int passed;
  const char* observed;
  const char* expected;
  double seconds;
  double time_limit;
} hc_criterion_result;

typedef void (*hc_verify_callback)(const hc_criterion_result* result, void* user_data);

HC_API size_t hc_verify_tag_count(void);
HC_API const char* hc_verify_tag(size_t i);

/* only: NULL or "" runs every criterion. fano_fixture: NULL uses the built-in
 * Fano plane. *all_passed is set when the call returns HC_OK. */
HC_API hc_status hc_verify(const char* only, const hc_hypergraph* fano_fixture, unsigned threads,
                           hc_verify_callback callback, void* user_data, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* HYPERCODE_HYPERCODE_H */
