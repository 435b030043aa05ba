#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "hypercode/analysis.hpp"
#include "hypercode/bitmatrix.hpp"
#include "hypercode/error.hpp"
#include "hypercode/gf2poly.hpp"
#include "hypercode/hypercode.h"
#include "hypercode/hypergraph.hpp"
#include "hypercode/scan.hpp"
#include "hypercode/text_format.hpp"
#include "hypercode/verify.hpp"

struct hc_matrix {
  hypercode::BitMatrix value;
};

struct hc_hypergraph {
  hypercode::Hypergraph value;
};

struct hc_report {
  hypercode::AnalysisReport value;
  std::vector<std::pair<std::size_t, std::uint64_t>> weights;
};

namespace {

thread_local std::string g_last_error;

hc_status to_status(hypercode::ErrorCode code) {
  using hypercode::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument:
      return HC_ERR_INVALID_ARGUMENT;
    case ErrorCode::index_out_of_range:
      return HC_ERR_INDEX;
    case ErrorCode::dimension_mismatch:
      return HC_ERR_DIMENSION_MISMATCH;
    case ErrorCode::precondition:
      return HC_ERR_PRECONDITION;
    case ErrorCode::no_nonzero_codeword:
      return HC_ERR_NO_NONZERO_CODEWORD;
    case ErrorCode::resource_exhausted:
      return HC_ERR_RESOURCE;
    case ErrorCode::parse:
      return HC_ERR_PARSE;
    case ErrorCode::division_by_zero:
      return HC_ERR_DIVISION_BY_ZERO;
    case ErrorCode::engine_disagreement:
      return HC_ERR_ENGINE_DISAGREEMENT;
  }
  return HC_ERR_INTERNAL;
}

hc_status fail(hc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class Fn>
hc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return HC_OK;
  } catch (const hypercode::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(HC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HC_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define HC_REQUIRE(cond)                                                       \
  do {                                                                         \
    if (!(cond)) return fail(HC_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

hypercode::Method to_method(hc_method m) {
  switch (m) {
    case HC_METHOD_CODEWORD:
      return hypercode::Method::codeword;
    case HC_METHOD_EONV:
      return hypercode::Method::eonv;
    case HC_METHOD_BOTH:
      return hypercode::Method::both;
    case HC_METHOD_AUTO:
      return hypercode::Method::automatic;
  }
  throw hypercode::InvalidArgumentError("unknown analysis method");
}

hypercode::AnalysisOptions to_options(const hc_analysis_options* options) {
  hc_analysis_options defaults;
  if (options == nullptr) {
    hc_analysis_options_init(&defaults);
    options = &defaults;
  }
  hypercode::AnalysisOptions out;
  out.method = to_method(options->method);
  out.weights = options->weights != 0;
  if (options->has_early_exit != 0) out.search.early_exit = options->early_exit;
  out.search.threads = options->threads == 0 ? 1 : options->threads;
  out.search.enumeration_cap = options->enum_cap;
  return out;
}

hc_report* make_report(hypercode::AnalysisReport value) {
  auto* r = new hc_report{std::move(value), {}};
  if (r->value.weight_distribution) {
    r->weights.assign(r->value.weight_distribution->begin(), r->value.weight_distribution->end());
  }
  return r;
}

template <class Make>
hc_status make_hypergraph(hc_hypergraph** out, Make&& make) {
  HC_REQUIRE(out != nullptr);
  return guarded([&] { *out = new hc_hypergraph{make()}; });
}

}  // namespace

extern "C" {

const char* hc_version(void) { return "0.1.0"; }

const char* hc_status_name(hc_status status) {
  switch (status) {
    case HC_OK:
      return "ok";
    case HC_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case HC_ERR_INDEX:
      return "index out of range";
    case HC_ERR_DIMENSION_MISMATCH:
      return "dimension mismatch";
    case HC_ERR_PRECONDITION:
      return "precondition violated";
    case HC_ERR_NO_NONZERO_CODEWORD:
      return "no nonzero codeword";
    case HC_ERR_RESOURCE:
      return "enumeration cap exceeded";
    case HC_ERR_PARSE:
      return "parse error";
    case HC_ERR_DIVISION_BY_ZERO:
      return "division by zero";
    case HC_ERR_ENGINE_DISAGREEMENT:
      return "engine disagreement";
    case HC_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* hc_last_error(void) { return g_last_error.c_str(); }

void hc_string_free(char* s) { std::free(s); }

hc_status hc_enum_cap_from_env(uint64_t* out) {
  HC_REQUIRE(out != nullptr);
  return guarded([&] { *out = hypercode::enumeration_cap_from_env(); });
}

// Matrices -------------------------------------------------------------------

hc_status hc_matrix_parse(const char* text, hc_matrix** out) {
  HC_REQUIRE(text != nullptr && out != nullptr);
  return guarded([&] { *out = new hc_matrix{hypercode::parse_matrix(text)}; });
}

hc_status hc_matrix_format(const hc_matrix* m, char** out) {
  HC_REQUIRE(m != nullptr && out != nullptr);
  return guarded([&] { *out = copy_string(hypercode::format_matrix(m->value)); });
}

void hc_matrix_free(hc_matrix* m) { delete m; }

size_t hc_matrix_rows(const hc_matrix* m) { return m == nullptr ? 0 : m->value.num_rows(); }

size_t hc_matrix_cols(const hc_matrix* m) { return m == nullptr ? 0 : m->value.num_cols(); }

hc_status hc_matrix_get(const hc_matrix* m, size_t row, size_t col, int* out) {
  HC_REQUIRE(m != nullptr && out != nullptr);
  return guarded([&] { *out = m->value.get(row, col) ? 1 : 0; });
}

hc_status hc_matrix_rank(const hc_matrix* m, size_t* out) {
  HC_REQUIRE(m != nullptr && out != nullptr);
  return guarded([&] { *out = hypercode::rank(m->value); });
}

// Hypergraphs ----------------------------------------------------------------

hc_status hc_hypergraph_parse(const char* text, hc_hypergraph** out) {
  HC_REQUIRE(text != nullptr);
  return make_hypergraph(out, [&] { return hypercode::parse_hypergraph(text); });
}

hc_status hc_hypergraph_format(const hc_hypergraph* h, char** out) {
  HC_REQUIRE(h != nullptr && out != nullptr);
  return guarded([&] { *out = copy_string(hypercode::format_hypergraph(h->value)); });
}

void hc_hypergraph_free(hc_hypergraph* h) { delete h; }

size_t hc_hypergraph_num_vertices(const hc_hypergraph* h) { return h == nullptr ? 0 : h->value.num_vertices(); }

size_t hc_hypergraph_num_edges(const hc_hypergraph* h) { return h == nullptr ? 0 : h->value.num_edges(); }

size_t hc_hypergraph_edge_size(const hc_hypergraph* h, size_t edge) {
  return h == nullptr || edge >= h->value.num_edges() ? 0 : h->value.edges()[edge].size();
}

size_t hc_hypergraph_edge_vertex(const hc_hypergraph* h, size_t edge, size_t i) { return h->value.edges()[edge][i]; }

hc_status hc_hypergraph_incidence(const hc_hypergraph* h, hc_matrix** out) {
  HC_REQUIRE(h != nullptr && out != nullptr);
  return guarded([&] { *out = new hc_matrix{hypercode::incidence_matrix(h->value)}; });
}

hc_status hc_family_k3partite(size_t n, hc_hypergraph** out) {
  return make_hypergraph(out, [&] { return hypercode::complete_3partite(n); });
}

hc_status hc_family_projective_geometry(size_t n, hc_hypergraph** out) {
  return make_hypergraph(out, [&] { return hypercode::projective_geometry(n); });
}

hc_status hc_family_fano(hc_hypergraph** out) {
  return make_hypergraph(out, [] { return hypercode::fano_circulant(); });
}

hc_status hc_family_circulant(const char* first_row, hc_hypergraph** out) {
  HC_REQUIRE(first_row != nullptr);
  return make_hypergraph(out, [&] {
    return hypercode::circulant_hypergraph(hypercode::BitVector::from_string(first_row));
  });
}

hc_status hc_family_block_circulant(size_t k, size_t m, hc_hypergraph** out) {
  return make_hypergraph(out, [&] { return hypercode::circulant_hypergraph(hypercode::block_row(k, m)); });
}

// Analysis -------------------------------------------------------------------

void hc_analysis_options_init(hc_analysis_options* options) {
  if (options == nullptr) return;
  options->method = HC_METHOD_AUTO;
  options->weights = 0;
  options->has_early_exit = 0;
  options->early_exit = 0;
  options->threads = 1;
  uint64_t cap = hypercode::kDefaultEnumerationCap;
  if (hc_enum_cap_from_env(&cap) != HC_OK) cap = hypercode::kDefaultEnumerationCap;
  options->enum_cap = cap;
}

hc_status hc_analyze_hypergraph(const hc_hypergraph* h, const hc_analysis_options* options, hc_report** out) {
  HC_REQUIRE(h != nullptr && out != nullptr);
  return guarded([&] { *out = make_report(hypercode::analyze(h->value, to_options(options))); });
}

hc_status hc_analyze_matrix(const hc_matrix* m, const hc_analysis_options* options, hc_report** out) {
  HC_REQUIRE(m != nullptr && out != nullptr);
  return guarded([&] { *out = make_report(hypercode::analyze(m->value, to_options(options))); });
}

void hc_report_free(hc_report* r) { delete r; }

size_t hc_report_length(const hc_report* r) { return r->value.length; }

size_t hc_report_dimension(const hc_report* r) { return r->value.dimension; }

int hc_report_has_min_distance(const hc_report* r) { return r->value.min_distance.has_value() ? 1 : 0; }

size_t hc_report_min_distance(const hc_report* r) { return r->value.min_distance.value_or(0); }

int hc_report_min_distance_exact(const hc_report* r) { return r->value.min_distance_exact ? 1 : 0; }

hc_method hc_report_method(const hc_report* r) {
  switch (r->value.method) {
    case hypercode::Method::eonv:
      return HC_METHOD_EONV;
    case hypercode::Method::both:
      return HC_METHOD_BOTH;
    default:
      return HC_METHOD_CODEWORD;
  }
}

int hc_report_has_witness(const hc_report* r) { return r->value.witness.has_value() ? 1 : 0; }

size_t hc_report_witness_size(const hc_report* r) { return r->value.witness ? r->value.witness->size() : 0; }

size_t hc_report_witness_vertex(const hc_report* r, size_t i) { return r->value.witness->members().at(i); }

int hc_report_self_orthogonal(const hc_report* r) { return r->value.self_orthogonal ? 1 : 0; }

int hc_report_self_dual(const hc_report* r) { return r->value.self_dual ? 1 : 0; }

int hc_report_has_weight_distribution(const hc_report* r) { return r->value.weight_distribution ? 1 : 0; }

size_t hc_report_weight_distribution_size(const hc_report* r) { return r->weights.size(); }

hc_status hc_report_weight_distribution_entry(const hc_report* r, size_t i, size_t* weight, uint64_t* count) {
  HC_REQUIRE(r != nullptr && weight != nullptr && count != nullptr);
  if (i >= r->weights.size()) return fail(HC_ERR_INDEX, "weight distribution index out of range");
  *weight = r->weights[i].first;
  *count = r->weights[i].second;
  return HC_OK;
}

// Polynomials ----------------------------------------------------------------

hc_status hc_poly_gcd(const char* a, const char* b, char** out) {
  HC_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
  return guarded([&] {
    *out = copy_string(hypercode::poly_gcd(hypercode::GF2Poly::parse(a), hypercode::GF2Poly::parse(b)).to_string());
  });
}

hc_status hc_poly_mul(const char* a, const char* b, char** out) {
  HC_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
  return guarded([&] {
    *out = copy_string(hypercode::poly_mul(hypercode::GF2Poly::parse(a), hypercode::GF2Poly::parse(b)).to_string());
  });
}

hc_status hc_poly_rem(const char* a, const char* b, char** out) {
  HC_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
  return guarded([&] {
    *out = copy_string(hypercode::poly_rem(hypercode::GF2Poly::parse(a), hypercode::GF2Poly::parse(b)).to_string());
  });
}

hc_status hc_poly_cyclic_dimension(const char* p, size_t n, size_t* out) {
  HC_REQUIRE(p != nullptr && out != nullptr);
  return guarded([&] { *out = hypercode::cyclic_code_dimension(hypercode::GF2Poly::parse(p), n); });
}

// Scan -----------------------------------------------------------------------

hc_status hc_selfdual_scan(const hc_scan_options* options, hc_scan_callback callback, void* user_data) {
  HC_REQUIRE(options != nullptr && callback != nullptr);
  return guarded([&] {
    hypercode::ScanOptions scan;
    scan.max_vertices = options->max_vertices;
    scan.uniformity = options->uniformity;
    scan.budget = options->budget;
    scan.seed = options->seed;
    hypercode::selfdual_scan(scan, [&](const hypercode::ScanFinding& f) {
      const hc_hypergraph handle{f.hypergraph};
      const hc_scan_finding out{f.sample_index,
                                &handle,
                                f.rank,
                                f.self_orthogonal ? 1 : 0,
                                f.self_dual ? 1 : 0,
                                f.structural ? 1 : 0,
                                f.graph_criterion ? (*f.graph_criterion ? 1 : 0) : -1};
      callback(&out, user_data);
    });
  });
}

// Verification ---------------------------------------------------------------

size_t hc_verify_tag_count(void) { return hypercode::criterion_tags().size(); }

const char* hc_verify_tag(size_t i) {
  const auto& tags = hypercode::criterion_tags();
  return i < tags.size() ? tags[i].c_str() : nullptr;
}

hc_status hc_verify(const char* only, const hc_hypergraph* fano_fixture, unsigned threads,
                    hc_verify_callback callback, void* user_data, int* all_passed) {
  HC_REQUIRE(callback != nullptr && all_passed != nullptr);
  return guarded([&] {
    hypercode::VerifyOptions options;
    if (only != nullptr) options.only = only;
    if (fano_fixture != nullptr) options.fano_fixture = fano_fixture->value;
    options.search.threads = threads == 0 ? 1 : threads;
    options.search.enumeration_cap = hypercode::enumeration_cap_from_env();
    const bool passed = hypercode::run_verification(options, [&](const hypercode::CriterionResult& r) {
      const hc_criterion_result out{r.tag.c_str(),      r.title.c_str(), r.passed ? 1 : 0, r.observed.c_str(),
                                    r.expected.c_str(), r.seconds,       r.time_limit};
      callback(&out, user_data);
    });
    *all_passed = passed ? 1 : 0;
  });
}

}  // extern "C"
