#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "hypercode/hypercode.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  hc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::strcmp(hc_status_name(HC_ERR_PARSE), hc_status_name(HC_OK)) != 0);
  CHECK(std::strlen(hc_version()) > 0);
  hc_matrix* m = nullptr;
  CHECK(hc_matrix_parse("2 2\n10\n", &m) == HC_ERR_PARSE);
  CHECK(m == nullptr);
  CHECK(std::strlen(hc_last_error()) > 0);
  CHECK(hc_matrix_parse(nullptr, &m) == HC_ERR_INVALID_ARGUMENT);
  hc_hypergraph* h = nullptr;
  CHECK(hc_family_projective_geometry(2, &h) == HC_ERR_PRECONDITION);
  char* out = nullptr;
  CHECK(hc_poly_rem("1", "0", &out) == HC_ERR_DIVISION_BY_ZERO);
  CHECK(hc_poly_gcd("0", "0", &out) == HC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("matrix handles") {
  hc_matrix* m = nullptr;
  REQUIRE(hc_matrix_parse("3 4\n1100\n0110\n1010\n", &m) == HC_OK);
  CHECK(hc_matrix_rows(m) == 3);
  CHECK(hc_matrix_cols(m) == 4);
  int bit = -1;
  CHECK(hc_matrix_get(m, 0, 1, &bit) == HC_OK);
  CHECK(bit == 1);
  CHECK(hc_matrix_get(m, 3, 0, &bit) == HC_ERR_INDEX);
  std::size_t r = 0;
  CHECK(hc_matrix_rank(m, &r) == HC_OK);
  CHECK(r == 2);
  char* text = nullptr;
  REQUIRE(hc_matrix_format(m, &text) == HC_OK);
  CHECK(take(text) == "3 4\n1100\n0110\n1010\n");
  hc_matrix_free(m);
  hc_matrix_free(nullptr);
}

TEST_CASE("hypergraph handles and families") {
  hc_hypergraph* f = nullptr;
  REQUIRE(hc_family_fano(&f) == HC_OK);
  CHECK(hc_hypergraph_num_vertices(f) == 7);
  CHECK(hc_hypergraph_num_edges(f) == 7);
  CHECK(hc_hypergraph_edge_size(f, 0) == 3);
  CHECK(hc_hypergraph_edge_vertex(f, 0, 2) == 3);
  char* text = nullptr;
  REQUIRE(hc_hypergraph_format(f, &text) == HC_OK);
  const std::string formatted = take(text);
  hc_hypergraph* again = nullptr;
  REQUIRE(hc_hypergraph_parse(formatted.c_str(), &again) == HC_OK);
  REQUIRE(hc_hypergraph_format(again, &text) == HC_OK);
  CHECK(take(text) == formatted);
  hc_matrix* m = nullptr;
  REQUIRE(hc_hypergraph_incidence(f, &m) == HC_OK);
  std::size_t r = 0;
  CHECK(hc_matrix_rank(m, &r) == HC_OK);
  CHECK(r == 4);
  hc_matrix_free(m);
  hc_hypergraph_free(again);

  hc_hypergraph* c = nullptr;
  REQUIRE(hc_family_circulant("1000101", &c) == HC_OK);
  REQUIRE(hc_hypergraph_format(c, &text) == HC_OK);
  CHECK(take(text) == formatted);
  hc_hypergraph_free(c);
  hc_hypergraph_free(f);

  CHECK(hc_family_circulant("10x", &c) == HC_ERR_PARSE);
  CHECK(hc_family_circulant("000", &c) == HC_ERR_INVALID_ARGUMENT);
  hc_hypergraph* k = nullptr;
  REQUIRE(hc_family_k3partite(3, &k) == HC_OK);
  CHECK(hc_hypergraph_num_edges(k) == 27);
  hc_hypergraph_free(k);
  REQUIRE(hc_family_block_circulant(3, 2, &k) == HC_OK);
  CHECK(hc_hypergraph_num_edges(k) == 12);
  hc_hypergraph_free(k);
}

TEST_CASE("analysis through the C interface") {
  hc_hypergraph* f = nullptr;
  REQUIRE(hc_family_fano(&f) == HC_OK);
  hc_analysis_options o;
  hc_analysis_options_init(&o);
  o.method = HC_METHOD_BOTH;
  o.weights = 1;
  hc_report* r = nullptr;
  REQUIRE(hc_analyze_hypergraph(f, &o, &r) == HC_OK);
  CHECK(hc_report_length(r) == 7);
  CHECK(hc_report_dimension(r) == 4);
  CHECK(hc_report_has_min_distance(r));
  CHECK(hc_report_min_distance(r) == 3);
  CHECK(hc_report_min_distance_exact(r));
  CHECK(hc_report_method(r) == HC_METHOD_BOTH);
  CHECK(hc_report_has_witness(r));
  CHECK(hc_report_witness_size(r) >= 1);
  CHECK_FALSE(hc_report_self_orthogonal(r));
  REQUIRE(hc_report_has_weight_distribution(r));
  CHECK(hc_report_weight_distribution_size(r) == 4);
  std::size_t w = 0;
  std::uint64_t count = 0;
  CHECK(hc_report_weight_distribution_entry(r, 1, &w, &count) == HC_OK);
  CHECK(w == 3);
  CHECK(count == 7);
  CHECK(hc_report_weight_distribution_entry(r, 4, &w, &count) == HC_ERR_INDEX);
  hc_report_free(r);

  o.enum_cap = 10;
  CHECK(hc_analyze_hypergraph(f, &o, &r) == HC_ERR_RESOURCE);
  hc_hypergraph_free(f);

  hc_matrix* zero = nullptr;
  REQUIRE(hc_matrix_parse("2 5\n00000\n00000\n", &zero) == HC_OK);
  hc_analysis_options_init(&o);
  REQUIRE(hc_analyze_matrix(zero, &o, &r) == HC_OK);
  CHECK(hc_report_dimension(r) == 0);
  CHECK_FALSE(hc_report_has_min_distance(r));
  hc_report_free(r);
  hc_matrix_free(zero);
}

TEST_CASE("polynomials through the C interface") {
  char* out = nullptr;
  REQUIRE(hc_poly_mul("11", "11", &out) == HC_OK);
  CHECK(take(out) == "101");
  REQUIRE(hc_poly_rem("10000001", "1011", &out) == HC_OK);
  CHECK(take(out) == "0");
  REQUIRE(hc_poly_gcd("1000101", "10000001", &out) == HC_OK);
  CHECK(take(out).size() == 4);
  std::size_t dim = 0;
  REQUIRE(hc_poly_cyclic_dimension("1000101", 7, &dim) == HC_OK);
  CHECK(dim == 4);
  CHECK(hc_poly_cyclic_dimension("1000101", 6, &dim) == HC_ERR_PRECONDITION);
}

TEST_CASE("scan through the C interface is deterministic") {
  hc_scan_options o{5, 2, 200, 99};
  auto collect = [&](std::vector<std::uint64_t>& samples) {
    return hc_selfdual_scan(
        &o,
        [](const hc_scan_finding* f, void* user) {
          static_cast<std::vector<std::uint64_t>*>(user)->push_back(f->sample_index);
          CHECK(f->self_orthogonal);
          CHECK(f->graph_criterion == f->self_dual);
        },
        &samples);
  };
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;
  REQUIRE(collect(a) == HC_OK);
  REQUIRE(collect(b) == HC_OK);
  CHECK(a == b);
  CHECK_FALSE(a.empty());
}

TEST_CASE("verification through the C interface") {
  CHECK(hc_verify_tag_count() == 9);
  CHECK(std::string(hc_verify_tag(0)) == "fano");
  std::vector<std::string> failed;
  auto sink = [](const hc_criterion_result* r, void* user) {
    if (!r->passed) static_cast<std::vector<std::string>*>(user)->push_back(r->tag);
  };
  int all = 0;
  REQUIRE(hc_verify("fano", nullptr, 1, sink, &failed, &all) == HC_OK);
  CHECK(all == 1);
  CHECK(failed.empty());

  hc_hypergraph* corrupted = nullptr;
  REQUIRE(hc_hypergraph_parse("7 7\n0 1 2\n1 2 4\n2 3 5\n3 4 6\n0 4 5\n1 5 6\n0 2 6\n", &corrupted) == HC_OK);
  REQUIRE(hc_verify("fano", corrupted, 1, sink, &failed, &all) == HC_OK);
  CHECK(all == 0);
  CHECK(failed == std::vector<std::string>{"fano"});
  hc_hypergraph_free(corrupted);

  CHECK(hc_verify("bogus", nullptr, 1, sink, &failed, &all) == HC_ERR_INVALID_ARGUMENT);
}
