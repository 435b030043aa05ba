#include <string>
#include <vector>

#include "doctest.h"
#include "hypercode/codes.hpp"
#include "hypercode/error.hpp"
#include "hypercode/scan.hpp"
#include "hypercode/verify.hpp"

using namespace hypercode;

namespace {

std::vector<ScanFinding> scan(std::uint64_t seed, std::uint64_t budget, std::size_t uniformity = 2) {
  ScanOptions o;
  o.max_vertices = 6;
  o.uniformity = uniformity;
  o.budget = budget;
  o.seed = seed;
  std::vector<ScanFinding> out;
  selfdual_scan(o, [&](const ScanFinding& f) { out.push_back(f); });
  return out;
}

}  // namespace

TEST_CASE("scan is reproducible from its seed") {
  const auto a = scan(5, 300);
  const auto b = scan(5, 300);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].sample_index == b[i].sample_index);
    CHECK(a[i].hypergraph == b[i].hypergraph);
  }
  CHECK_FALSE(a.empty());
  CHECK(scan(5, 0).empty());
}

TEST_CASE("scan findings are self-orthogonal and agree with the criteria") {
  for (const ScanFinding& f : scan(6, 400)) {
    const LinearCode code = LinearCode::from_generator(incidence_matrix(f.hypergraph));
    CHECK(is_connected(f.hypergraph));
    CHECK(f.self_orthogonal);
    CHECK(f.structural);
    CHECK(f.rank == code.dimension());
    CHECK(f.self_dual == is_self_dual(code));
    REQUIRE(f.graph_criterion);
    CHECK(*f.graph_criterion == f.self_dual);
  }
  for (const ScanFinding& f : scan(7, 200, 3)) {
    CHECK(f.hypergraph.is_uniform(3));
    CHECK_FALSE(f.graph_criterion);
    CHECK(f.structural == f.self_orthogonal);
  }
  ScanOptions bad;
  bad.max_vertices = 1;
  CHECK_THROWS_AS(selfdual_scan(bad, [](const ScanFinding&) {}), PreconditionError);
}

TEST_CASE("verification criteria") {
  CHECK(criterion_tags().size() == 9);
  VerifyOptions only;
  only.only = "cyclic-dim";
  std::vector<CriterionResult> results;
  CHECK(run_verification(only, [&](const CriterionResult& r) { results.push_back(r); }));
  REQUIRE(results.size() == 1);
  CHECK(results[0].tag == "cyclic-dim");
  CHECK(results[0].passed);
  only.only = "no-such-criterion";
  CHECK_THROWS_AS(run_verification(only, [](const CriterionResult&) {}), InvalidArgumentError);
}

TEST_CASE("a corrupted Fano fixture fails its criterion") {
  VerifyOptions o;
  o.only = "fano";
  // Swap one vertex of the first line.
  std::vector<Edge> edges = fano_circulant().edges();
  edges[0] = {0, 1, 2};
  o.fano_fixture = Hypergraph(7, edges);
  std::vector<CriterionResult> results;
  CHECK_FALSE(run_verification(o, [&](const CriterionResult& r) { results.push_back(r); }));
  REQUIRE(results.size() == 1);
  CHECK_FALSE(results[0].passed);
  o.fano_fixture = fano_circulant();
  CHECK(run_verification(o, [](const CriterionResult&) {}));
}
