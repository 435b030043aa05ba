#include "hypercode/scan.hpp"

#include <numeric>
#include <random>
#include <vector>

#include "hypercode/codes.hpp"
#include "hypercode/error.hpp"

namespace hypercode {

namespace {

// Reduction by modulo keeps the sequence identical across standard libraries,
// unlike std::uniform_int_distribution.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); }

Edge random_edge(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[draw(rng, i, n - 1)]);
  return Edge(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
}

Hypergraph sample(std::mt19937_64& rng, std::size_t max_vertices, std::size_t k) {
  const std::size_t n = draw(rng, std::max<std::size_t>(2, k), max_vertices);
  std::vector<Edge> edges;
  if (draw(rng, 0, 1) == 0) {
    // Every edge twice: all co-degrees even, so these are self-orthogonal.
    const std::size_t distinct = draw(rng, 1, n + 1);
    for (std::size_t i = 0; i < distinct; ++i) {
      Edge e = random_edge(rng, n, k);
      edges.push_back(e);
      edges.push_back(std::move(e));
    }
  } else {
    const std::size_t m = draw(rng, 1, 2 * n + 2);
    for (std::size_t i = 0; i < m; ++i) edges.push_back(random_edge(rng, n, k));
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace

void selfdual_scan(const ScanOptions& options, const std::function<void(const ScanFinding&)>& on_finding) {
  if (options.max_vertices < 2) throw PreconditionError("scan needs max_vertices >= 2");
  if (options.uniformity == 0 || options.uniformity > options.max_vertices) {
    throw PreconditionError("uniformity must lie in [1, max_vertices]");
  }
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t i = 0; i < options.budget; ++i) {
    Hypergraph h = sample(rng, options.max_vertices, options.uniformity);
    if (!is_connected(h)) continue;
    const LinearCode code = LinearCode::from_generator(incidence_matrix(h));
    const bool self_orthogonal = is_self_orthogonal(code);
    if (!self_orthogonal) continue;
    ScanFinding finding{i,
                        h,
                        code.dimension(),
                        self_orthogonal,
                        is_self_dual(code),
                        structural_self_orthogonality(h),
                        std::nullopt};
    if (options.uniformity == 2) finding.graph_criterion = graph_self_duality_criterion(h);
    on_finding(finding);
  }
}

}  // namespace hypercode
