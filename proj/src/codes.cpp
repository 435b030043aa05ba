#include "hypercode/codes.hpp"

#include <algorithm>
#include <iterator>
#include <string>
#include <utility>

#include "gray_search.hpp"
#include "hypercode/error.hpp"

namespace hypercode {

LinearCode::LinearCode(BitMatrix generator, BitMatrix basis, std::vector<std::size_t> pivots)
    : generator_(std::move(generator)), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

LinearCode LinearCode::from_generator(BitMatrix generator) {
  if (generator.num_cols() == 0) throw InvalidArgumentError("a code needs length >= 1");
  RowEchelon e = rref(generator);
  std::vector<BitVector> rows(e.reduced.rows().begin(),
                              e.reduced.rows().begin() + static_cast<std::ptrdiff_t>(e.pivots.size()));
  BitMatrix basis = BitMatrix::from_rows(std::move(rows), generator.num_cols());
  return LinearCode(std::move(generator), std::move(basis), std::move(e.pivots));
}

DistanceResult min_distance(const LinearCode& code, const SearchOptions& options) {
  if (code.dimension() == 0) throw NoCodewordError("zero-dimensional code has no nonzero codeword");
  detail::check_enumeration_budget(code.dimension(), options, "codeword search");
  const auto found = detail::min_weight_search(code.basis().rows(), code.length(), options,
                                               detail::WitnessOrder::first_in_gray_order);
  return DistanceResult{*found.weight, found.exact};
}

EonvMinimum min_distance_via_eonv(const Hypergraph& h, const SearchOptions& options) {
  return eonv_min(h, options);
}

Engine choose_engine(std::size_t dimension, std::size_t num_generator_rows) {
  return num_generator_rows < dimension ? Engine::eonv : Engine::codeword;
}

std::map<std::size_t, std::uint64_t> weight_distribution(const LinearCode& code, const SearchOptions& options) {
  std::map<std::size_t, std::uint64_t> counts{{0, 1}};
  const std::size_t k = code.dimension();
  if (k == 0) return counts;
  detail::check_enumeration_budget(k, options, "weight distribution");
  const detail::PackedRows packed(code.basis().rows(), code.length());
  const unsigned slots = options.threads == 0 ? 1 : options.threads;
  std::vector<std::vector<std::uint64_t>> local(slots, std::vector<std::uint64_t>(code.length() + 1, 0));
  detail::for_each_range(k, options.threads, [&](unsigned worker, std::uint64_t lo, std::uint64_t hi) {
    auto& hist = local[worker];
    detail::walk_gray_range(packed, lo, hi, [&](std::uint64_t, std::uint64_t, std::span<const detail::Word> acc) {
      ++hist[detail::popcount(acc)];
      return true;
    });
  });
  for (const auto& hist : local) {
    for (std::size_t w = 0; w < hist.size(); ++w) {
      if (hist[w] != 0) counts[w] += hist[w];
    }
  }
  return counts;
}

LinearCode dual(const LinearCode& code) { return LinearCode::from_generator(nullspace_basis(code.basis())); }

bool is_self_orthogonal(const LinearCode& code) { return gram(code.basis()).is_zero(); }

bool is_self_dual(const LinearCode& code) {
  return 2 * code.dimension() == code.length() && is_self_orthogonal(code);
}

namespace {

std::size_t shared_edge_count(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.size();
}

bool pairwise_even(const Hypergraph& h) {
  std::vector<std::vector<std::size_t>> at;
  at.reserve(h.num_vertices());
  for (std::size_t u = 0; u < h.num_vertices(); ++u) at.push_back(edges_at(h, u));
  for (std::size_t u = 0; u < at.size(); ++u) {
    if (at[u].size() % 2 != 0) return false;
    for (std::size_t v = u + 1; v < at.size(); ++v) {
      if (shared_edge_count(at[u], at[v]) % 2 != 0) return false;
    }
  }
  return true;
}

}  // namespace

bool structural_self_orthogonality(const Hypergraph& h) { return pairwise_even(h); }

bool graph_self_duality_criterion(const Hypergraph& h) {
  if (!h.is_uniform(2)) throw PreconditionError("self-duality criterion requires a 2-uniform hypergraph");
  if (!is_connected(h)) throw PreconditionError("self-duality criterion requires a connected graph");
  return h.num_edges() == 2 * h.num_vertices() - 2 && pairwise_even(h);
}

}  // namespace hypercode
