#include "hypercode/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "gray_search.hpp"
#include "hypercode/error.hpp"

namespace hypercode {

VertexSet::VertexSet(std::initializer_list<std::size_t> members) : VertexSet(std::vector<std::size_t>(members)) {}

VertexSet::VertexSet(std::vector<std::size_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  std::vector<std::size_t> members;
  for (; mask != 0; mask &= mask - 1) members.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
  return VertexSet(std::move(members));
}

bool VertexSet::contains(std::size_t v) const { return std::binary_search(members_.begin(), members_.end(), v); }

Hypergraph::Hypergraph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ == 0) throw PreconditionError("a hypergraph needs at least one vertex");
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    Edge& e = edges_[j];
    if (e.empty()) throw InvalidArgumentError("edge " + std::to_string(j) + " is empty");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InvalidArgumentError("edge " + std::to_string(j) + " repeats a vertex");
    }
    if (e.back() >= num_vertices_) {
      throw InvalidArgumentError("edge " + std::to_string(j) + " uses vertex " + std::to_string(e.back()) +
                                 " but the hypergraph has " + std::to_string(num_vertices_) + " vertices");
    }
  }
}

const Edge& Hypergraph::edge(std::size_t j) const {
  if (j >= edges_.size()) throw IndexError("edge index " + std::to_string(j) + " out of range");
  return edges_[j];
}

bool Hypergraph::is_simple() const {
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool Hypergraph::is_uniform(std::size_t r) const {
  return std::all_of(edges_.begin(), edges_.end(), [r](const Edge& e) { return e.size() == r; });
}

BitMatrix incidence_matrix(const Hypergraph& h) {
  BitMatrix m(h.num_vertices(), h.num_edges());
  for (std::size_t j = 0; j < h.num_edges(); ++j) {
    for (std::size_t v : h.edge(j)) m.set(v, j);
  }
  return m;
}

namespace {

void check_vertex_set(const Hypergraph& h, const VertexSet& s) {
  if (s.empty()) throw PreconditionError("eonv is defined for nonempty vertex sets only");
  if (s.members().back() >= h.num_vertices()) {
    throw IndexError("vertex " + std::to_string(s.members().back()) + " out of range");
  }
}

}  // namespace

std::vector<std::size_t> eonv(const Hypergraph& h, const VertexSet& s) {
  check_vertex_set(h, s);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < h.num_edges(); ++j) {
    std::size_t hits = 0;
    for (std::size_t v : h.edge(j)) hits += s.contains(v) ? 1 : 0;
    if (hits % 2 == 1) out.push_back(j);
  }
  return out;
}

EonvMinimum eonv_min(const BitMatrix& incidence, const SearchOptions& options) {
  if (incidence.is_zero()) throw NoCodewordError("incidence matrix is zero; every eonv set is empty");
  detail::check_enumeration_budget(incidence.num_rows(), options, "eonv search");
  const auto found = detail::min_weight_search(incidence.rows(), incidence.num_cols(), options,
                                               detail::WitnessOrder::lexicographic_subset);
  return EonvMinimum{*found.weight, VertexSet::from_mask(found.mask), found.exact};
}

EonvMinimum eonv_min(const Hypergraph& h, const SearchOptions& options) {
  // Flipping vertex v toggles the parity of exactly the edges at v.
  std::vector<BitVector> toggles(h.num_vertices(), BitVector(h.num_edges()));
  for (std::size_t j = 0; j < h.num_edges(); ++j) {
    for (std::size_t v : h.edge(j)) toggles[v].set(j);
  }
  return eonv_min(BitMatrix::from_rows(std::move(toggles), h.num_edges()), options);
}

VertexSet complement_edge(const Hypergraph& h, std::size_t j) {
  const Edge& e = h.edge(j);
  std::vector<std::size_t> rest;
  rest.reserve(h.num_vertices() - e.size());
  std::size_t next = 0;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    if (next < e.size() && e[next] == v) {
      ++next;
    } else {
      rest.push_back(v);
    }
  }
  return VertexSet(std::move(rest));
}

std::vector<std::size_t> edges_at(const Hypergraph& h, std::size_t u) {
  if (u >= h.num_vertices()) throw IndexError("vertex " + std::to_string(u) + " out of range");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < h.num_edges(); ++j) {
    if (std::binary_search(h.edge(j).begin(), h.edge(j).end(), u)) out.push_back(j);
  }
  return out;
}

bool is_connected(const Hypergraph& h) {
  std::vector<std::size_t> parent(h.num_vertices());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = h.num_vertices();
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) {
      const std::size_t a = find(e[0]);
      const std::size_t b = find(e[i]);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components == 1;
}

Hypergraph complete_3partite(std::size_t n) {
  if (n == 0) throw PreconditionError("complete 3-partite hypergraph needs parts of size >= 1");
  std::vector<Edge> edges;
  edges.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) edges.push_back({i, n + j, 2 * n + k});
    }
  }
  return Hypergraph(3 * n, std::move(edges));
}

std::uint64_t f_count(std::uint64_t n, std::uint64_t k1, std::uint64_t k2, std::uint64_t k3) {
  if (k1 > n || k2 > n || k3 > n) {
    throw PreconditionError("part counts must lie in [0, " + std::to_string(n) + "]");
  }
  return k1 * (n - k2) * (n - k3) + (n - k1) * k2 * (n - k3) + (n - k1) * (n - k2) * k3 + k1 * k2 * k3;
}

Hypergraph projective_geometry(std::size_t n) {
  if (n < 3) throw PreconditionError("projective geometry needs n >= 3");
  if (n > 20) throw PreconditionError("projective geometry limited to n <= 20");
  const std::size_t points = (std::size_t{1} << n) - 1;
  std::vector<Edge> lines;
  for (std::size_t a = 1; a <= points; ++a) {
    for (std::size_t b = a + 1; b <= points; ++b) {
      const std::size_t c = a ^ b;
      if (c > b) lines.push_back({a - 1, b - 1, c - 1});
    }
  }
  return Hypergraph(points, std::move(lines));
}

Hypergraph fano_circulant() {
  std::vector<Edge> lines;
  for (std::size_t i = 0; i < 7; ++i) lines.push_back({i, (i + 1) % 7, (i + 3) % 7});
  return Hypergraph(7, std::move(lines));
}

Hypergraph circulant_hypergraph(const BitVector& first_row) {
  const std::size_t n = first_row.size();
  if (n == 0) throw PreconditionError("circulant first row must be nonempty");
  if (first_row.is_zero()) throw InvalidArgumentError("zero first row would give empty edges");
  const auto ones = first_row.support();
  std::vector<Edge> edges(n);
  // Column j holds first_row[(j - i) mod n] in row i, so i = (j - s) mod n for
  // every set position s.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t s : ones) edges[j].push_back((j + n - s) % n);
  }
  return Hypergraph(n, std::move(edges));
}

BitVector block_row(std::size_t k, std::size_t m) {
  if (k == 0 || m == 0) throw PreconditionError("block row needs k >= 1 and m >= 1");
  BitVector r(2 * k * m);
  for (std::size_t block = 0; block < k; ++block) {
    for (std::size_t t = 0; t < m; ++t) r.set(2 * block * m + t);
  }
  return r;
}

}  // namespace hypercode
