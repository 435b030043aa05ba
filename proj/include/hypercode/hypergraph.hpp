#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "hypercode/bitmatrix.hpp"
#include "hypercode/search.hpp"

namespace hypercode {

/// Sorted set of 0-based vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<std::size_t> members);
  explicit VertexSet(std::vector<std::size_t> members);
  /// Bit i of `mask` selects vertex i.
  static VertexSet from_mask(std::uint64_t mask);

  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(std::size_t v) const;

  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<std::size_t> members_;
};

using Edge = std::vector<std::size_t>;

/// Vertex count plus an ordered multiset of nonempty edges. Repeated edges
/// are kept in insertion order.
class Hypergraph {
 public:
  /// Edges are sorted on construction. Rejects zero vertices, empty edges,
  /// out-of-range vertices and repeated vertices within an edge.
  Hypergraph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t j) const;

  /// No repeated edges.
  bool is_simple() const;
  /// Every edge has exactly r vertices.
  bool is_uniform(std::size_t r) const;

  bool operator==(const Hypergraph&) const = default;

 private:
  std::size_t num_vertices_;
  std::vector<Edge> edges_;
};

/// n x m matrix with entry (i, j) set iff vertex i lies in edge j.
BitMatrix incidence_matrix(const Hypergraph& h);

/// Indices of the edges meeting `s` in an odd number of vertices.
std::vector<std::size_t> eonv(const Hypergraph& h, const VertexSet& s);

struct EonvMinimum {
  std::size_t distance;
  VertexSet witness;  ///< lexicographically smallest minimizer
  bool exact = true;  ///< false when an early-exit threshold stopped the search
};

/// Minimum of |eonv(S)| over nonempty S with eonv(S) nonempty, by Gray-code
/// enumeration of all 2^n - 1 vertex subsets.
EonvMinimum eonv_min(const Hypergraph& h, const SearchOptions& options = {});

/// Same search with the rows of an arbitrary binary matrix playing the role
/// of vertices and its columns the role of edges.
EonvMinimum eonv_min(const BitMatrix& incidence, const SearchOptions& options = {});

VertexSet complement_edge(const Hypergraph& h, std::size_t j);

/// Edges containing vertex u, in edge order.
std::vector<std::size_t> edges_at(const Hypergraph& h, std::size_t u);

/// Connectivity of the bipartite vertex/edge incidence structure.
bool is_connected(const Hypergraph& h);

// Families -------------------------------------------------------------------

/// Complete 3-partite 3-uniform hypergraph with parts X = [0, n), Y = [n, 2n),
/// Z = [2n, 3n); edges {i, n + j, 2n + k} in lexicographic (i, j, k) order.
Hypergraph complete_3partite(std::size_t n);

/// Size of eonv(S) in complete_3partite(n) for any S with k1, k2, k3 vertices
/// in the three parts.
std::uint64_t f_count(std::uint64_t n, std::uint64_t k1, std::uint64_t k2, std::uint64_t k3);

/// Points and lines of the binary projective geometry of F_2^n. Point with
/// coordinate vector a (read as an integer) is vertex a - 1; lines are
/// {a, b, a ^ b} with a < b < a ^ b in lexicographic order.
Hypergraph projective_geometry(std::size_t n);

/// Fano plane with lines {i, i+1, i+3} mod 7, i = 0..6.
Hypergraph fano_circulant();

/// Hypergraph whose incidence matrix is circulant with the given first row:
/// M[i][j] = first_row[(j - i) mod n].
Hypergraph circulant_hypergraph(const BitVector& first_row);

/// k blocks of m ones followed by m zeros (length 2km).
BitVector block_row(std::size_t k, std::size_t m);

}  // namespace hypercode
