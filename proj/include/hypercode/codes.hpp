#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "hypercode/bitmatrix.hpp"
#include "hypercode/hypergraph.hpp"
#include "hypercode/search.hpp"

namespace hypercode {

/// Binary linear code given as the row space of a generator matrix.
class LinearCode {
 public:
  /// Throws InvalidArgumentError when the generator has no columns.
  static LinearCode from_generator(BitMatrix generator);

  const BitMatrix& generator() const noexcept { return generator_; }
  /// Nonzero rows of the reduced row-echelon form of the generator.
  const BitMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::size_t length() const noexcept { return generator_.num_cols(); }
  std::size_t dimension() const noexcept { return basis_.num_rows(); }

 private:
  LinearCode(BitMatrix generator, BitMatrix basis, std::vector<std::size_t> pivots);

  BitMatrix generator_;
  BitMatrix basis_;
  std::vector<std::size_t> pivots_;
};

struct DistanceResult {
  std::size_t distance;
  bool exact = true;
};

/// Minimum nonzero codeword weight by Gray-code enumeration of the 2^k - 1
/// nonzero messages. Throws NoCodewordError for k = 0 and ResourceError when
/// 2^k - 1 exceeds the enumeration cap.
DistanceResult min_distance(const LinearCode& code, const SearchOptions& options = {});

/// Minimum distance of rs(incidence_matrix(h)) through the eonv search over
/// vertex subsets.
EonvMinimum min_distance_via_eonv(const Hypergraph& h, const SearchOptions& options = {});

enum class Engine { codeword, eonv };

/// Picks the engine with the smaller enumeration exponent (ties go to the
/// codeword engine).
Engine choose_engine(std::size_t dimension, std::size_t num_generator_rows);

/// Number of codewords of each weight. Counts sum to 2^k.
std::map<std::size_t, std::uint64_t> weight_distribution(const LinearCode& code, const SearchOptions& options = {});

LinearCode dual(const LinearCode& code);

bool is_self_orthogonal(const LinearCode& code);
bool is_self_dual(const LinearCode& code);

/// Every vertex has even degree and every two distinct vertices share an even
/// number of edges.
bool structural_self_orthogonality(const Hypergraph& h);

/// Self-duality test for connected graphs: |E| = 2|V| - 2 and every pair of
/// vertices (including u = v) shares an even number of edges. Throws
/// PreconditionError unless h is 2-uniform and connected.
bool graph_self_duality_criterion(const Hypergraph& h);

}  // namespace hypercode
