#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "hypercode/bitmatrix.hpp"
#include "hypercode/hypergraph.hpp"
#include "hypercode/search.hpp"

namespace hypercode {

enum class Method { automatic, codeword, eonv, both };

std::string_view method_name(Method m);

struct AnalysisOptions {
  Method method = Method::automatic;
  bool weights = false;
  SearchOptions search;
};

/// Parameters of rs(M) for a generator/incidence matrix M.
struct AnalysisReport {
  std::size_t length = 0;
  std::size_t dimension = 0;
  std::optional<std::size_t> min_distance;  ///< absent for zero-dimensional codes
  bool min_distance_exact = true;
  Method method = Method::codeword;         ///< engine(s) actually run; never automatic
  std::optional<VertexSet> witness;         ///< 0-based; present iff the eonv engine produced the distance
  bool self_orthogonal = false;
  bool self_dual = false;
  std::optional<std::map<std::size_t, std::uint64_t>> weight_distribution;
};

/// Rows of `generator` act as vertices for the eonv engine. With
/// Method::both a disagreement between the engines raises
/// EngineDisagreementError.
AnalysisReport analyze(const BitMatrix& generator, const AnalysisOptions& options = {});
AnalysisReport analyze(const Hypergraph& h, const AnalysisOptions& options = {});

}  // namespace hypercode
