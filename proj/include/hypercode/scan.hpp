#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "hypercode/hypergraph.hpp"

namespace hypercode {

struct ScanOptions {
  std::size_t max_vertices = 6;
  std::size_t uniformity = 2;
  std::uint64_t budget = 1000;  ///< number of hypergraphs sampled
  std::uint64_t seed = 0;
};

struct ScanFinding {
  std::uint64_t sample_index;
  Hypergraph hypergraph;
  std::size_t rank;
  bool self_orthogonal;
  bool self_dual;
  bool structural;                      ///< even degrees and even pairwise co-degrees
  std::optional<bool> graph_criterion;  ///< 2-uniform samples only
};

/// Samples connected `uniformity`-uniform multi-hypergraphs on 2..max_vertices
/// vertices and reports those whose incidence code is self-orthogonal. The
/// sample sequence depends only on the options.
void selfdual_scan(const ScanOptions& options, const std::function<void(const ScanFinding&)>& on_finding);

}  // namespace hypercode
