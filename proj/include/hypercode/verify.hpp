#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypercode/hypergraph.hpp"
#include "hypercode/search.hpp"

namespace hypercode {

struct CriterionResult {
  std::string tag;
  std::string title;
  bool passed = false;
  std::string observed;
  std::string expected;
  double seconds = 0.0;
  double time_limit = 0.0;
};

struct VerifyOptions {
  /// Run only the criterion with this tag; empty runs all of them.
  std::string only;
  /// Replaces the built-in Fano plane in the Fano criterion.
  std::optional<Hypergraph> fano_fixture;
  SearchOptions search;
};

/// Tags of the reproduction criteria, in execution order.
const std::vector<std::string>& criterion_tags();

/// Runs the reproduction criteria, reporting each result as it completes.
/// Returns true iff every criterion that ran passed. An unknown `only` tag
/// raises InvalidArgumentError.
bool run_verification(const VerifyOptions& options, const std::function<void(const CriterionResult&)>& on_result);

}  // namespace hypercode
