#include "hypercode/analysis.hpp"

#include <cstdlib>
#include <functional>
#include <string>

#include "hypercode/codes.hpp"
#include "hypercode/error.hpp"

namespace hypercode {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::automatic:
      return "auto";
    case Method::codeword:
      return "codeword";
    case Method::eonv:
      return "eonv";
    case Method::both:
      return "both";
  }
  return "unknown";
}

namespace {

// Test hook: HYPERCODE_FAULT_EONV_OFFSET=<k> adds k to every eonv distance so
// the engine cross-check can be exercised end to end.
std::size_t eonv_fault_offset() {
  const char* raw = std::getenv("HYPERCODE_FAULT_EONV_OFFSET");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0') throw InvalidArgumentError("HYPERCODE_FAULT_EONV_OFFSET must be a non-negative integer");
  return static_cast<std::size_t>(value);
}

AnalysisReport analyze_impl(const BitMatrix& generator, const AnalysisOptions& options,
                            const std::function<EonvMinimum(const SearchOptions&)>& run_eonv) {
  const LinearCode code = LinearCode::from_generator(generator);
  AnalysisReport report;
  report.length = code.length();
  report.dimension = code.dimension();
  report.self_orthogonal = is_self_orthogonal(code);
  report.self_dual = is_self_dual(code);

  Method method = options.method;
  if (method == Method::automatic) {
    method = choose_engine(code.dimension(), generator.num_rows()) == Engine::eonv ? Method::eonv : Method::codeword;
  }
  report.method = method;

  if (code.dimension() > 0) {
    std::optional<DistanceResult> by_codeword;
    std::optional<EonvMinimum> by_eonv;
    if (method == Method::codeword || method == Method::both) by_codeword = min_distance(code, options.search);
    if (method == Method::eonv || method == Method::both) {
      by_eonv = run_eonv(options.search);
      by_eonv->distance += eonv_fault_offset();
    }

    if (by_codeword && by_eonv) {
      if (by_codeword->exact != by_eonv->exact ||
          (by_codeword->exact && by_codeword->distance != by_eonv->distance)) {
        throw EngineDisagreementError("codeword engine reports " + std::to_string(by_codeword->distance) +
                                      (by_codeword->exact ? "" : " (bound)") + ", eonv engine reports " +
                                      std::to_string(by_eonv->distance) + (by_eonv->exact ? "" : " (bound)"));
      }
      // Equal when exact; otherwise both are upper bounds and the eonv one has a witness.
      report.min_distance = by_eonv->distance;
      report.min_distance_exact = by_codeword->exact;
      report.witness = by_eonv->witness;
    } else if (by_codeword) {
      report.min_distance = by_codeword->distance;
      report.min_distance_exact = by_codeword->exact;
    } else {
      report.min_distance = by_eonv->distance;
      report.min_distance_exact = by_eonv->exact;
      report.witness = by_eonv->witness;
    }
  }

  if (options.weights) report.weight_distribution = weight_distribution(code, options.search);
  return report;
}

}  // namespace

AnalysisReport analyze(const BitMatrix& generator, const AnalysisOptions& options) {
  return analyze_impl(generator, options, [&](const SearchOptions& s) { return eonv_min(generator, s); });
}

AnalysisReport analyze(const Hypergraph& h, const AnalysisOptions& options) {
  return analyze_impl(incidence_matrix(h), options, [&](const SearchOptions& s) { return min_distance_via_eonv(h, s); });
}

}  // namespace hypercode
