#pragma once

// Gray-code enumeration of all GF(2) combinations of a row set. Both
// minimum-distance engines and the weight distribution run on top of this.

#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "hypercode/bitvector.hpp"
#include "hypercode/error.hpp"
#include "hypercode/search.hpp"

namespace hypercode::detail {

using Word = BitVector::Word;

/// Rows copied into one contiguous word array for the inner loop.
class PackedRows {
 public:
  PackedRows(std::span<const BitVector> rows, std::size_t length)
      : count_(rows.size()), stride_(BitVector::words_for(length)), words_(count_ * stride_, 0) {
    for (std::size_t r = 0; r < count_; ++r) {
      auto src = rows[r].words();
      for (std::size_t w = 0; w < stride_; ++w) words_[r * stride_ + w] = src[w];
    }
  }

  std::size_t count() const noexcept { return count_; }
  std::size_t stride() const noexcept { return stride_; }
  const Word* row(std::size_t r) const noexcept { return words_.data() + r * stride_; }

 private:
  std::size_t count_;
  std::size_t stride_;
  std::vector<Word> words_;
};

inline std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

/// Throws ResourceError when enumerating 2^bits - 1 combinations would exceed
/// the configured cap.
inline void check_enumeration_budget(std::size_t bits, const SearchOptions& options, const std::string& what) {
  if (bits > kMaxEnumerationBits ||
      (std::uint64_t{1} << bits) - 1 > options.enumeration_cap) {
    throw ResourceError(what + ": enumerating 2^" + std::to_string(bits) +
                        " combinations exceeds the enumeration cap of " +
                        std::to_string(options.enumeration_cap) + " evaluations");
  }
}

/// Splits [1, 2^bits) into contiguous ranges and runs fn(worker, lo, hi) on
/// each, one thread per range. Small searches stay on the calling thread.
template <class Fn>
void for_each_range(std::size_t bits, unsigned threads, Fn&& fn) {
  const std::uint64_t end = std::uint64_t{1} << bits;
  const std::uint64_t total = end - 1;
  unsigned workers = threads == 0 ? 1 : threads;
  if (total < (std::uint64_t{1} << 14)) workers = 1;
  if (workers > total) workers = static_cast<unsigned>(total == 0 ? 1 : total);
  if (workers == 1) {
    fn(0U, std::uint64_t{1}, end);
    return;
  }
  const std::uint64_t chunk = total / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::uint64_t lo = 1;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t hi = (w + 1 == workers) ? end : lo + chunk;
    pool.emplace_back([&fn, w, lo, hi] { fn(w, lo, hi); });
    lo = hi;
  }
  for (auto& t : pool) t.join();
}

/// Walks steps [lo, hi): at step i the accumulator holds the sum of the rows
/// selected by gray(i). visit(step, mask, acc) returns false to stop.
template <class Visit>
void walk_gray_range(const PackedRows& rows, std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
  const std::size_t stride = rows.stride();
  std::vector<Word> acc(stride, 0);
  std::uint64_t mask = gray(lo);
  for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
    const Word* r = rows.row(static_cast<std::size_t>(std::countr_zero(bits)));
    for (std::size_t w = 0; w < stride; ++w) acc[w] ^= r[w];
  }
  for (std::uint64_t i = lo; i < hi; ++i) {
    if (i != lo) {
      const auto flip = static_cast<std::size_t>(std::countr_zero(i));
      mask ^= std::uint64_t{1} << flip;
      const Word* r = rows.row(flip);
      for (std::size_t w = 0; w < stride; ++w) acc[w] ^= r[w];
    }
    if (!visit(i, mask, std::span<const Word>(acc))) return;
  }
}

inline std::size_t popcount(std::span<const Word> words) {
  std::size_t w = 0;
  for (Word x : words) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

/// Lexicographic order on subsets given as masks, comparing their ascending
/// member lists. A proper prefix sorts first.
inline bool subset_lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const int p = std::countr_zero(a ^ b);
  const bool p_in_a = (a >> p) & 1U;
  const std::uint64_t above = p == 63 ? 0 : ((p_in_a ? b : a) >> (p + 1));
  // The set holding p wins unless the other set ends before its next member.
  return p_in_a ? above != 0 : above == 0;
}

enum class WitnessOrder { first_in_gray_order, lexicographic_subset };

struct GraySearchResult {
  std::optional<std::size_t> weight;  ///< empty when every combination is zero
  std::uint64_t mask = 0;
  bool exact = true;
};

/// Minimum nonzero weight over all nonzero combinations of `rows`.
inline GraySearchResult min_weight_search(std::span<const BitVector> rows, std::size_t length,
                                          const SearchOptions& options, WitnessOrder order) {
  const std::size_t bits = rows.size();
  if (bits == 0) return {};
  const PackedRows packed(rows, length);

  struct Local {
    std::optional<std::size_t> weight;
    std::uint64_t mask = 0;
    std::uint64_t hit_step = std::numeric_limits<std::uint64_t>::max();
    std::size_t hit_weight = 0;
    std::uint64_t hit_mask = 0;
  };
  const unsigned slots = options.threads == 0 ? 1 : options.threads;
  std::vector<Local> locals(slots);
  std::atomic<std::uint64_t> first_hit{std::numeric_limits<std::uint64_t>::max()};
  const bool early = options.early_exit.has_value();
  const std::size_t threshold = options.early_exit.value_or(0);

  for_each_range(bits, options.threads, [&](unsigned worker, std::uint64_t lo, std::uint64_t hi) {
    Local& local = locals[worker];
    walk_gray_range(packed, lo, hi, [&](std::uint64_t step, std::uint64_t mask, std::span<const Word> acc) {
      if (early && (step & 1023U) == 0 && step > first_hit.load(std::memory_order_relaxed)) return false;
      const std::size_t w = popcount(acc);
      if (w == 0) return true;
      if (!local.weight || w < *local.weight ||
          (w == *local.weight && order == WitnessOrder::lexicographic_subset &&
           subset_lex_less(mask, local.mask))) {
        local.weight = w;
        local.mask = mask;
      }
      if (early && w <= threshold) {
        local.hit_step = step;
        local.hit_weight = w;
        local.hit_mask = mask;
        std::uint64_t seen = first_hit.load(std::memory_order_relaxed);
        while (step < seen && !first_hit.compare_exchange_weak(seen, step, std::memory_order_relaxed)) {
        }
        return false;
      }
      return true;
    });
  });

  GraySearchResult result;
  const std::uint64_t hit = first_hit.load();
  if (early && hit != std::numeric_limits<std::uint64_t>::max()) {
    for (const Local& local : locals) {
      if (local.hit_step == hit) {
        result.weight = local.hit_weight;
        result.mask = local.hit_mask;
        result.exact = false;
        return result;
      }
    }
  }
  // Workers are ordered by range, so a strict comparison keeps the earliest
  // minimizer for Gray order and the smallest subset for lexicographic order.
  for (const Local& local : locals) {
    if (!local.weight) continue;
    if (!result.weight || *local.weight < *result.weight ||
        (*local.weight == *result.weight && order == WitnessOrder::lexicographic_subset &&
         subset_lex_less(local.mask, result.mask))) {
      result.weight = local.weight;
      result.mask = local.mask;
    }
  }
  return result;
}

}  // namespace hypercode::detail
