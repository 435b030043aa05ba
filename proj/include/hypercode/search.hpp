#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace hypercode {

/// Hard limit on the number of weight evaluations a single exhaustive search
/// may perform before it is refused with a ResourceError.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 32;

/// Largest subset/message bit width the enumerators accept.
inline constexpr std::size_t kMaxEnumerationBits = 62;

/// Reads HYPERCODE_ENUM_CAP, falling back to kDefaultEnumerationCap when the
/// variable is unset. A malformed value raises InvalidArgumentError.
std::uint64_t enumeration_cap_from_env();

struct SearchOptions {
  unsigned threads = 1;
  /// Stop at the first vector (in Gray-code order) of weight <= early_exit.
  /// A search that stops this way reports an upper bound, not the exact value.
  std::optional<std::size_t> early_exit;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

}  // namespace hypercode
