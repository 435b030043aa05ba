#include "hypercode/search.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "hypercode/error.hpp"

namespace hypercode {

std::uint64_t enumeration_cap_from_env() {
  const char* raw = std::getenv("HYPERCODE_ENUM_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCap;
  const std::string_view text(raw);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidArgumentError("HYPERCODE_ENUM_CAP must be a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace hypercode
