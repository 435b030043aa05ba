#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypercode {

/// Fixed-length vector over GF(2), packed 64 coordinates per word.
/// Bits at positions >= size() in the last word are always zero.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length);

  /// Parses a string of '0'/'1' characters; index i is character i.
  static BitVector from_string(std::string_view bits);
  static BitVector from_support(std::size_t length, std::span<const std::size_t> support);

  static constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool get(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);
  bool operator[](std::size_t i) const { return get(i); }

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  std::vector<std::size_t> support() const;
  std::optional<std::size_t> lowest_set_bit() const noexcept;
  std::optional<std::size_t> highest_set_bit() const noexcept;

  /// Copy of the vector truncated or zero-extended to `length`.
  BitVector resized(std::size_t length) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }

  bool operator==(const BitVector&) const = default;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  std::string to_string() const;

 private:
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

/// Standard inner product over GF(2).
bool dot(const BitVector& a, const BitVector& b);

}  // namespace hypercode
