#include "hypercode/bitvector.hpp"

#include <algorithm>
#include <bit>

#include "hypercode/error.hpp"

namespace hypercode {

namespace {

void require_same_length(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("bit vector length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ParseError("invalid bit character '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

BitVector BitVector::from_support(std::size_t length, std::span<const std::size_t> support) {
  BitVector v(length);
  for (std::size_t i : support) v.set(i);
  return v;
}

bool BitVector::get(std::size_t i) const {
  if (i >= length_) throw IndexError("bit index " + std::to_string(i) + " out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= length_) throw IndexError("bit index " + std::to_string(i) + " out of range");
  const Word mask = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void BitVector::flip(std::size_t i) {
  if (i >= length_) throw IndexError("bit index " + std::to_string(i) + " out of range");
  words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
}

std::size_t BitVector::weight() const noexcept {
  std::size_t w = 0;
  for (Word word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::is_zero() const noexcept {
  for (Word word : words_) {
    if (word != 0) return false;
  }
  return true;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word word = words_[w];
    while (word != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::optional<std::size_t> BitVector::lowest_set_bit() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::optional<std::size_t> BitVector::highest_set_bit() const noexcept {
  for (std::size_t w = words_.size(); w-- > 0;) {
    if (words_[w] != 0) {
      return w * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(words_[w])));
    }
  }
  return std::nullopt;
}

BitVector BitVector::resized(std::size_t length) const {
  BitVector out(length);
  const std::size_t shared = std::min(out.words_.size(), words_.size());
  for (std::size_t w = 0; w < shared; ++w) out.words_[w] = words_[w];
  if (length % kWordBits != 0 && !out.words_.empty()) {
    out.words_.back() &= (Word{1} << (length % kWordBits)) - 1;
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_length(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_length(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i : support()) s[i] = '1';
  return s;
}

bool dot(const BitVector& a, const BitVector& b) {
  require_same_length(a, b);
  const auto aw = a.words();
  const auto bw = b.words();
  int parity = 0;
  for (std::size_t w = 0; w < aw.size(); ++w) parity ^= std::popcount(aw[w] & bw[w]) & 1;
  return parity != 0;
}

}  // namespace hypercode
