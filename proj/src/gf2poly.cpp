#include "hypercode/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "hypercode/error.hpp"

namespace hypercode {

namespace {

using Word = BitVector::Word;
constexpr std::size_t kBits = BitVector::kWordBits;

std::vector<Word> to_words(const GF2Poly& p) {
  auto w = p.coefficients().words();
  return {w.begin(), w.end()};
}

std::optional<std::size_t> degree_of(const std::vector<Word>& words) {
  for (std::size_t w = words.size(); w-- > 0;) {
    if (words[w] != 0) return w * kBits + (kBits - 1 - static_cast<std::size_t>(std::countl_zero(words[w])));
  }
  return std::nullopt;
}

BitVector canonical(const std::vector<Word>& words) {
  const auto deg = degree_of(words);
  if (!deg) return BitVector();
  BitVector out(*deg + 1);
  auto dst = out.words();
  std::copy_n(words.begin(), dst.size(), dst.begin());
  return out;
}

// dst ^= src * x^shift; dst must be large enough.
void xor_shifted(std::vector<Word>& dst, std::span<const Word> src, std::size_t shift) {
  const std::size_t word_shift = shift / kBits;
  const std::size_t bit_shift = shift % kBits;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i] == 0) continue;
    dst[i + word_shift] ^= src[i] << bit_shift;
    if (bit_shift != 0 && i + word_shift + 1 < dst.size()) dst[i + word_shift + 1] ^= src[i] >> (kBits - bit_shift);
  }
}

}  // namespace

GF2Poly GF2Poly::from_coefficients(const BitVector& coefficients) {
  const auto w = coefficients.words();
  return GF2Poly(canonical(std::vector<Word>(w.begin(), w.end())));
}

GF2Poly GF2Poly::from_exponents(std::initializer_list<std::size_t> exponents) {
  std::size_t top = 0;
  for (std::size_t e : exponents) top = std::max(top, e);
  BitVector c(exponents.size() == 0 ? 0 : top + 1);
  for (std::size_t e : exponents) c.flip(e);
  return from_coefficients(c);
}

GF2Poly GF2Poly::monomial(std::size_t exponent) {
  BitVector c(exponent + 1);
  c.set(exponent);
  return GF2Poly(std::move(c));
}

GF2Poly GF2Poly::x_pow_n_minus_one(std::size_t n) {
  if (n == 0) return GF2Poly();
  BitVector c(n + 1);
  c.set(0);
  c.set(n);
  return GF2Poly(std::move(c));
}

GF2Poly GF2Poly::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty polynomial string");
  return from_coefficients(BitVector::from_string(text));
}

bool GF2Poly::coefficient(std::size_t exponent) const {
  return exponent < coefficients_.size() && coefficients_.get(exponent);
}

std::string GF2Poly::to_string() const { return is_zero() ? "0" : coefficients_.to_string(); }

GF2Poly poly_add(const GF2Poly& a, const GF2Poly& b) {
  std::vector<Word> out = to_words(a.coefficients().size() >= b.coefficients().size() ? a : b);
  const auto other = (a.coefficients().size() >= b.coefficients().size() ? b : a).coefficients().words();
  for (std::size_t w = 0; w < other.size(); ++w) out[w] ^= other[w];
  return GF2Poly::from_coefficients(canonical(out));
}

GF2Poly poly_mul(const GF2Poly& a, const GF2Poly& b) {
  if (a.is_zero() || b.is_zero()) return GF2Poly();
  const std::size_t deg = *a.degree() + *b.degree();
  std::vector<Word> out(BitVector::words_for(deg + 1) + 1, 0);
  const auto bw = b.coefficients().words();
  for (std::size_t e : a.support()) xor_shifted(out, bw, e);
  return GF2Poly::from_coefficients(canonical(out));
}

GF2Poly poly_rem(const GF2Poly& a, const GF2Poly& b) {
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  std::vector<Word> r = to_words(a);
  const std::size_t db = *b.degree();
  const auto bw = b.coefficients().words();
  for (auto dr = degree_of(r); dr && *dr >= db; dr = degree_of(r)) xor_shifted(r, bw, *dr - db);
  return GF2Poly::from_coefficients(canonical(r));
}

GF2Poly poly_gcd(const GF2Poly& a, const GF2Poly& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidArgumentError("gcd(0, 0) is undefined");
  GF2Poly x = a;
  GF2Poly y = b;
  while (!y.is_zero()) {
    GF2Poly r = poly_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::size_t cyclic_code_dimension(const GF2Poly& p, std::size_t n) {
  if (p.is_zero()) throw PreconditionError("generator polynomial must be nonzero");
  if (*p.degree() >= n) throw PreconditionError("generator polynomial degree must be below the code length");
  return n - *poly_gcd(p, GF2Poly::x_pow_n_minus_one(n)).degree();
}

BitMatrix circulant_matrix(const BitVector& first_row) {
  const std::size_t n = first_row.size();
  BitMatrix m(n, n);
  for (std::size_t s : first_row.support()) {
    for (std::size_t i = 0; i < n; ++i) m.set(i, (i + s) % n);
  }
  return m;
}

GF2Poly row_polynomial(const BitMatrix& m, std::size_t i) { return GF2Poly::from_coefficients(m.row(i)); }

std::size_t eonv_weight_via_polys(const Hypergraph& h, const VertexSet& s) {
  if (s.empty()) throw PreconditionError("eonv is defined for nonempty vertex sets only");
  const BitMatrix m = incidence_matrix(h);
  if (m.num_rows() != m.num_cols() || circulant_matrix(m.row(0)) != m) {
    throw PreconditionError("hypergraph does not have a square circulant incidence matrix");
  }
  GF2Poly sum;
  for (std::size_t t : s.members()) sum = poly_add(sum, row_polynomial(m, t));
  return sum.weight();
}

std::size_t block_circulant_bound(std::size_t k, std::size_t m) {
  if (k == 0 || m == 0) throw PreconditionError("block parameters must be >= 1");
  return m == 1 ? k : 2 * k;
}

}  // namespace hypercode
