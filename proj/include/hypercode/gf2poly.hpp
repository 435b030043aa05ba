#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypercode/bitmatrix.hpp"
#include "hypercode/bitvector.hpp"
#include "hypercode/hypergraph.hpp"

namespace hypercode {

/// Polynomial over GF(2). Coefficient j is the coefficient of x^j; the
/// coefficient vector never carries zeros above the degree.
class GF2Poly {
 public:
  /// The zero polynomial.
  GF2Poly() = default;
  static GF2Poly from_coefficients(const BitVector& coefficients);
  static GF2Poly from_exponents(std::initializer_list<std::size_t> exponents);
  static GF2Poly monomial(std::size_t exponent);
  /// x^n - 1, which over GF(2) is x^n + 1.
  static GF2Poly x_pow_n_minus_one(std::size_t n);
  /// Ascending coefficient string, e.g. "1000101" is 1 + x^4 + x^6. Trailing
  /// zeros are accepted and dropped.
  static GF2Poly parse(std::string_view text);

  /// nullopt stands for the degree of the zero polynomial (-infinity).
  std::optional<std::size_t> degree() const noexcept { return coefficients_.highest_set_bit(); }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  bool coefficient(std::size_t exponent) const;
  const BitVector& coefficients() const noexcept { return coefficients_; }
  std::vector<std::size_t> support() const { return coefficients_.support(); }
  std::size_t weight() const noexcept { return coefficients_.weight(); }

  /// Ascending coefficient string; the zero polynomial prints as "0".
  std::string to_string() const;

  bool operator==(const GF2Poly&) const = default;

 private:
  explicit GF2Poly(BitVector canonical) : coefficients_(std::move(canonical)) {}

  BitVector coefficients_;
};

GF2Poly poly_add(const GF2Poly& a, const GF2Poly& b);
/// Carry-less product.
GF2Poly poly_mul(const GF2Poly& a, const GF2Poly& b);
/// Remainder of a modulo b. Throws DivisionByZeroError for b = 0.
GF2Poly poly_rem(const GF2Poly& a, const GF2Poly& b);
/// Euclidean gcd. Throws InvalidArgumentError when both inputs are zero.
GF2Poly poly_gcd(const GF2Poly& a, const GF2Poly& b);

/// Dimension of the length-n cyclic code generated by p: n - deg gcd(p, x^n - 1).
std::size_t cyclic_code_dimension(const GF2Poly& p, std::size_t n);

/// n x n circulant matrix with first row `first_row` (row i is the first row
/// shifted right i times).
BitMatrix circulant_matrix(const BitVector& first_row);

/// Row i of m read as a polynomial: column j contributes x^j.
GF2Poly row_polynomial(const BitMatrix& m, std::size_t i);

/// |eonv(S)| computed as the weight of the sum of the row polynomials of S.
/// Requires h to have a square circulant incidence matrix.
std::size_t eonv_weight_via_polys(const Hypergraph& h, const VertexSet& s);

/// Lower bound on the minimum distance of the cyclic code generated by
/// block_row(k, m): k when m = 1, otherwise 2k.
std::size_t block_circulant_bound(std::size_t k, std::size_t m);

}  // namespace hypercode
