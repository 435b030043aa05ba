#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hypercode/bitvector.hpp"

namespace hypercode {

/// Dense binary matrix stored as packed rows. Indices are 0-based.
/// Matrices with zero rows or zero columns are valid.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t num_rows, std::size_t num_cols);

  /// Every row must have length `num_cols`.
  static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t num_cols);
  static BitMatrix from_strings(std::span<const std::string_view> rows);
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
  static BitMatrix identity(std::size_t n);

  std::size_t num_rows() const noexcept { return rows_.size(); }
  std::size_t num_cols() const noexcept { return num_cols_; }

  bool get(std::size_t r, std::size_t c) const { return row(r).get(c); }
  void set(std::size_t r, std::size_t c, bool value = true);

  const BitVector& row(std::size_t r) const;
  std::span<const BitVector> rows() const noexcept { return rows_; }
  void set_row(std::size_t r, BitVector value);
  void append_row(BitVector value);
  void swap_rows(std::size_t a, std::size_t b);
  /// rows[dst] ^= rows[src]
  void add_row(std::size_t dst, std::size_t src);

  BitVector column(std::size_t c) const;
  BitMatrix transpose() const;
  bool is_zero() const noexcept;

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t num_cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RowEchelon {
  BitMatrix reduced;                ///< same shape as the input, zero rows last
  std::vector<std::size_t> pivots;  ///< strictly increasing pivot columns
};

/// Reduced row-echelon form. Pivot rows are chosen as the lowest-index row
/// with a 1 in the leftmost unresolved column.
RowEchelon rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

/// Nonzero rows of rref(m): a canonical basis of the row space.
BitMatrix row_basis(const BitMatrix& m);

/// Basis of {v : m v = 0}, one row per free column, ordered by free column.
BitMatrix nullspace_basis(const BitMatrix& m);

/// m * m^T over GF(2).
BitMatrix gram(const BitMatrix& m);

/// m * v over GF(2); v must have num_cols entries.
BitVector multiply(const BitMatrix& m, const BitVector& v);

bool row_space_equal(const BitMatrix& a, const BitMatrix& b);

/// Sum of the selected rows; an empty selection gives the zero vector.
BitVector row_combination(const BitMatrix& m, std::span<const std::size_t> rows);

}  // namespace hypercode
