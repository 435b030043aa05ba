#include "hypercode/bitmatrix.hpp"

#include <bit>
#include <string>
#include <utility>

#include "hypercode/error.hpp"

namespace hypercode {

BitMatrix::BitMatrix(std::size_t num_rows, std::size_t num_cols)
    : num_cols_(num_cols), rows_(num_rows, BitVector(num_cols)) {}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t num_cols) {
  for (const auto& r : rows) {
    if (r.size() != num_cols) {
      throw DimensionError("row of length " + std::to_string(r.size()) + " in a matrix with " +
                           std::to_string(num_cols) + " columns");
    }
  }
  BitMatrix m;
  m.num_cols_ = num_cols;
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string_view> rows) {
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (auto s : rows) parsed.push_back(BitVector::from_string(s));
  const std::size_t cols = parsed.empty() ? 0 : parsed.front().size();
  return from_rows(std::move(parsed), cols);
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  return from_strings(std::span<const std::string_view>(rows.begin(), rows.size()));
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_.size()) throw IndexError("row index " + std::to_string(r) + " out of range");
  rows_[r].set(c, value);
}

const BitVector& BitMatrix::row(std::size_t r) const {
  if (r >= rows_.size()) throw IndexError("row index " + std::to_string(r) + " out of range");
  return rows_[r];
}

void BitMatrix::set_row(std::size_t r, BitVector value) {
  if (r >= rows_.size()) throw IndexError("row index " + std::to_string(r) + " out of range");
  if (value.size() != num_cols_) throw DimensionError("row length does not match column count");
  rows_[r] = std::move(value);
}

void BitMatrix::append_row(BitVector value) {
  if (value.size() != num_cols_) throw DimensionError("row length does not match column count");
  rows_.push_back(std::move(value));
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a >= rows_.size() || b >= rows_.size()) throw IndexError("row index out of range");
  std::swap(rows_[a], rows_[b]);
}

void BitMatrix::add_row(std::size_t dst, std::size_t src) {
  if (dst >= rows_.size() || src >= rows_.size()) throw IndexError("row index out of range");
  rows_[dst] ^= rows_[src];
}

BitVector BitMatrix::column(std::size_t c) const {
  if (c >= num_cols_) throw IndexError("column index " + std::to_string(c) + " out of range");
  BitVector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].get(c)) out.set(r);
  }
  return out;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(num_cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c : rows_[r].support()) t.rows_[c].set(r);
  }
  return t;
}

bool BitMatrix::is_zero() const noexcept {
  for (const auto& r : rows_) {
    if (!r.is_zero()) return false;
  }
  return true;
}

RowEchelon rref(const BitMatrix& m) {
  RowEchelon out{m, {}};
  BitMatrix& r = out.reduced;
  const std::size_t rows = r.num_rows();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < r.num_cols() && pivot_row < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t i = pivot_row; i < rows; ++i) {
      if (r.row(i).get(c)) {
        found = i;
        break;
      }
    }
    if (found == rows) continue;
    if (found != pivot_row) r.swap_rows(found, pivot_row);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != pivot_row && r.row(i).get(c)) r.add_row(i, pivot_row);
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  return out;
}

std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

BitMatrix row_basis(const BitMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<BitVector> rows(e.reduced.rows().begin(),
                              e.reduced.rows().begin() + static_cast<std::ptrdiff_t>(e.pivots.size()));
  return BitMatrix::from_rows(std::move(rows), m.num_cols());
}

BitMatrix nullspace_basis(const BitMatrix& m) {
  const RowEchelon e = rref(m);
  const std::size_t cols = m.num_cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  BitMatrix basis(0, cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(cols);
    v.set(f);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      if (e.reduced.row(i).get(f)) v.set(e.pivots[i]);
    }
    basis.append_row(std::move(v));
  }
  return basis;
}

BitMatrix gram(const BitMatrix& m) {
  const std::size_t n = m.num_rows();
  BitMatrix g(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u; v < n; ++v) {
      if (dot(m.row(u), m.row(v))) {
        g.set(u, v);
        g.set(v, u);
      }
    }
  }
  return g;
}

BitVector multiply(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.num_cols()) throw DimensionError("vector length does not match column count");
  BitVector out(m.num_rows());
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    if (dot(m.row(r), v)) out.set(r);
  }
  return out;
}

bool row_space_equal(const BitMatrix& a, const BitMatrix& b) {
  if (a.num_cols() != b.num_cols()) {
    throw DimensionError("cannot compare row spaces of matrices with " + std::to_string(a.num_cols()) +
                         " and " + std::to_string(b.num_cols()) + " columns");
  }
  return row_basis(a) == row_basis(b);
}

BitVector row_combination(const BitMatrix& m, std::span<const std::size_t> rows) {
  BitVector acc(m.num_cols());
  for (std::size_t r : rows) acc ^= m.row(r);
  return acc;
}

}  // namespace hypercode
