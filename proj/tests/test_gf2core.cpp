#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "hypercode/bitmatrix.hpp"
#include "hypercode/bitvector.hpp"
#include "hypercode/error.hpp"
#include "hypercode/text_format.hpp"
#include "oracles.hpp"

using namespace hypercode;

namespace {

BitMatrix to_bits(const oracle::Matrix& m, std::size_t cols) {
  BitMatrix out(m.size(), cols);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) out.set(i, j, m[i][j] == 1);
  }
  return out;
}

const BitMatrix& fano() {
  static const BitMatrix m = BitMatrix::from_strings(
      {"1000101", "1100010", "0110001", "1011000", "0101100", "0010110", "0001011"});
  return m;
}

}  // namespace

TEST_CASE("bit vector basics") {
  BitVector v(130);
  CHECK(v.is_zero());
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.weight() == 3);
  CHECK(v.support() == std::vector<std::size_t>{0, 64, 129});
  CHECK(v.lowest_set_bit() == 0);
  CHECK(v.highest_set_bit() == 129);
  v.flip(64);
  CHECK(v.weight() == 2);
  CHECK_THROWS_AS(v.get(130), IndexError);
  CHECK_THROWS_AS(BitVector::from_string("10x"), ParseError);
  CHECK_THROWS_AS(v ^= BitVector(3), DimensionError);
  CHECK(BitVector::from_string("1011").to_string() == "1011");
  CHECK(dot(BitVector::from_string("1101"), BitVector::from_string("1011")) == false);
  CHECK(dot(BitVector::from_string("1100"), BitVector::from_string("1000")) == true);
  const BitVector shrunk = BitVector::from_string("10000001").resized(3);
  CHECK(shrunk.to_string() == "100");
  CHECK(shrunk.resized(8).to_string() == "10000000");
}

TEST_CASE("rref examples") {
  const RowEchelon zero = rref(BitMatrix(2, 2));
  CHECK(zero.reduced == BitMatrix(2, 2));
  CHECK(zero.pivots.empty());

  const RowEchelon dup = rref(BitMatrix::from_strings({"11", "11"}));
  CHECK(dup.reduced == BitMatrix::from_strings({"11", "00"}));
  CHECK(dup.pivots == std::vector<std::size_t>{0});

  CHECK(rref(fano()).pivots.size() == 4);
}

TEST_CASE("rank examples") {
  CHECK(rank(BitMatrix::identity(5)) == 5);
  CHECK(rank(fano()) == 4);
  CHECK(rank(BitMatrix(0, 4)) == 0);
  CHECK(rank(BitMatrix(3, 0)) == 0);
}

TEST_CASE("nullspace examples") {
  const BitMatrix id = nullspace_basis(BitMatrix::identity(3));
  CHECK(id.num_rows() == 0);
  CHECK(id.num_cols() == 3);
  CHECK(nullspace_basis(BitMatrix::from_strings({"11"})) == BitMatrix::from_strings({"11"}));
  const BitMatrix ns = nullspace_basis(fano());
  CHECK(ns.num_rows() == 3);
  CHECK(ns.num_cols() == 7);
}

TEST_CASE("gram examples") {
  CHECK(gram(BitMatrix::identity(4)) == BitMatrix::identity(4));
  BitMatrix ones(7, 7);
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) ones.set(i, j);
  }
  CHECK(gram(fano()) == ones);
  CHECK(gram(BitMatrix::from_strings({"1111", "1100"})).is_zero());
}

TEST_CASE("row space equality examples") {
  const BitMatrix m = BitMatrix::from_strings({"1101", "0111", "1010"});
  CHECK(row_space_equal(m, rref(m).reduced));
  CHECK_FALSE(row_space_equal(BitMatrix::identity(2), BitMatrix::from_strings({"11"})));
  CHECK_FALSE(row_space_equal(fano(), nullspace_basis(fano())));
  CHECK_THROWS_AS(row_space_equal(BitMatrix::identity(2), BitMatrix::identity(3)), DimensionError);
}

TEST_CASE("row combination examples") {
  CHECK(row_combination(fano(), {}).is_zero());
  const std::vector<std::size_t> first{0};
  CHECK(row_combination(fano(), first).to_string() == "1000101");
  const std::vector<std::size_t> bad{7};
  CHECK_THROWS_AS(row_combination(fano(), bad), IndexError);
}

TEST_CASE("rank agrees with plain elimination and with the transpose") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = rng() % 17;
    const std::size_t c = rng() % 17;
    const auto plain = oracle::random_matrix(rng, r, c, static_cast<int>(rng() % 100));
    const BitMatrix m = to_bits(plain, c);
    CHECK(rank(m) == oracle::rank(plain));
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("rref is idempotent and rank plus nullity is the column count") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 12;
    const std::size_t c = 1 + rng() % 90;
    const BitMatrix m = to_bits(oracle::random_matrix(rng, r, c), c);
    const RowEchelon e = rref(m);
    CHECK(rref(e.reduced).reduced == e.reduced);
    CHECK(std::is_sorted(e.pivots.begin(), e.pivots.end()));
    CHECK(row_space_equal(m, e.reduced));
    const BitMatrix ns = nullspace_basis(m);
    CHECK(rank(m) + ns.num_rows() == c);
    CHECK(rank(ns) == ns.num_rows());
    // Every row of the span is orthogonal to every null vector.
    for (const BitVector& w : ns.rows()) {
      CHECK(multiply(m, w).is_zero());
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << std::min<std::size_t>(r, 6)); ++mask) {
        std::vector<std::size_t> pick;
        for (std::size_t i = 0; i < r; ++i) {
          if ((mask >> i) & 1U) pick.push_back(i);
        }
        CHECK_FALSE(dot(row_combination(m, pick), w));
      }
    }
  }
}

TEST_CASE("gram matches intersection parity") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 12;
    const std::size_t c = 1 + rng() % 20;
    const auto plain = oracle::random_matrix(rng, r, c);
    const BitMatrix g = gram(to_bits(plain, c));
    for (std::size_t u = 0; u < r; ++u) {
      for (std::size_t v = 0; v < r; ++v) {
        int both = 0;
        for (std::size_t j = 0; j < c; ++j) both += plain[u][j] & plain[v][j];
        CHECK(g.get(u, v) == (both % 2 == 1));
      }
    }
  }
}

TEST_CASE("row combination matches XOR in any order") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 10;
    const std::size_t c = 1 + rng() % 70;
    const BitMatrix m = to_bits(oracle::random_matrix(rng, r, c), c);
    std::vector<std::size_t> pick;
    for (std::size_t i = 0; i < r; ++i) {
      if (rng() % 2 == 0) pick.push_back(i);
    }
    std::vector<std::size_t> shuffled = pick;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    BitVector acc(c);
    for (std::size_t i : shuffled) acc ^= m.row(i);
    CHECK(row_combination(m, pick) == acc);
  }
}

TEST_CASE("matrix text format") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = rng() % 6;
    const std::size_t c = rng() % 80;
    const BitMatrix m = to_bits(oracle::random_matrix(rng, r, c), c);
    const std::string text = format_matrix(m);
    CHECK(parse_matrix(text) == m);
    CHECK(format_matrix(parse_matrix(text)) == text);
  }
  CHECK(format_matrix(BitMatrix::from_strings({"101", "010"})) == "2 3\n101\n010\n");
  CHECK(parse_matrix("1 2\n10\n\n") == BitMatrix::from_strings({"10"}));
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2\n10\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 2\n1a\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 2\n101\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 2\n10\n01\n"), ParseError);
}
