#include <random>
#include <vector>

#include "doctest.h"
#include "hypercode/bitmatrix.hpp"
#include "hypercode/error.hpp"
#include "hypercode/gf2poly.hpp"
#include "hypercode/hypergraph.hpp"
#include "oracles.hpp"

using namespace hypercode;

namespace {

GF2Poly random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  BitVector c(max_degree + 1);
  for (std::size_t j = 0; j <= max_degree; ++j) c.set(j, rng() % 2 == 0);
  return GF2Poly::from_coefficients(c);
}

oracle::Bits coefficients(const GF2Poly& p) {
  oracle::Bits out;
  for (std::size_t j = 0; j < p.coefficients().size(); ++j) out.push_back(p.coefficient(j) ? 1 : 0);
  return out;
}

GF2Poly P(std::string_view s) { return GF2Poly::parse(s); }

}  // namespace

TEST_CASE("canonical form") {
  const GF2Poly zero;
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.degree());
  CHECK(zero.to_string() == "0");
  CHECK(P("0000").is_zero());
  CHECK(P("1010000") == GF2Poly::from_exponents({0, 2}));
  CHECK(P("1010000").to_string() == "101");
  CHECK(P("1000101").degree() == 6);
  CHECK(P("1000101").support() == std::vector<std::size_t>{0, 4, 6});
  CHECK(GF2Poly::monomial(3).to_string() == "0001");
  CHECK(GF2Poly::x_pow_n_minus_one(3).to_string() == "1001");
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("12"), ParseError);
}

TEST_CASE("addition") {
  const GF2Poly a = P("1101");
  CHECK(poly_add(a, a).is_zero());
  CHECK(poly_add(P("11"), P("011")) == P("101"));
}

TEST_CASE("multiplication") {
  CHECK(poly_mul(P("11"), P("11")) == P("101"));
  CHECK(poly_mul(P("1101"), P("1")) == P("1101"));
  CHECK(poly_mul(P("1101"), GF2Poly()).is_zero());
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const GF2Poly a = random_poly(rng, rng() % 140);
    const GF2Poly b = random_poly(rng, rng() % 140);
    const GF2Poly prod = poly_mul(a, b);
    CHECK(coefficients(prod) == oracle::convolve(coefficients(a), coefficients(b)));
    if (!a.is_zero() && !b.is_zero()) CHECK(prod.degree() == *a.degree() + *b.degree());
  }
}

TEST_CASE("remainder") {
  CHECK(poly_rem(P("101"), P("11")).is_zero());
  CHECK(poly_rem(P("1101"), P("1")).is_zero());
  CHECK(poly_rem(GF2Poly::x_pow_n_minus_one(7), P("1011")).is_zero());
  CHECK_THROWS_AS(poly_rem(P("1"), GF2Poly()), DivisionByZeroError);
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    const GF2Poly a = random_poly(rng, rng() % 150);
    GF2Poly b = random_poly(rng, rng() % 80);
    if (b.is_zero()) b = P("1");
    const GF2Poly r = poly_rem(a, b);
    if (!r.is_zero()) CHECK(*r.degree() < *b.degree());
    // a - r must be a multiple of b: its remainder is zero and r is fixed by reduction.
    CHECK(poly_rem(poly_add(a, r), b).is_zero());
    CHECK(poly_rem(poly_add(poly_mul(a, b), r), b) == r);
  }
}

TEST_CASE("gcd") {
  CHECK(poly_gcd(P("1101"), GF2Poly()) == P("1101"));
  CHECK(poly_gcd(P("11"), GF2Poly::x_pow_n_minus_one(7)) == P("11"));
  const GF2Poly g = poly_gcd(P("1000101"), GF2Poly::x_pow_n_minus_one(7));
  CHECK(g.degree() == 3);
  CHECK_THROWS_AS(poly_gcd(GF2Poly(), GF2Poly()), InvalidArgumentError);
  std::mt19937_64 rng(43);
  for (int t = 0; t < 200; ++t) {
    const GF2Poly common = random_poly(rng, rng() % 8);
    if (common.is_zero()) continue;
    const GF2Poly a = poly_mul(common, random_poly(rng, rng() % 30));
    const GF2Poly b = poly_mul(common, random_poly(rng, rng() % 30));
    if (a.is_zero() && b.is_zero()) continue;
    const GF2Poly d = poly_gcd(a, b);
    CHECK(poly_rem(a, d).is_zero());
    CHECK(poly_rem(b, d).is_zero());
    CHECK(poly_rem(d, common).is_zero());
  }
}

TEST_CASE("cyclic code dimension") {
  for (std::size_t n = 1; n <= 10; ++n) CHECK(cyclic_code_dimension(P("1"), n) == n);
  CHECK(cyclic_code_dimension(P("1000101"), 7) == 4);
  CHECK_THROWS_AS(cyclic_code_dimension(GF2Poly(), 5), PreconditionError);
  CHECK_THROWS_AS(cyclic_code_dimension(P("00001"), 4), PreconditionError);
  std::mt19937_64 rng(44);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 64;
    BitVector row(n);
    row.set(rng() % n);
    for (std::size_t j = 0; j < n; ++j) {
      if (rng() % 2 == 0) row.set(j);
    }
    const BitMatrix m = circulant_matrix(row);
    oracle::Matrix plain(n, oracle::Bits(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) plain[i][j] = row.get((j + n - i) % n) ? 1 : 0;
    }
    CHECK(cyclic_code_dimension(GF2Poly::from_coefficients(row), n) == oracle::rank(plain));
  }
}

TEST_CASE("row polynomials") {
  const BitMatrix m = BitMatrix::from_strings({"101", "000"});
  CHECK(row_polynomial(m, 0) == P("101"));
  CHECK(row_polynomial(m, 1).is_zero());
  CHECK(row_polynomial(incidence_matrix(fano_circulant()), 0) == GF2Poly::from_exponents({0, 4, 6}));
  CHECK_THROWS_AS(row_polynomial(m, 2), IndexError);
}

TEST_CASE("eonv weight through row polynomials") {
  const Hypergraph fano = fano_circulant();
  CHECK(eonv_weight_via_polys(fano, {2}) == 3);
  CHECK(eonv_weight_via_polys(fano, VertexSet{0, 1, 2, 3, 4, 5, 6}) == 7);
  CHECK_THROWS_AS(eonv_weight_via_polys(fano, VertexSet{}), PreconditionError);
  CHECK_THROWS_AS(eonv_weight_via_polys(complete_3partite(2), {0}), PreconditionError);
  std::mt19937_64 rng(45);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 20;
    BitVector row(n);
    row.set(rng() % n);
    for (std::size_t j = 0; j < n; ++j) {
      if (rng() % 3 == 0) row.set(j);
    }
    const Hypergraph h = circulant_hypergraph(row);
    const VertexSet s = VertexSet::from_mask(1 + rng() % ((std::uint64_t{1} << n) - 1));
    CHECK(eonv_weight_via_polys(h, s) == oracle::odd_edges(h.edges(), s.members()).size());
  }
}

TEST_CASE("block-circulant bound") {
  CHECK(block_circulant_bound(3, 2) == 6);
  CHECK(block_circulant_bound(5, 1) == 5);
  CHECK(block_circulant_bound(1, 3) == 2);
  CHECK_THROWS_AS(block_circulant_bound(0, 2), PreconditionError);
}
