#pragma once

// Slow, obviously-correct reference computations used as test oracles.
// Nothing here shares code with the library's packed or Gray-code paths.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Bits = std::vector<int>;
using Matrix = std::vector<Bits>;

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density_percent = 50) {
  Matrix m(rows, Bits(cols, 0));
  for (auto& r : m) {
    for (auto& x : r) x = static_cast<int>(rng() % 100) < density_percent ? 1 : 0;
  }
  return m;
}

// Gaussian elimination on plain ints.
inline std::size_t rank(Matrix m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != r && m[i][c] == 1) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
      }
    }
    ++r;
  }
  return r;
}

// Minimum nonzero weight over every subset of rows, each sum formed from scratch.
// Returns 0 when the row space is {0}.
inline std::size_t min_weight_by_subsets(const Matrix& m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m.size()); ++mask) {
    Bits sum(cols, 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if ((mask >> i) & 1U) {
        for (std::size_t j = 0; j < cols; ++j) sum[j] ^= m[i][j];
      }
    }
    std::size_t w = 0;
    for (int x : sum) w += static_cast<std::size_t>(x);
    if (w > 0 && (best == 0 || w < best)) best = w;
  }
  return best;
}

// Edges meeting s an odd number of times, by counting.
inline std::vector<std::size_t> odd_edges(const std::vector<std::vector<std::size_t>>& edges,
                                          const std::vector<std::size_t>& s) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < edges.size(); ++j) {
    std::size_t hits = 0;
    for (std::size_t v : edges[j]) {
      for (std::size_t u : s) hits += u == v ? 1 : 0;
    }
    if (hits % 2 == 1) out.push_back(j);
  }
  return out;
}

// Schoolbook product of coefficient lists mod 2.
inline Bits convolve(const Bits& a, const Bits& b) {
  if (a.empty() || b.empty()) return {};
  Bits out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % 2;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace oracle
