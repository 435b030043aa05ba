#include "hypercode/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <string_view>

#include "hypercode/analysis.hpp"
#include "hypercode/codes.hpp"
#include "hypercode/error.hpp"
#include "hypercode/gf2poly.hpp"

namespace hypercode {

namespace {

// Fixtures ------------------------------------------------------------------

constexpr std::array<std::string_view, 7> kFanoMatrix = {
    "1000101", "1100010", "0110001", "1011000", "0101100", "0010110", "0001011",
};

constexpr std::array<std::string_view, 6> kTripartite2Matrix = {
    "11110000", "00001111", "10011001", "01100110", "11001100", "00110011",
};

constexpr std::array<std::string_view, 9> kTripartite3Matrix = {
    "000000000000000000111111111", "000000000111111111000000000", "111111111000000000000000000",
    "000000111000000111000000111", "000111000000111000000111000", "111000000111000000111000000",
    "001001001001001001001001001", "010010010010010010010010010", "100100100100100100100100100",
};

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); }

std::vector<std::string> sorted_columns(const BitMatrix& m) {
  std::vector<std::string> cols;
  for (std::size_t c = 0; c < m.num_cols(); ++c) cols.push_back(m.column(c).to_string());
  std::sort(cols.begin(), cols.end());
  return cols;
}

template <std::size_t N>
BitMatrix fixture(const std::array<std::string_view, N>& rows) {
  return BitMatrix::from_strings(std::span<const std::string_view>(rows));
}

std::string params(std::size_t n, std::size_t k, std::optional<std::size_t> d) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + (d ? std::to_string(*d) : "-") + "]";
}

std::string format_distribution(const std::map<std::size_t, std::uint64_t>& dist) {
  std::string out = "{";
  for (const auto& [w, c] : dist) {
    if (out.size() > 1) out += ",";
    out += std::to_string(w) + ":" + std::to_string(c);
  }
  return out + "}";
}

Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n, std::size_t max_m) {
  const std::size_t n = draw(rng, min_n, max_n);
  const std::size_t m = draw(rng, 1, max_m);
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < m; ++j) {
    const std::uint64_t mask = draw(rng, 1, (std::uint64_t{1} << n) - 1);
    edges.push_back(VertexSet::from_mask(mask).members());
  }
  return Hypergraph(n, std::move(edges));
}

/// True when both engines agree, including agreeing that no codeword exists.
bool engines_agree(const Hypergraph& h, const SearchOptions& search) {
  const LinearCode code = LinearCode::from_generator(incidence_matrix(h));
  if (code.dimension() == 0) {
    try {
      min_distance_via_eonv(h, search);
      return false;
    } catch (const NoCodewordError&) {
      return true;
    }
  }
  return min_distance(code, search).distance == min_distance_via_eonv(h, search).distance;
}

struct Outcome {
  bool ok;
  std::string observed;
  std::string expected;
};

// Criteria ------------------------------------------------------------------

Outcome check_fano(const VerifyOptions& options) {
  const Hypergraph h = options.fano_fixture.value_or(fano_circulant());
  const bool matrix_ok = incidence_matrix(h) == fixture(kFanoMatrix);
  AnalysisOptions a;
  a.method = Method::both;
  a.weights = true;
  a.search = options.search;
  const AnalysisReport r = analyze(h, a);
  const std::map<std::size_t, std::uint64_t> expected_weights{{0, 1}, {3, 7}, {4, 7}, {7, 1}};
  const bool ok = matrix_ok && r.length == 7 && r.dimension == 4 && r.min_distance == 3 &&
                  r.weight_distribution == expected_weights;
  return {ok,
          params(r.length, r.dimension, r.min_distance) + " weights " + format_distribution(*r.weight_distribution) +
              (matrix_ok ? " matrix=match" : " matrix=MISMATCH"),
          "[7,4,3] weights {0:1,3:7,4:7,7:1} matrix=match"};
}

Outcome check_tripartite(const VerifyOptions& options) {
  bool ok = true;
  std::string observed;
  const std::array<std::array<std::size_t, 3>, 3> expected{{{8, 4, 4}, {27, 7, 9}, {64, 10, 16}}};
  for (std::size_t n = 2; n <= 4; ++n) {
    const Hypergraph h = complete_3partite(n);
    AnalysisOptions a;
    a.method = Method::both;
    a.search = options.search;
    const AnalysisReport r = analyze(h, a);
    const auto& e = expected[n - 2];
    ok = ok && r.length == e[0] && r.dimension == e[1] && r.min_distance == e[2];
    observed += params(r.length, r.dimension, r.min_distance) + " ";
  }
  const bool n2_matrix = sorted_columns(incidence_matrix(complete_3partite(2))) == sorted_columns(fixture(kTripartite2Matrix));
  const bool n3_matrix = sorted_columns(incidence_matrix(complete_3partite(3))) == sorted_columns(fixture(kTripartite3Matrix));
  ok = ok && n2_matrix && n3_matrix;
  observed += n2_matrix && n3_matrix ? "matrices=match" : "matrices=MISMATCH";

  observed += "; d(n)=";
  for (std::size_t n = 1; n <= 5; ++n) {
    const Hypergraph h = complete_3partite(n);
    const auto by_codeword = min_distance(LinearCode::from_generator(incidence_matrix(h)), options.search);
    const auto by_eonv = min_distance_via_eonv(h, options.search);
    ok = ok && by_codeword.distance == n * n && by_eonv.distance == n * n;
    observed += (n > 1 ? "," : "") + std::to_string(by_codeword.distance) + "/" + std::to_string(by_eonv.distance);
  }
  return {ok, observed, "[8,4,4] [27,7,9] [64,10,16] matrices=match; d(n)=1/1,4/4,9/9,16/16,25/25"};
}

Outcome check_f_formula(const VerifyOptions&) {
  std::size_t failures = 0;
  std::string first_failure;
  for (std::uint64_t n = 1; n <= 50; ++n) {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    bool zero_set_ok = true;
    for (std::uint64_t k1 = 0; k1 <= n; ++k1) {
      for (std::uint64_t k2 = 0; k2 <= n; ++k2) {
        for (std::uint64_t k3 = 0; k3 <= n; ++k3) {
          const std::uint64_t f = f_count(n, k1, k2, k3);
          const bool in_zero_set = (k1 == 0 && k2 == 0 && k3 == 0) || (k1 == n && k2 == n && k3 == 0) ||
                                   (k1 == n && k2 == 0 && k3 == n) || (k1 == 0 && k2 == n && k3 == n);
          if (in_zero_set) {
            zero_set_ok = zero_set_ok && f == 0;
          } else {
            zero_set_ok = zero_set_ok && f != 0;
            best = std::min(best, f);
          }
        }
      }
    }
    if (best != n * n || !zero_set_ok) {
      if (failures++ == 0) first_failure = " first failure at n=" + std::to_string(n) + " min=" + std::to_string(best);
    }
  }
  return {failures == 0, "min f = n^2 for " + std::to_string(50 - failures) + "/50 values of n" + first_failure,
          "min f = n^2 for 50/50 values of n"};
}

// Exhaustive check of the eonv gaps of PG(n-1, 2): a nonzero |eonv(A)| is at
// least 2^(n-1) - 1, and above 2^(n-1) it is at least 2^n - 4.
bool pg_eonv_gaps(const Hypergraph& pg, std::size_t n) {
  const BitMatrix m = incidence_matrix(pg);
  const std::size_t low = (std::size_t{1} << (n - 1)) - 1;
  const std::size_t high = (std::size_t{1} << n) - 4;
  BitVector acc(m.num_cols());
  const std::uint64_t end = std::uint64_t{1} << m.num_rows();
  for (std::uint64_t i = 1; i < end; ++i) {
    acc ^= m.row(static_cast<std::size_t>(std::countr_zero(i)));
    const std::size_t w = acc.weight();
    if (w > 0 && w < low) return false;
    if (w > low + 1 && w < high) return false;
  }
  return true;
}

Outcome check_projective(const VerifyOptions& options) {
  const Hypergraph fano = projective_geometry(3);
  const Hypergraph pg3 = projective_geometry(4);
  const auto fano_code = LinearCode::from_generator(incidence_matrix(fano));
  const auto pg3_code = LinearCode::from_generator(incidence_matrix(pg3));
  const std::size_t d3 = min_distance(fano_code, options.search).distance;
  const std::size_t d3_eonv = min_distance_via_eonv(fano, options.search).distance;
  const std::size_t d4 = min_distance(pg3_code, options.search).distance;
  const std::size_t d4_eonv = min_distance_via_eonv(pg3, options.search).distance;
  const bool gaps = pg_eonv_gaps(fano, 3) && pg_eonv_gaps(pg3, 4);
  const bool ok = d3 == 3 && d3_eonv == 3 && pg3.num_edges() == 35 && d4 == d4_eonv && d4 >= 7 && gaps;
  return {ok,
          "PG(2,2) " + params(fano_code.length(), fano_code.dimension(), d3) + " PG(3,2) " +
              params(pg3_code.length(), pg3_code.dimension(), d4) + " engines " +
              (d3 == d3_eonv && d4 == d4_eonv ? "agree" : "DISAGREE") + " eonv gaps " + (gaps ? "hold" : "VIOLATED"),
          "PG(2,2) d=3, PG(3,2) length 35 d>=7, engines agree, eonv gaps hold"};
}

Outcome check_engines(const VerifyOptions& options) {
  std::size_t checked = 0;
  std::size_t disagreements = 0;
  auto check = [&](const Hypergraph& h) {
    ++checked;
    if (!engines_agree(h, options.search)) ++disagreements;
  };
  // Every simple hypergraph with at least one edge on up to 4 vertices.
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t subsets = (std::size_t{1} << n) - 1;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << subsets); ++pick) {
      std::vector<Edge> edges;
      for (std::size_t s = 0; s < subsets; ++s) {
        if ((pick >> s) & 1U) edges.push_back(VertexSet::from_mask(s + 1).members());
      }
      check(Hypergraph(n, std::move(edges)));
    }
  }
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 4000; ++i) check(random_hypergraph(rng, 5, 6, 20));
  for (int i = 0; i < 500; ++i) check(random_hypergraph(rng, 1, 12, 18));
  // A zero generator matrix has no nonzero codeword; both engines must say so.
  const BitMatrix zero(3, 4);
  std::size_t zero_refusals = 0;
  try {
    min_distance(LinearCode::from_generator(zero), options.search);
  } catch (const NoCodewordError&) {
    ++zero_refusals;
  }
  try {
    eonv_min(zero, options.search);
  } catch (const NoCodewordError&) {
    ++zero_refusals;
  }
  return {disagreements == 0 && zero_refusals == 2,
          std::to_string(disagreements) + " disagreements in " + std::to_string(checked) + " hypergraphs; " +
              std::to_string(zero_refusals) + "/2 engines refuse the zero code",
          "0 disagreements; 2/2 engines refuse the zero code"};
}

Outcome check_block_circulant(const VerifyOptions& options) {
  bool ok = true;
  std::string observed = "d(k,m):";
  for (std::size_t k = 1; k <= 9; ++k) {
    for (std::size_t m = 1; 2 * k * m <= 18; ++m) {
      const Hypergraph h = circulant_hypergraph(block_row(k, m));
      const std::size_t d = min_distance_via_eonv(h, options.search).distance;
      const std::size_t d_codeword =
          min_distance(LinearCode::from_generator(incidence_matrix(h)), options.search).distance;
      const std::size_t bound = block_circulant_bound(k, m);
      ok = ok && d == d_codeword && d >= bound && (m != 1 || d == k);
      observed += " (" + std::to_string(k) + "," + std::to_string(m) + ")=" + std::to_string(d);
    }
  }
  // m = 1: every eonv size is 0, k or 2k.
  bool trichotomy = true;
  for (std::size_t k = 1; k <= 8; ++k) {
    const BitMatrix m = incidence_matrix(circulant_hypergraph(block_row(k, 1)));
    BitVector acc(m.num_cols());
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << m.num_rows()); ++i) {
      acc ^= m.row(static_cast<std::size_t>(std::countr_zero(i)));
      const std::size_t w = acc.weight();
      trichotomy = trichotomy && (w == 0 || w == k || w == 2 * k);
    }
  }
  ok = ok && trichotomy;
  observed += trichotomy ? "; m=1 sizes in {0,k,2k}" : "; m=1 size outside {0,k,2k}";
  return {ok, observed, "d >= k (m=1, with equality) or d >= 2k (m>=2); m=1 sizes in {0,k,2k}"};
}

Outcome check_cyclic_dimension(const VerifyOptions&) {
  std::mt19937_64 rng(7);
  std::size_t disagreements = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = draw(rng, 1, 64);
    BitVector row(n);
    while (row.is_zero()) {
      for (std::size_t j = 0; j < n; ++j) row.set(j, draw(rng, 0, 1) == 1);
    }
    if (cyclic_code_dimension(GF2Poly::from_coefficients(row), n) != rank(circulant_matrix(row))) ++disagreements;
  }
  const std::size_t fano = cyclic_code_dimension(GF2Poly::parse("1000101"), 7);
  return {disagreements == 0 && fano == 4,
          std::to_string(disagreements) + " disagreements in 200; dim(1000101, n=7)=" + std::to_string(fano),
          "0 disagreements in 200; dim(1000101, n=7)=4"};
}

// Calls fn on every multiset of size <= max_m drawn from the n(n-1)/2 vertex
// pairs of [0, n).
template <class Fn>
void for_each_multigraph(std::size_t n, std::size_t max_m, Fn&& fn) {
  std::vector<Edge> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::vector<Edge> edges;
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    fn(Hypergraph(n, edges));
    if (edges.size() == max_m) return;
    for (std::size_t p = from; p < pairs.size(); ++p) {
      edges.push_back(pairs[p]);
      self(self, p);
      edges.pop_back();
    }
  };
  recurse(recurse, 0);
}

Outcome check_self_duality(const VerifyOptions&) {
  std::mt19937_64 rng(1234);
  std::size_t structural_mismatch = 0;
  std::size_t self_orthogonal_seen = 0;
  for (int i = 0; i < 1000; ++i) {
    Hypergraph h = random_hypergraph(rng, 1, 10, 16);
    if (i % 2 == 1) {
      // Doubling every edge makes the sample self-orthogonal.
      std::vector<Edge> doubled;
      for (const Edge& e : h.edges()) {
        doubled.push_back(e);
        doubled.push_back(e);
      }
      h = Hypergraph(h.num_vertices(), std::move(doubled));
    }
    const bool gram_zero = gram(incidence_matrix(h)).is_zero();
    self_orthogonal_seen += gram_zero ? 1 : 0;
    if (structural_self_orthogonality(h) != gram_zero) ++structural_mismatch;
  }

  std::size_t graphs = 0;
  std::size_t criterion_mismatch = 0;
  std::size_t self_dual = 0;
  std::size_t rank_not_n_minus_1 = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for_each_multigraph(n, 10, [&](const Hypergraph& g) {
      if (!is_connected(g)) return;
      ++graphs;
      const BitMatrix basis = row_basis(incidence_matrix(g));
      if (basis.num_rows() != n - 1) ++rank_not_n_minus_1;
      const bool direct = row_space_equal(basis, nullspace_basis(basis));
      self_dual += direct ? 1 : 0;
      if (graph_self_duality_criterion(g) != direct) ++criterion_mismatch;
    });
  }
  return {structural_mismatch == 0 && criterion_mismatch == 0,
          std::to_string(structural_mismatch) + " structural mismatches in 1000 (" +
              std::to_string(self_orthogonal_seen) + " self-orthogonal); " + std::to_string(criterion_mismatch) +
              " criterion mismatches in " + std::to_string(graphs) + " connected multigraphs (" +
              std::to_string(self_dual) + " self-dual, rank != n-1 in " + std::to_string(rank_not_n_minus_1) + ")",
          "0 structural mismatches; 0 criterion mismatches"};
}

Outcome check_eonv_support(const VerifyOptions&) {
  std::mt19937_64 rng(99);
  std::size_t support_failures = 0;
  for (int i = 0; i < 200; ++i) {
    const Hypergraph h = random_hypergraph(rng, 1, 12, 20);
    const std::uint64_t mask = draw(rng, 1, (std::uint64_t{1} << h.num_vertices()) - 1);
    const VertexSet s = VertexSet::from_mask(mask);
    if (row_combination(incidence_matrix(h), s.members()).support() != eonv(h, s)) ++support_failures;
  }

  // |S| = |S & e| + |S & ~e| for every S and edge e on n <= 8 points.
  std::size_t parity_failures = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t s = 1; s <= full; ++s) {
      for (std::uint64_t e = 1; e <= full; ++e) {
        const int in = std::popcount(s & e);
        const int out = std::popcount(s & (full & ~e));
        const bool odd_in = in % 2 == 1;
        const bool odd_out = out % 2 == 1;
        const bool dichotomy = std::popcount(s) % 2 == 0 ? odd_in == odd_out : odd_in != odd_out;
        if (in + out != std::popcount(s) || !dichotomy) ++parity_failures;
      }
    }
  }

  // In block-circulant hypergraphs column j + m is the complement of column j.
  std::size_t block_failures = 0;
  for (std::size_t k = 1; k <= 8; ++k) {
    for (std::size_t m = 1; 2 * k * m <= 16; ++m) {
      const Hypergraph h = circulant_hypergraph(block_row(k, m));
      const std::size_t n = h.num_vertices();
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const VertexSet s = VertexSet::from_mask(mask);
        std::vector<bool> odd(n, false);
        for (std::size_t j : eonv(h, s)) odd[j] = true;
        for (std::size_t j = 0; j < n; ++j) {
          const bool partner = odd[(j + m) % n];
          if (s.size() % 2 == 0 ? odd[j] != partner : odd[j] == partner) ++block_failures;
        }
      }
    }
  }
  return {support_failures == 0 && parity_failures == 0 && block_failures == 0,
          std::to_string(support_failures) + " support mismatches in 200; " + std::to_string(parity_failures) +
              " parity failures; " + std::to_string(block_failures) + " block-circulant dichotomy failures",
          "0 support mismatches in 200; 0 parity failures; 0 block-circulant dichotomy failures"};
}

struct Criterion {
  std::string tag;
  std::string title;
  double time_limit;
  Outcome (*run)(const VerifyOptions&);
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"fano", "Fano plane code is [7,4,3] with the Hamming weight distribution", 1.0, check_fano},
      {"k3partite", "complete 3-partite 3-uniform codes and d = n^2", 5.0, check_tripartite},
      {"f-formula", "eonv counting function has minimum positive value n^2", 5.0, check_f_formula},
      {"pg", "projective geometry codes meet the eonv distance bound", 30.0, check_projective},
      {"engines", "eonv and codeword engines agree", 60.0, check_engines},
      {"block-circulant", "block-circulant cyclic code distance bounds", 60.0, check_block_circulant},
      {"cyclic-dim", "cyclic code dimension equals n - deg gcd(p, x^n - 1)", 10.0, check_cyclic_dimension},
      {"self-duality", "self-orthogonality and graph self-duality criteria", 60.0, check_self_duality},
      {"eonv-support", "codeword supports equal eonv sets; complement parity", 10.0, check_eonv_support},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& criterion_tags() {
  static const std::vector<std::string> tags = [] {
    std::vector<std::string> out;
    for (const auto& c : criteria()) out.push_back(c.tag);
    return out;
  }();
  return tags;
}

bool run_verification(const VerifyOptions& options, const std::function<void(const CriterionResult&)>& on_result) {
  if (!options.only.empty()) {
    const auto& tags = criterion_tags();
    if (std::find(tags.begin(), tags.end(), options.only) == tags.end()) {
      throw InvalidArgumentError("unknown criterion tag '" + options.only + "'");
    }
  }
  bool all_passed = true;
  for (const Criterion& c : criteria()) {
    if (!options.only.empty() && c.tag != options.only) continue;
    CriterionResult result{c.tag, c.title, false, "", "", 0.0, c.time_limit};
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome outcome = c.run(options);
      result.passed = outcome.ok;
      result.observed = std::move(outcome.observed);
      result.expected = std::move(outcome.expected);
    } catch (const Error& e) {
      result.observed = std::string("error: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.seconds > result.time_limit) {
      result.passed = false;
      result.observed += " (exceeded time limit)";
    }
    all_passed = all_passed && result.passed;
    on_result(result);
  }
  return all_passed;
}

}  // namespace hypercode
