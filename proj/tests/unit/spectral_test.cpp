#include <gtest/gtest.h>

#include <random>

#include "error_code.hpp"
#include "oracles.hpp"
#include "orbitfold/iog.hpp"
#include "orbitfold/spectral.hpp"

using namespace orbitfold;
using oracle::error_code;

namespace {

IntPolynomial poly(std::initializer_list<long> coeffs) {
  IntPolynomial p;
  for (long c : coeffs) p.emplace_back(c);
  return p;
}

SimpleGraph random_graph(std::size_t n, std::mt19937_64& rng, unsigned density = 2) {
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng() % density == 0) g.add_edge(u, v);
    }
  }
  return g;
}

void expect_matches_determinant(const SimpleGraph& g) {
  auto p = char_poly_exact(g);
  ASSERT_EQ(p.size(), g.vertex_count() + 1);
  EXPECT_EQ(p.back(), 1);
  for (std::int64_t t = -3; t <= 3; ++t) {
    EXPECT_EQ(oracle::evaluate(p, t), oracle::char_poly_at(g, t)) << "t=" << t;
  }
}

}  // namespace

TEST(SpectrumFromShape, Examples) {
  EXPECT_EQ(spectrum_from_shape({4, 8}), parse_spectrum("{7^1, 3^1, (-1)^{10}}"));
  EXPECT_EQ(spectrum_from_shape({8, 8, 8}), parse_spectrum("{7^3, (-1)^{21}}"));
  EXPECT_EQ(spectrum_from_shape({1, 1, 1}), parse_spectrum("{0^3}"));
  EXPECT_EQ(spectrum_from_shape({4, 8}).to_string(), "{7^1, 3^1, (-1)^{10}}");
  EXPECT_EQ(spectrum_from_shape({11, 1}).to_string(), "{10^1, (-1)^{10}, 0^1}");
  EXPECT_EQ(spectrum_from_shape({3, 1}).to_string(), "{2^1, (-1)^2, 0^1}");
}

TEST(ShapeFromSpectrum, Examples) {
  EXPECT_EQ(shape_from_spectrum(parse_spectrum("{22^1, (-1)^{22}, 0^1}")), (Shape{23, 1}));
  EXPECT_EQ(shape_from_spectrum(parse_spectrum("{11^2, (-1)^{22}}")), (Shape{12, 12}));
  // The 4-cycle: x^4 - 4x^2 = x^2 (x - 2)(x + 2).
  SimpleGraph c4(4);
  for (std::size_t i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
  EXPECT_EQ(char_poly_exact(c4), poly({0, 0, -4, 0, 1}));
  auto c4_spectrum = make_spectrum({{2, 1}, {0, 2}, {-2, 1}});
  EXPECT_FALSE(shape_from_spectrum(c4_spectrum).has_value());
  // Wrong (-1) multiplicity.
  EXPECT_FALSE(shape_from_spectrum(make_spectrum({{3, 1}, {-1, 2}})).has_value());
  EXPECT_FALSE(shape_from_spectrum(make_spectrum({{-3, 1}})).has_value());
}

TEST(ParseSpectrum, Forms) {
  EXPECT_EQ(parse_spectrum("{7, 3^1, (−1)^{10}}"), make_spectrum({{7, 1}, {3, 1}, {-1, 10}}));
  EXPECT_EQ(make_spectrum({{1, 2}, {1, 3}, {0, 0}}).pairs,
            (std::vector<std::pair<std::int64_t, std::size_t>>{{1, 5}}));
  EXPECT_EQ(error_code([] { parse_spectrum("{7^}"); }), ErrorCode::Malformed);
  EXPECT_EQ(error_code([] { parse_spectrum("7^1"); }), ErrorCode::Malformed);
}

TEST(SpectrumFromShape, RoundTripAllPartitions) {
  std::size_t count = 0;
  std::size_t of_24 = 0;
  for (std::size_t n = 1; n <= 24; ++n) {
    for (const auto& s : integer_partitions(n)) {
      ++count;
      of_24 += n == 24;
      auto sp = spectrum_from_shape(s);
      EXPECT_EQ(shape_from_spectrum(sp), s);
      EXPECT_EQ(sp.total_multiplicity(), n);
      std::size_t minus_one = 0, singletons = 0;
      for (auto part : s.parts()) {
        if (part >= 2) minus_one += part - 1;
        singletons += part == 1;
      }
      EXPECT_EQ(sp.multiplicity(-1), minus_one);
      EXPECT_EQ(sp.multiplicity(0), singletons);
      EXPECT_EQ(invariants(s).alpha, s.part_count());
    }
  }
  EXPECT_EQ(of_24, 1575u);
  EXPECT_EQ(count, 7337u);
}

TEST(CharPoly, Examples) {
  auto k3 = char_poly_exact(oracle::clique_union_graph({3}));
  EXPECT_EQ(k3, poly({-2, -3, 0, 1}));
  EXPECT_EQ(format_polynomial(k3), "x^3 - 3x - 2");
  EXPECT_EQ(char_poly_exact(SimpleGraph(1)), poly({0, 1}));
  // x (x - 10) (x + 1)^10
  auto expected = clique_union_char_poly({11, 1});
  EXPECT_EQ(char_poly_exact(oracle::clique_union_graph({11, 1})), expected);
  for (std::int64_t t = -2; t <= 11; ++t) {
    BigInt direct = BigInt(t) * (t - 10);
    for (int i = 0; i < 10; ++i) direct *= t + 1;
    EXPECT_EQ(oracle::evaluate(expected, t), direct);
  }
  // Path P3: x^3 - 2x.
  SimpleGraph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  EXPECT_EQ(char_poly_exact(p3), poly({0, -2, 0, 1}));
}

TEST(CharPoly, MatchesDeterminantOracle) {
  std::mt19937_64 rng(oracle::seed());
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * (n - 1) / 2)); ++bits) {
      auto g = SimpleGraph::from_edge_bits(n, bits);
      auto p = char_poly_exact(g);
      for (std::int64_t t = -2; t <= 2; ++t) {
        ASSERT_EQ(oracle::evaluate(p, t), oracle::char_poly_at(g, t));
      }
    }
  }
  for (int i = 0; i < 30; ++i) expect_matches_determinant(random_graph(6 + rng() % 15, rng));
  // Dense graphs large enough to overflow 64-bit intermediates.
  expect_matches_determinant(random_graph(48, rng, 1));
  expect_matches_determinant(random_graph(64, rng, 2));
  EXPECT_EQ(error_code([] { char_poly_exact(SimpleGraph(65)); }), ErrorCode::DomainTooLarge);
}

TEST(CharPoly, IntegerMatrix) {
  // [[2, 1], [1, 2]] has x^2 - 4x + 3.
  EXPECT_EQ(char_poly_exact(std::vector<std::int64_t>{2, 1, 1, 2}, 2), poly({3, -4, 1}));
}

TEST(CharPoly, CliqueUnionsFactor) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& s : integer_partitions(n)) {
      auto dense = densify(clique_union(Partition::from_labels([&] {
        std::vector<std::size_t> labels;
        for (std::size_t b = 0; b < s.part_count(); ++b) labels.insert(labels.end(), s.parts()[b], b);
        return labels;
      }())));
      EXPECT_EQ(char_poly_exact(dense), clique_union_char_poly(s)) << s.to_string();
    }
  }
}

TEST(AutOrder, Examples) {
  EXPECT_EQ(aut_order({2, 2}).order, 8);
  EXPECT_EQ(aut_order({3, 1}).order, 6);
  EXPECT_EQ(aut_order({1}).order, 1);
  auto a = aut_order({8, 4});
  EXPECT_EQ(a.order, factorial(8) * factorial(4));
  EXPECT_EQ(a.factors, (std::vector<std::pair<std::size_t, std::size_t>>{{8, 1}, {4, 1}}));
  EXPECT_EQ(aut_order({8, 8, 8}).order, factorial(8) * factorial(8) * factorial(8) * 6);
}

TEST(AutOrder, BruteForceUpToEight) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& s : integer_partitions(n)) {
      auto g = oracle::clique_union_graph(s.parts());
      EXPECT_EQ(aut_order(s).order, BigInt(oracle::automorphism_count(g))) << s.to_string();
    }
  }
}

TEST(Invariants, Examples) {
  EXPECT_EQ(invariants({8, 4}), (InvariantTriple{8, 8, 2}));
  auto trio = invariants({8, 8, 8});
  EXPECT_EQ(trio.chi, 8u);
  EXPECT_EQ(trio.alpha, 3u);
  EXPECT_EQ(invariants({1, 1, 1, 1, 1}), (InvariantTriple{1, 1, 5}));
}

TEST(DsScan, Examples) {
  auto four = ds_scan(4);
  ASSERT_EQ(four.levels.size(), 4u);
  EXPECT_EQ(four.levels.back().graphs, 64u);
  EXPECT_EQ(four.total_counterexamples(), 0u);
  EXPECT_TRUE(four.pass());
  auto one = ds_scan(1);
  EXPECT_TRUE(one.pass());
  EXPECT_EQ(one.total_graphs(), 1u);
  EXPECT_EQ(error_code([] { ds_scan(8); }), ErrorCode::DomainTooLarge);
}

TEST(DsScan, SixVerticesAnyWorkerCount) {
  auto a = ds_scan(6, 1);
  auto b = ds_scan(6, 3);
  EXPECT_EQ(a.levels.back().graphs, 32768u);
  EXPECT_EQ(a.total_counterexamples(), 0u);
  ASSERT_EQ(a.levels.size(), b.levels.size());
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    EXPECT_EQ(a.levels[i].graphs, b.levels[i].graphs);
    EXPECT_EQ(a.levels[i].clique_unions, b.levels[i].clique_unions);
    EXPECT_EQ(a.levels[i].cospectral_with_clique_union, b.levels[i].cospectral_with_clique_union);
  }
  // Labeled clique unions on six points: Bell number 203.
  EXPECT_EQ(a.levels.back().clique_unions, 203u);
}
