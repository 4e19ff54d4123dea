#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitfold/bigint.hpp"
#include "orbitfold/partition.hpp"
#include "orbitfold/simple_graph.hpp"

namespace orbitfold {

/// Eigenvalue multiset as (eigenvalue, multiplicity) pairs, eigenvalues
/// distinct and descending.
struct SpectrumSummary {
  std::vector<std::pair<std::int64_t, std::size_t>> pairs;

  std::size_t total_multiplicity() const;
  std::size_t multiplicity(std::int64_t eigenvalue) const;
  /// "{7^1, 3^1, (-1)^{10}}".
  std::string to_string() const;

  friend bool operator==(const SpectrumSummary&, const SpectrumSummary&) = default;
};

/// Builds a summary from arbitrary (eigenvalue, multiplicity) pairs,
/// merging repeats and dropping zero multiplicities.
SpectrumSummary make_spectrum(std::vector<std::pair<std::int64_t, std::size_t>> pairs);

/// Parses "{10^1, (-1)^{10}, 0^1}"; a bare eigenvalue has multiplicity 1 and
/// the Unicode minus sign is accepted.
/// Throws Malformed.
SpectrumSummary parse_spectrum(std::string_view text);

/// Spectrum of the disjoint union of complete graphs K_{n_i}.
SpectrumSummary spectrum_from_shape(const Shape& s);

/// Inverse of spectrum_from_shape; nullopt when the spectrum is not that of
/// any clique union.
std::optional<Shape> shape_from_spectrum(const SpectrumSummary& sp);

/// Coefficients of det(xI - A), constant term first.
using IntPolynomial = std::vector<BigInt>;

/// Division-free (Berkowitz) characteristic polynomial of the adjacency
/// matrix, exact. Throws DomainTooLarge above 64 vertices.
IntPolynomial char_poly_exact(const SimpleGraph& g);

/// Characteristic polynomial of an integer matrix given row-major.
IntPolynomial char_poly_exact(const std::vector<std::int64_t>& matrix, std::size_t n);

/// prod (x - (n_i - 1)) * (x + 1)^{m_-1} * x^{m_0} for the clique union of
/// shape s, constant term first.
IntPolynomial clique_union_char_poly(const Shape& s);

/// "x^3 - 3x - 2".
std::string format_polynomial(const IntPolynomial& p);

/// Aut of a clique union: the product over distinct part sizes n_j, with
/// multiplicity m_j, of S_{n_j} wr S_{m_j}.
struct AutDescription {
  /// (n_j, m_j), n_j descending.
  std::vector<std::pair<std::size_t, std::size_t>> factors;
  BigInt order;
};

AutDescription aut_order(const Shape& s);

struct InvariantTriple {
  std::size_t chi = 0;
  std::size_t omega = 0;
  std::size_t alpha = 0;
  friend bool operator==(const InvariantTriple&, const InvariantTriple&) = default;
};

/// Chromatic number, clique number and independence number.
InvariantTriple invariants(const Shape& s);

struct DsLevel {
  std::size_t n = 0;
  std::uint64_t graphs = 0;
  /// Graphs whose polynomial equals that of some clique union.
  std::uint64_t cospectral_with_clique_union = 0;
  /// Graphs that are clique unions.
  std::uint64_t clique_unions = 0;
  std::uint64_t counterexamples = 0;
};

struct DsCounterexample {
  std::size_t n = 0;
  /// Edge bits in the SimpleGraph::from_edge_bits encoding.
  std::uint64_t edge_bits = 0;
  /// The clique-union shape it is cospectral with.
  Shape cospectral_shape;
};

struct DsScanReport {
  std::size_t max_n = 0;
  std::vector<DsLevel> levels;
  /// The first few counterexamples in enumeration order.
  std::vector<DsCounterexample> counterexamples;

  std::uint64_t total_graphs() const;
  std::uint64_t total_counterexamples() const;
  bool pass() const { return total_counterexamples() == 0; }
};

inline constexpr std::size_t kDsScanMaxN = 7;

/// Enumerates every labeled graph on n = 1..max_n vertices and checks that
/// each graph cospectral with a clique union is that clique union. The
/// report does not depend on `workers`. Throws DomainTooLarge when max_n
/// exceeds kDsScanMaxN.
DsScanReport ds_scan(std::size_t max_n, std::size_t workers = 1);

}  // namespace orbitfold
