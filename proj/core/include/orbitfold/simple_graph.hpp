#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "orbitfold/partition.hpp"

namespace orbitfold {

/// Undirected loopless graph stored as a symmetric bit matrix.
class SimpleGraph {
 public:
  static constexpr std::size_t kMaxVertices = 4096;

  /// Throws DomainTooLarge above kMaxVertices.
  explicit SimpleGraph(std::size_t vertex_count);

  /// Graph on n vertices whose edge i (in the order (0,1), (0,2), (1,2),
  /// (0,3), ... i.e. colexicographic on pairs) is present when bit i of
  /// `edge_bits` is set. n <= 11.
  static SimpleGraph from_edge_bits(std::size_t n, std::uint64_t edge_bits);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const;

  /// Throws OutOfRange; loops are rejected with Malformed.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::size_t degree(std::size_t u) const;
  /// |N(u) ∩ N(v)|.
  std::size_t common_neighbours(std::size_t u, std::size_t v) const;
  std::span<const std::uint64_t> row(std::size_t u) const {
    return {rows_.data() + u * words_, words_};
  }

  /// Sorted (u, v) pairs with u < v.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

/// Connected components, as a partition of the vertex set.
Partition connected_components(const SimpleGraph& g);

/// A^2 = (D - I) A + D over the integers, D the degree matrix.
bool satisfies_quadratic_relation(const SimpleGraph& g);

/// The component-size shape when every component is complete, otherwise
/// nullopt.
std::optional<Shape> recognize_clique_union(const SimpleGraph& g);

/// (v, k, lambda, mu) of a strongly regular graph.
struct SrgParameters {
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::size_t mu = 0;
  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

/// Parameters when g is regular with constant common-neighbour counts on
/// adjacent and on non-adjacent pairs. Complete and edgeless graphs are
/// rejected as degenerate.
std::optional<SrgParameters> strongly_regular_parameters(const SimpleGraph& g);

}  // namespace orbitfold
