#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orbitfold/group.hpp"
#include "orbitfold/partition.hpp"
#include "orbitfold/point_set.hpp"
#include "orbitfold/simple_graph.hpp"

namespace orbitfold {

/// A disjoint union of cliques, stored as its block decomposition: two
/// distinct vertices are adjacent exactly when they share a block.
struct CliqueUnionGraph {
  Partition partition = Partition::trivial(1);
  /// For k-subset graphs, vertex i is the subset of colexicographic rank i;
  /// empty for graphs on points.
  std::vector<PointSet> vertex_labels;

  std::size_t vertex_count() const noexcept { return partition.domain_size(); }
};

/// Cliques on the blocks of orbits(G1) ∧ orbits(G2). Throws DegreeMismatch.
CliqueUnionGraph intersection_orbital_graph(const PermutationGroup& g1, const PermutationGroup& g2);

/// The same on k-subsets. Throws DegreeMismatch, KTooLarge, DomainTooLarge.
CliqueUnionGraph k_intersection_graph(const PermutationGroup& g1, const PermutationGroup& g2,
                                      std::size_t k, std::uint64_t domain_cap = kDefaultDomainCap);

/// Wraps an existing partition.
CliqueUnionGraph clique_union(const Partition& p);

bool is_complete(const CliqueUnionGraph& g);
const std::vector<std::vector<std::size_t>>& components(const CliqueUnionGraph& g);
/// Components with at least two vertices.
std::size_t nontrivial_component_count(const CliqueUnionGraph& g);
Shape shape_of(const CliqueUnionGraph& g);

/// "K8 ⊔ K4" style; "K1" for the single vertex.
std::string clique_notation(const Shape& s);

/// Explicit adjacency matrix; throws DomainTooLarge past SimpleGraph limits.
SimpleGraph densify(const CliqueUnionGraph& g);

/// Sorted 1-based edge list.
std::vector<std::pair<std::size_t, std::size_t>> edge_list(const CliqueUnionGraph& g);

/// Graphviz text with one cluster per block. Vertex names are 1-based
/// points or subset labels.
std::string to_dot(const CliqueUnionGraph& g, const std::string& name = "iog");

}  // namespace orbitfold
