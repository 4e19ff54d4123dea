#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "orbitfold/bigint.hpp"
#include "orbitfold/partition.hpp"
#include "orbitfold/permutation.hpp"
#include "orbitfold/point_set.hpp"
#include "orbitfold/stabilizer_chain.hpp"
#include "orbitfold/subset_domain.hpp"

namespace orbitfold {

/// A finitely generated permutation group on {0, ..., degree-1}.
///
/// The stabilizer chain is built on first use and cached; copies share the
/// cache. Values are immutable, so they can be shared across threads.
class PermutationGroup {
 public:
  /// An empty generator list denotes the trivial group. Throws
  /// DegreeMismatch when a generator has the wrong degree.
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  const StabilizerChain& chain() const;
  BigInt order() const { return chain().order(); }
  bool contains(const Permutation& p) const { return chain().contains(p); }

 private:
  struct ChainCache;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<ChainCache> cache_;
};

/// Builds a chain whose base begins with `base_prefix`.
StabilizerChain build_chain(const PermutationGroup& g, std::span<const Point> base_prefix = {});

inline BigInt group_order(const PermutationGroup& g) { return g.order(); }

/// Throws DegreeMismatch.
bool contains(const PermutationGroup& g, const Permutation& p);

/// Orbits of the group generated by `index_generators` on {0, ..., size-1};
/// every generator is a raw image vector of length `size`.
Partition orbits_of_action(std::size_t size, std::span<const std::vector<Point>> index_generators);

Partition point_orbits(const PermutationGroup& g);

/// Orbits on k-subsets, indexed by colexicographic rank.
Partition subset_orbits(const PermutationGroup& g, std::size_t k,
                        std::uint64_t domain_cap = kDefaultDomainCap);

bool is_transitive(const PermutationGroup& g);
bool is_k_homogeneous(const PermutationGroup& g, std::size_t k,
                      std::uint64_t domain_cap = kDefaultDomainCap);

PermutationGroup pointwise_stabilizer(const PermutationGroup& g, const PointSet& s);

struct SetwiseSearchOptions {
  std::uint64_t node_budget = 100'000'000;
};

struct SetwiseSearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

/// {g in G : S^g = S}, by depth-first backtrack over a chain whose base
/// starts with the points of S. Throws SearchBudgetExceeded.
PermutationGroup setwise_stabilizer(const PermutationGroup& g, const PointSet& s,
                                    const SetwiseSearchOptions& options = {},
                                    SetwiseSearchStats* stats = nullptr);

/// Orbits of G_omega on the domain; the rank of G is the block count.
/// Throws NotTransitive.
Partition suborbits(const PermutationGroup& g, Point omega);

/// Throws NotTransitive.
bool is_primitive(const PermutationGroup& g);

/// The minimal block of imprimitivity containing {alpha, beta}, as the
/// block system it generates.
Partition minimal_block_system(const PermutationGroup& g, Point alpha, Point beta);

/// The action domain for orbitals: either the points themselves (k = 1) or
/// the colexicographically indexed k-subsets, optionally restricted to a
/// union of orbits given by `restrict_to` (sorted domain indices).
struct IndexedDomain {
  std::size_t size = 0;
  std::vector<std::vector<Point>> generator_images;
  /// Original index of each local index (empty when unrestricted).
  std::vector<std::size_t> original_index;
};

IndexedDomain point_domain(const PermutationGroup& g);
IndexedDomain subset_domain(const PermutationGroup& g, std::size_t k,
                            std::uint64_t domain_cap = kDefaultDomainCap);
/// Restricts an indexed domain to a G-invariant subset of its indices.
IndexedDomain restrict_domain(const IndexedDomain& domain, std::span<const std::size_t> indices);

struct Orbital {
  /// Ordered pairs (a, b) of local domain indices, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  bool diagonal = false;
  bool self_paired = false;
};

struct OrbitalDecomposition {
  std::size_t domain_size = 0;
  /// Sorted by smallest pair.
  std::vector<Orbital> orbitals;
};

inline constexpr std::uint64_t kDefaultPairCap = 10'000'000;

/// Orbits on ordered pairs. Throws DomainTooLarge when size^2 exceeds the cap.
OrbitalDecomposition orbitals_on(const IndexedDomain& domain,
                                 std::uint64_t pair_cap = kDefaultPairCap);

// Standard families.
PermutationGroup symmetric_group(std::size_t n);
PermutationGroup alternating_group(std::size_t n);
/// PSL(2, p) (or PGL(2, p) when `extended`) acting on the projective line
/// {0, ..., p-1, infinity}; infinity is point p. Throws NotPrime.
PermutationGroup projective_linear_group(std::uint32_t p, bool extended);
PermutationGroup cyclic_group(const Permutation& generator);

}  // namespace orbitfold
