#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "orbitfold/permutation.hpp"
#include "orbitfold/point_set.hpp"

namespace orbitfold {

/// Default cap on the size of an indexed action domain.
inline constexpr std::uint64_t kDefaultDomainCap = 1'000'000;

/// C(n, k) for n <= 64; saturates at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// The k-subsets of {0, ..., n-1}, indexed by colexicographic rank:
/// rank({c_0 < c_1 < ... < c_{k-1}}) = sum_i C(c_i, i + 1).
class SubsetDomain {
 public:
  /// Throws KTooLarge when k is 0 or exceeds n, DomainTooLarge when n > 64
  /// or C(n, k) exceeds `cap`.
  SubsetDomain(std::size_t n, std::size_t k, std::uint64_t cap = kDefaultDomainCap);

  std::size_t degree() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return size_; }

  std::size_t rank(std::uint64_t mask) const;
  std::uint64_t unrank(std::size_t index) const;
  PointSet subset(std::size_t index) const { return PointSet::from_mask(n_, unrank(index)); }

  /// Images of every domain index under p. Domains may exceed the
  /// Permutation degree limit, so the induced map is returned as raw images.
  std::vector<Point> induced(const Permutation& p) const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::size_t size_;
};

}  // namespace orbitfold
