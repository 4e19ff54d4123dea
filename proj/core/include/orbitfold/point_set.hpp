#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "orbitfold/permutation.hpp"

namespace orbitfold {

/// A subset of {0, ..., degree-1}, stored as a bit mask.
///
/// For degree <= 64 the canonical form is a single 64-bit word; larger
/// degrees use ceil(degree / 64) words. Ordering is colexicographic, which
/// for sets of equal size coincides with the numeric order of the masks.
class PointSet {
 public:
  explicit PointSet(std::size_t degree);
  PointSet(std::size_t degree, std::span<const Point> members);
  PointSet(std::size_t degree, std::initializer_list<Point> members);

  static PointSet from_mask(std::size_t degree, std::uint64_t mask);
  static PointSet full(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  bool contains(Point p) const noexcept {
    return p < degree_ && ((words_[p >> 6] >> (p & 63)) & 1u);
  }

  /// Only valid for degree <= 64.
  std::uint64_t mask() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// Sorted members.
  std::vector<Point> members() const;

  /// "{1,2,3}" with 1-based points.
  std::string to_string() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend std::strong_ordering operator<=>(const PointSet& a, const PointSet& b);

  friend PointSet set_union(const PointSet& a, const PointSet& b);
  friend PointSet set_intersection(const PointSet& a, const PointSet& b);
  friend PointSet set_difference(const PointSet& a, const PointSet& b);
  friend PointSet set_complement(const PointSet& a);

 private:
  void set(Point p) { words_[p >> 6] |= std::uint64_t{1} << (p & 63); }

  std::size_t degree_;
  std::vector<std::uint64_t> words_;
};

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);
PointSet set_complement(const PointSet& a);

/// Symmetric difference.
PointSet set_xor(const PointSet& a, const PointSet& b);

/// The image {a^p : a in A}. Throws DegreeMismatch.
PointSet apply_set(const Permutation& p, const PointSet& a);

/// Image of a single-word mask; the caller guarantees degree <= 64.
std::uint64_t apply_mask(const Permutation& p, std::uint64_t mask);

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const noexcept;
};

}  // namespace orbitfold
