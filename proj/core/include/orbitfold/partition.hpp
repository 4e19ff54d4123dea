#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace orbitfold {

/// A set partition of {0, ..., domain_size-1}.
///
/// Canonical form: each block sorted ascending, blocks ordered by their
/// minimum element, block ids dense in that order. Singleton blocks are
/// kept.
class Partition {
 public:
  /// Throws DomainMismatch unless `blocks` are non-empty, disjoint and cover
  /// the domain.
  Partition(std::size_t domain_size, std::vector<std::vector<std::size_t>> blocks);

  /// Partition whose blocks are the classes of equal label.
  static Partition from_labels(std::span<const std::size_t> labels);

  /// One block.
  static Partition trivial(std::size_t domain_size);
  /// All singletons.
  static Partition discrete(std::size_t domain_size);

  std::size_t domain_size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  std::size_t block_of(std::size_t index) const { return block_of_.at(index); }

  /// True when every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.block_of_ == b.block_of_;
  }

 private:
  Partition() = default;
  void canonicalize_from_labels(std::span<const std::size_t> labels);

  std::vector<std::size_t> block_of_;
  std::vector<std::vector<std::size_t>> blocks_;
};

/// The common refinement: blocks are the non-empty intersections of a block
/// of `a` with a block of `b`. Throws DomainMismatch.
Partition meet(const Partition& a, const Partition& b);

/// An integer partition stored as weakly decreasing parts.
class Shape {
 public:
  Shape() = default;
  /// Parts may be given in any order; zero parts are rejected.
  explicit Shape(std::vector<std::size_t> parts);
  Shape(std::initializer_list<std::size_t> parts)
      : Shape(std::vector<std::size_t>(parts)) {}

  const std::vector<std::size_t>& parts() const noexcept { return parts_; }
  std::size_t total() const noexcept;
  std::size_t part_count() const noexcept { return parts_.size(); }
  std::size_t largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  /// "8+4" style, largest part first.
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::vector<std::size_t> parts_;
};

/// Parses "4+8", "8,4" or "12".
Shape parse_shape(const std::string& text);

Shape shape_of(const Partition& p);

inline bool shapes_equal(const Shape& a, const Shape& b) { return a == b; }

/// All integer partitions of `total`, each weakly decreasing, in reverse
/// lexicographic order.
std::vector<Shape> integer_partitions(std::size_t total);

struct ShapeLookup {
  enum class Status { Found, Ambiguous, NotFound };
  Status status = Status::NotFound;
  /// The matching labels in catalog order.
  std::vector<std::string> labels;
};

ShapeLookup shape_lookup(std::span<const std::pair<Shape, std::string>> catalog,
                         const Shape& shape);

}  // namespace orbitfold
