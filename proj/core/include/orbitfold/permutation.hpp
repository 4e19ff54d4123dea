#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbitfold {

using Point = std::uint32_t;

/// Largest supported action degree.
inline constexpr std::size_t kMaxDegree = std::size_t{1} << 16;

/// A bijection of {0, ..., n-1}.
///
/// Composition is left-to-right: compose(p, q) applies p first, then q, so
/// that the image of i under compose(p, q) is q[p[i]]. This matches the
/// exponent convention i^(pq) = (i^p)^q used for right actions.
class Permutation {
 public:
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws OutOfRange / RepeatedPoint unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool is_odd() const;

  /// Disjoint cycles, 1-based, fixed points omitted; "id" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation inverse(const Permutation& p);

  std::vector<Point> images_;
};

/// r[i] = q[p[i]]. Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

std::size_t fixed_point_count(const Permutation& p);

/// Smallest point moved by p, or p.degree() when p is the identity.
Point first_moved_point(const Permutation& p);

/// Parses `"id"` or a product of disjoint cycles such as `"(1,2,3)(4,5)"`.
/// Entries are 1-based; whitespace is ignored.
Permutation parse_permutation(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace orbitfold
