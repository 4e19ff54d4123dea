#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "orbitfold/bigint.hpp"
#include "orbitfold/permutation.hpp"

namespace orbitfold {

/// One level of a stabilizer chain: the basic orbit of `base_point` under
/// the strong generators fixing every earlier base point, together with a
/// Schreier vector encoding a transversal.
struct StabilizerLevel {
  static constexpr std::int32_t kAbsent = -2;
  static constexpr std::int32_t kRoot = -1;

  Point base_point = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> inverse_generators;
  std::vector<Point> orbit;
  /// schreier[p] is the index of the generator that first reached p,
  /// kRoot for the base point and kAbsent off the orbit.
  std::vector<std::int32_t> schreier;

  bool in_orbit(Point p) const noexcept { return schreier[p] != kAbsent; }

  /// An element of this level's group mapping base_point to p.
  Permutation transversal(Point p) const;

  /// g * transversal(p)^-1, computed by walking the Schreier vector.
  Permutation sift_step(const Permutation& g, Point p) const;
};

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Level i describes G^(i), the pointwise stabilizer of base[0..i-1]. The
/// product of the basic orbit lengths is |G|. A caller-supplied base prefix
/// is kept verbatim (levels with trivial orbits included), which is what the
/// stabilizer constructions rely on.
class StabilizerChain {
 public:
  static StabilizerChain build(std::size_t degree, std::span<const Permutation> generators,
                               std::span<const Point> base_prefix = {});

  std::size_t degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return levels_.size(); }
  const std::vector<StabilizerLevel>& levels() const noexcept { return levels_; }
  const StabilizerLevel& level(std::size_t i) const { return levels_.at(i); }
  std::vector<Point> base() const;

  BigInt order() const;

  /// Sifts g through levels [from, length). Returns the residue and the
  /// index of the level where sifting stopped (length() when it passed every
  /// level).
  std::pair<Permutation, std::size_t> strip(const Permutation& g, std::size_t from = 0) const;

  bool contains(const Permutation& g) const;

  /// Generators of G^(i); an identity generator when the subgroup is trivial.
  std::vector<Permutation> stabilizer_generators(std::size_t i) const;

 private:
  explicit StabilizerChain(std::size_t degree) : degree_(degree) {}
  void rebuild_orbit(std::size_t i);

  std::size_t degree_;
  std::vector<StabilizerLevel> levels_;
};

}  // namespace orbitfold
