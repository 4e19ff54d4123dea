#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbitfold/group.hpp"
#include "orbitfold/mathieu.hpp"
#include "orbitfold/simple_graph.hpp"

namespace orbitfold {

struct CandidateVerdict {
  std::string name;
  bool consistent = false;
  std::string reason;
};

/// Degree-12 recognition against the primitive candidates A12, S12,
/// PSL(2,11), PGL(2,11) and M12.
struct RecognitionReport {
  bool primitive = false;
  bool has_odd_permutation = false;
  /// Point stabilizer, 4-set and 6-set witnesses, in the catalog row layout.
  std::vector<CatalogRow> witnesses;
  /// Maximality proxy for the 4-set witness: its orbit is every 4-set.
  bool tetrad_proxy = false;
  /// Maximality proxy for the 6-set witness: its orbit is a proper subset
  /// of the 6-sets, i.e. G is not 6-homogeneous.
  bool hexad_proxy = false;
  /// Orbits of a point stabilizer on 3-subsets.
  std::size_t point_stabilizer_3set_orbits = 0;
  std::vector<CandidateVerdict> candidates;
  /// "M12" or "not-M12".
  std::string verdict;
  std::vector<std::string> notes;

  bool is_m12() const { return verdict == "M12"; }
};

/// Throws BadDegree unless g has degree 12.
RecognitionReport recognize_degree12(const PermutationGroup& g,
                                     const SetwiseSearchOptions& options = {});

struct OrbitalGraphInfo {
  std::size_t vertices = 0;
  std::size_t valency = 0;
  bool self_paired = false;
  /// Set when the (self-paired) orbital graph is a non-degenerate SRG.
  std::optional<SrgParameters> srg;
  bool complete = false;
  bool edgeless = false;
};

struct RigidityLevel {
  std::size_t k = 0;
  /// Orbits of G_omega on all k-subsets.
  std::size_t orbit_count = 0;
  /// Size of the orbit of k-subsets avoiding omega that contains the
  /// colexicographically first such subset.
  std::size_t avoiding_orbit_size = 0;
  /// Number of orbitals of G_omega on that orbit (diagonal included).
  std::size_t rank = 0;
  /// Non-diagonal orbitals in orbital order.
  std::vector<OrbitalGraphInfo> graphs;
  bool pass = false;
};

struct RigidityReport {
  Point omega = 0;
  bool primitive = false;
  std::vector<RigidityLevel> levels;
  bool pass() const;
};

/// For k = 2, 3, 4: G_omega must have exactly two orbits on k-subsets, and
/// every self-paired non-diagonal orbital graph on the orbit avoiding omega
/// must be a non-degenerate strongly regular graph. Throws BadDegree and
/// NotTransitive.
RigidityReport steiner_rigidity_check(const PermutationGroup& g, Point omega);

}  // namespace orbitfold
