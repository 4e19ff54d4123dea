#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitfold/bigint.hpp"
#include "orbitfold/group.hpp"
#include "orbitfold/iog.hpp"
#include "orbitfold/partition.hpp"
#include "orbitfold/point_set.hpp"
#include "orbitfold/spectral.hpp"

namespace orbitfold {

enum class Ambient { M11, M12, M24 };

/// "m11" / "M11" etc. Throws UnknownLabel.
Ambient parse_ambient(std::string_view name);
/// "m11", "m12", "m24".
std::string ambient_file_stem(Ambient a);
/// "M11", "M12", "M24".
std::string ambient_name(Ambient a);

struct ValidationRule {
  Ambient ambient;
  std::size_t degree;
  BigInt order;
  /// The group must be transitive on k-subsets for this k, and the order
  /// must be divisible by n (n-1) ... (n-k+1).
  std::size_t homogeneity;
};

ValidationRule validation_rule(Ambient a);

/// Throws ValidationFailed naming the first rule that fails.
void validate_group(const PermutationGroup& g, const ValidationRule& rule);

/// $ORBITFOLD_DATA when set, otherwise the build-tree data directory if it
/// still exists, otherwise the installed one.
std::filesystem::path data_directory();

/// Reads data/<stem>.grp and validates it. Throws MissingData or
/// ValidationFailed.
PermutationGroup load_validated_group(Ambient a);
PermutationGroup load_validated_group(Ambient a, const std::filesystem::path& data_dir);

/// Completes S to the Steiner block through it: |S| = 4 in M11 (pentads),
/// |S| = 5 in M12 (hexads) and M24 (octads). The stabilizer of S must split
/// the complement into 1+6, 1+6 and 3+16 respectively; the small orbit is
/// added to S. Throws UnexpectedOrbitShape.
PointSet derive_block(const PermutationGroup& g, const PointSet& s);

inline constexpr std::size_t kDefaultBlockOrbitCap = 1'000'000;

/// The G-orbit of a block, sorted. Throws OrbitCapExceeded.
std::vector<PointSet> enumerate_blocks(const PermutationGroup& g, const PointSet& seed,
                                       std::size_t cap = kDefaultBlockOrbitCap);

/// Symmetric difference of the first pair of octads (in list order) that
/// meet in exactly two points. Throws NotFound.
PointSet derive_dodecad(const std::vector<PointSet>& octads);

struct Trio {
  PointSet b1;
  PointSet b2;
  PointSet b3;
};

/// B1 is the first octad, B2 the first octad disjoint from it, and B3 the
/// complement of their union, which must itself be listed. Throws NotFound.
Trio derive_trio(const std::vector<PointSet>& octads);

/// How a catalog subgroup is obtained.
enum class Construction {
  PointStabilizer,
  PairStabilizer,
  TripleStabilizer,
  TetradStabilizer,
  PentadStabilizer,
  OctadStabilizer,
  DodecadStabilizer,
  OrderedTrioStabilizer,
  ProjectiveLine,
  InvolutionSearch,
  None,
};

struct CatalogEntry {
  Ambient ambient;
  std::string class_label;
  Shape claimed_shape;
  SpectrumSummary claimed_spectrum;
  std::string source;
  Construction construction = Construction::None;
  /// |ambient| / |orbit of the stabilized object|, when there is one.
  std::optional<BigInt> expected_order;
  /// Order of the abstract group named in the label, when it disagrees
  /// with what the construction produces.
  std::optional<BigInt> label_order;
  std::string note;
};

/// Maximal-subgroup classes in table order. Entries whose construction is
/// None carry only their claimed shape (used for ambiguity lookups).
const std::vector<CatalogEntry>& catalog(Ambient a);

/// Throws UnknownLabel.
const CatalogEntry& catalog_entry(Ambient a, std::string_view class_label);

/// Builds the representative subgroup of a class inside `ambient` (which
/// must be the validated group). Throws UnknownLabel.
PermutationGroup build_catalog_subgroup(const PermutationGroup& ambient, Ambient a,
                                        std::string_view class_label,
                                        const SetwiseSearchOptions& options = {});

struct ClassificationResult {
  enum class Status { Match, TransitiveAmbiguous, UnknownShape };
  Status status = Status::UnknownShape;
  /// The matched label; all transitive labels when ambiguous.
  std::vector<std::string> labels;
  Partition partition = Partition::trivial(1);
  Shape shape;
  SpectrumSummary spectrum;
  AutDescription aut;
  InvariantTriple invariants;
  BigInt subgroup_order;
};

std::string_view status_name(ClassificationResult::Status s);

/// Fingerprint classification of H inside the transitive ambient group.
/// Throws DegreeMismatch and NotTransitive.
ClassificationResult classify(const PermutationGroup& ambient, Ambient a,
                              const PermutationGroup& h);

struct CatalogRow {
  std::string entry;
  Shape claimed_shape;
  std::optional<Shape> computed_shape;
  std::optional<BigInt> computed_order;
  std::optional<SpectrumSummary> spectrum;
  /// "pass", "fail" or "skipped".
  std::string status;
};

struct CatalogReport {
  Ambient ambient;
  std::vector<CatalogRow> rows;
  std::vector<std::string> notes;
  bool pass() const;
};

CatalogReport verify_catalog(Ambient a, const PermutationGroup& ambient,
                             const SetwiseSearchOptions& options = {}, std::size_t workers = 1);
CatalogReport verify_catalog(Ambient a);

}  // namespace orbitfold
