#include "orbitfold/recognition.hpp"

#include <algorithm>

#include "orbitfold/error.hpp"
#include "orbitfold/iog.hpp"
#include "orbitfold/spectral.hpp"

namespace orbitfold {

namespace {

constexpr std::size_t kDegree = 12;

struct Witness {
  CatalogRow row;
  bool found = false;
  BigInt stabilizer_order;
};

// Scans the G-orbits on k-subsets and keeps the representative whose
// stabilizer has the wanted shape and the largest order (earliest orbit on
// ties).
Witness find_witness(const PermutationGroup& g, std::size_t k, const Shape& wanted,
                     const std::string& name, const SetwiseSearchOptions& options) {
  Witness w;
  w.row.entry = name;
  w.row.claimed_shape = wanted;
  w.row.status = "fail";
  SubsetDomain domain(kDegree, k);
  Partition orbits = subset_orbits(g, k);
  for (const auto& block : orbits.blocks()) {
    PointSet s = domain.subset(block.front());
    PermutationGroup stab = setwise_stabilizer(g, s, options);
    Shape shape = shape_of(point_orbits(stab));
    if (shape != wanted) continue;
    BigInt order = stab.order();
    if (w.found && order <= w.stabilizer_order) continue;
    w.found = true;
    w.stabilizer_order = order;
    w.row.computed_shape = shape;
    w.row.computed_order = order;
    w.row.spectrum = spectrum_from_shape(shape);
    w.row.status = "pass";
  }
  return w;
}

}  // namespace

RecognitionReport recognize_degree12(const PermutationGroup& g,
                                     const SetwiseSearchOptions& options) {
  if (g.degree() != kDegree) {
    throw Error(ErrorCode::BadDegree, "recognition needs degree 12, got " +
                                          std::to_string(g.degree()));
  }
  RecognitionReport r;
  const bool transitive = is_transitive(g);
  r.primitive = transitive && is_primitive(g);
  r.has_odd_permutation = std::any_of(g.generators().begin(), g.generators().end(),
                                      [](const Permutation& p) { return p.is_odd(); });
  const BigInt order = g.order();

  // Point stabilizer witness.
  PermutationGroup point_stab = pointwise_stabilizer(g, PointSet(kDegree, {0}));
  {
    CatalogRow row;
    row.entry = "point stabilizer";
    row.claimed_shape = Shape{1, 11};
    Shape shape = shape_of(point_orbits(point_stab));
    row.computed_shape = shape;
    row.computed_order = point_stab.order();
    row.spectrum = spectrum_from_shape(shape);
    row.status = shape == row.claimed_shape ? "pass" : "fail";
    r.witnesses.push_back(row);
  }
  Witness tetrad = find_witness(g, 4, Shape{8, 4}, "4-set stabilizer", options);
  Witness hexad = find_witness(g, 6, Shape{6, 6}, "6-set stabilizer", options);
  r.tetrad_proxy = tetrad.found && tetrad.stabilizer_order * 495 == order;
  r.hexad_proxy = hexad.found && hexad.stabilizer_order * 924 != order;
  r.witnesses.push_back(tetrad.row);
  r.witnesses.push_back(hexad.row);

  r.point_stabilizer_3set_orbits = subset_orbits(point_stab, 3).block_count();
  const bool six_homogeneous = is_k_homogeneous(g, 6);

  auto add = [&](std::string name, bool ok, std::string reason) {
    r.candidates.push_back(CandidateVerdict{std::move(name), ok, std::move(reason)});
  };
  const std::string parity = r.has_odd_permutation ? "contains odd permutations"
                                                   : "contains only even permutations";
  const std::string prim = r.primitive ? "" : "not primitive; ";
  add("A12", r.primitive && six_homogeneous && !r.has_odd_permutation,
      prim + (six_homogeneous ? "6-homogeneous, " : "not 6-homogeneous, ") + parity);
  add("S12", r.primitive && six_homogeneous && r.has_odd_permutation,
      prim + (six_homogeneous ? "6-homogeneous, " : "not 6-homogeneous, ") + parity);
  const std::string three = "point stabilizer has " +
                            std::to_string(r.point_stabilizer_3set_orbits) +
                            " orbits on 3-subsets";
  add("PSL(2,11)",
      r.primitive && r.point_stabilizer_3set_orbits >= 3 && !r.has_odd_permutation,
      prim + three + ", " + parity);
  add("PGL(2,11)",
      r.primitive && r.point_stabilizer_3set_orbits >= 3 && r.has_odd_permutation,
      prim + three + ", " + parity);
  const bool witnesses_ok = std::all_of(r.witnesses.begin(), r.witnesses.end(),
                                        [](const CatalogRow& w) { return w.status == "pass"; });
  std::string m12_reason = prim;
  m12_reason += witnesses_ok ? "all three witnesses found" : "a witness is missing";
  m12_reason += r.tetrad_proxy ? ", 4-set proxy holds" : ", 4-set proxy fails";
  m12_reason += r.hexad_proxy ? ", 6-set proxy holds" : ", 6-set proxy fails";
  m12_reason += ", " + three;
  add("M12", r.primitive && witnesses_ok && r.tetrad_proxy && r.hexad_proxy &&
                 r.point_stabilizer_3set_orbits == 2,
      m12_reason);

  const bool only_m12 =
      std::all_of(r.candidates.begin(), r.candidates.end(),
                  [](const CandidateVerdict& c) { return c.consistent == (c.name == "M12"); });
  r.verdict = only_m12 ? "M12" : "not-M12";
  r.notes.push_back("maximality is not tested; the 4-set and 6-set proxies compare stabilizer "
                    "orders with |G|/495 and |G|/924");
  return r;
}

bool RigidityReport::pass() const {
  return primitive && !levels.empty() &&
         std::all_of(levels.begin(), levels.end(), [](const RigidityLevel& l) { return l.pass; });
}

RigidityReport steiner_rigidity_check(const PermutationGroup& g, Point omega) {
  if (g.degree() != kDegree) {
    throw Error(ErrorCode::BadDegree, "rigidity check needs degree 12, got " +
                                          std::to_string(g.degree()));
  }
  if (omega >= kDegree) throw Error(ErrorCode::OutOfRange, "point outside domain");
  if (!is_transitive(g)) throw Error(ErrorCode::NotTransitive, "group is intransitive");
  RigidityReport report;
  report.omega = omega;
  report.primitive = is_primitive(g);
  PermutationGroup h = pointwise_stabilizer(g, PointSet(kDegree, {omega}));
  for (std::size_t k = 2; k <= 4; ++k) {
    RigidityLevel level;
    level.k = k;
    SubsetDomain subsets(kDegree, k);
    IndexedDomain domain = subset_domain(h, k);
    Partition orbits = orbits_of_action(domain.size, domain.generator_images);
    level.orbit_count = orbits.block_count();

    std::size_t first_avoiding = 0;
    while (subsets.subset(first_avoiding).contains(omega)) ++first_avoiding;
    const auto& block = orbits.blocks()[orbits.block_of(first_avoiding)];
    level.avoiding_orbit_size = block.size();
    IndexedDomain restricted = restrict_domain(domain, block);
    OrbitalDecomposition orbitals = orbitals_on(restricted);
    level.rank = orbitals.orbitals.size();

    bool all_ok = true;
    bool any_self_paired = false;
    for (const auto& orbital : orbitals.orbitals) {
      if (orbital.diagonal) continue;
      OrbitalGraphInfo info;
      info.vertices = restricted.size;
      info.valency = orbital.pairs.size() / restricted.size;
      info.self_paired = orbital.self_paired;
      if (orbital.self_paired) {
        any_self_paired = true;
        SimpleGraph graph(restricted.size);
        for (const auto& [a, b] : orbital.pairs) {
          if (a < b) graph.add_edge(a, b);
        }
        info.complete = info.valency + 1 == restricted.size;
        info.edgeless = info.valency == 0;
        info.srg = strongly_regular_parameters(graph);
        if (!info.srg) all_ok = false;
      }
      level.graphs.push_back(info);
    }
    level.pass = level.orbit_count == 2 && any_self_paired && all_ok;
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace orbitfold
