#include "orbitfold/mathieu.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <system_error>
#include <thread>
#include <unordered_set>

#include "orbitfold/error.hpp"
#include "orbitfold/group_io.hpp"

#ifndef ORBITFOLD_DEFAULT_DATA_DIR
#define ORBITFOLD_DEFAULT_DATA_DIR "data"
#endif

namespace orbitfold {

Ambient parse_ambient(std::string_view name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "m11") return Ambient::M11;
  if (lower == "m12") return Ambient::M12;
  if (lower == "m24") return Ambient::M24;
  throw Error(ErrorCode::UnknownLabel, "unknown ambient group \"" + std::string(name) + "\"");
}

std::string ambient_file_stem(Ambient a) {
  switch (a) {
    case Ambient::M11: return "m11";
    case Ambient::M12: return "m12";
    case Ambient::M24: return "m24";
  }
  return "";
}

std::string ambient_name(Ambient a) {
  std::string s = ambient_file_stem(a);
  s[0] = 'M';
  return s;
}

ValidationRule validation_rule(Ambient a) {
  switch (a) {
    case Ambient::M11: return {a, 11, BigInt(7920), 4};
    case Ambient::M12: return {a, 12, BigInt(95040), 5};
    case Ambient::M24: return {a, 24, BigInt(244823040), 5};
  }
  throw Error(ErrorCode::UnknownLabel, "ambient");
}

void validate_group(const PermutationGroup& g, const ValidationRule& rule) {
  const std::string name = ambient_name(rule.ambient);
  if (g.degree() != rule.degree) {
    throw Error(ErrorCode::ValidationFailed, name + ": degree " + std::to_string(g.degree()) +
                                                 ", expected " + std::to_string(rule.degree));
  }
  BigInt order = g.order();
  if (order != rule.order) {
    throw Error(ErrorCode::ValidationFailed,
                name + ": order " + to_string(order) + ", expected " + to_string(rule.order));
  }
  BigInt falling = 1;
  for (std::size_t i = 0; i < rule.homogeneity; ++i) falling *= rule.degree - i;
  if (order % falling != 0) {
    throw Error(ErrorCode::ValidationFailed,
                name + ": order not divisible by " + to_string(falling));
  }
  if (!is_transitive(g) || !is_k_homogeneous(g, rule.homogeneity)) {
    throw Error(ErrorCode::ValidationFailed,
                name + ": not " + std::to_string(rule.homogeneity) + "-homogeneous");
  }
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("ORBITFOLD_DATA"); env && *env) return env;
  std::filesystem::path build_tree = ORBITFOLD_DEFAULT_DATA_DIR;
  std::error_code ec;
  if (std::filesystem::is_directory(build_tree, ec)) return build_tree;
  return ORBITFOLD_INSTALL_DATA_DIR;
}

PermutationGroup load_validated_group(Ambient a) {
  return load_validated_group(a, data_directory());
}

PermutationGroup load_validated_group(Ambient a, const std::filesystem::path& data_dir) {
  const auto path = data_dir / (ambient_file_stem(a) + ".grp");
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorCode::MissingData, "no data file " + path.string());
  }
  PermutationGroup g = read_group_file(path);
  validate_group(g, validation_rule(a));
  return g;
}

PointSet derive_block(const PermutationGroup& g, const PointSet& s) {
  std::size_t want_set = 0, small = 0, large = 0;
  switch (g.degree()) {
    case 11: want_set = 4, small = 1, large = 6; break;
    case 12: want_set = 5, small = 1, large = 6; break;
    case 24: want_set = 5, small = 3, large = 16; break;
    default:
      throw Error(ErrorCode::UnexpectedOrbitShape,
                  "no Steiner block rule for degree " + std::to_string(g.degree()));
  }
  if (s.size() != want_set) {
    throw Error(ErrorCode::UnexpectedOrbitShape, "expected a " + std::to_string(want_set) +
                                                     "-set, got " + s.to_string());
  }
  Partition orbits = point_orbits(setwise_stabilizer(g, s));
  std::vector<std::vector<std::size_t>> outside;
  for (const auto& block : orbits.blocks()) {
    if (!s.contains(static_cast<Point>(block.front()))) outside.push_back(block);
  }
  std::sort(outside.begin(), outside.end(),
            [](const auto& x, const auto& y) { return x.size() < y.size(); });
  if (outside.size() != 2 || outside[0].size() != small || outside[1].size() != large) {
    std::string sizes;
    for (const auto& b : outside) sizes += (sizes.empty() ? "" : "+") + std::to_string(b.size());
    throw Error(ErrorCode::UnexpectedOrbitShape,
                "stabilizer of " + s.to_string() + " splits the complement as " + sizes);
  }
  std::vector<Point> members = s.members();
  for (std::size_t x : outside[0]) members.push_back(static_cast<Point>(x));
  return PointSet(g.degree(), members);
}

std::vector<PointSet> enumerate_blocks(const PermutationGroup& g, const PointSet& seed,
                                       std::size_t cap) {
  std::unordered_set<PointSet, PointSetHash> seen{seed};
  std::vector<PointSet> queue{seed};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& gen : g.generators()) {
      PointSet image = apply_set(gen, queue[head]);
      if (seen.insert(image).second) {
        if (queue.size() >= cap) {
          throw Error(ErrorCode::OrbitCapExceeded,
                      "block orbit exceeds " + std::to_string(cap));
        }
        queue.push_back(std::move(image));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

PointSet derive_dodecad(const std::vector<PointSet>& octads) {
  for (std::size_t i = 0; i < octads.size(); ++i) {
    for (std::size_t j = i + 1; j < octads.size(); ++j) {
      if (set_intersection(octads[i], octads[j]).size() == 2) {
        return set_xor(octads[i], octads[j]);
      }
    }
  }
  throw Error(ErrorCode::NotFound, "no two octads meet in exactly two points");
}

Trio derive_trio(const std::vector<PointSet>& octads) {
  if (octads.empty()) throw Error(ErrorCode::NotFound, "empty octad list");
  const PointSet& b1 = octads.front();
  for (std::size_t j = 1; j < octads.size(); ++j) {
    if (!set_intersection(b1, octads[j]).empty()) continue;
    PointSet b3 = set_complement(set_union(b1, octads[j]));
    if (!std::binary_search(octads.begin(), octads.end(), b3)) {
      throw Error(ErrorCode::NotFound,
                  "complement " + b3.to_string() + " of two disjoint octads is not an octad");
    }
    return Trio{b1, octads[j], b3};
  }
  throw Error(ErrorCode::NotFound, "no octad disjoint from " + b1.to_string());
}

namespace {

CatalogEntry entry(Ambient a, std::string label, Shape shape, Construction c,
                   std::optional<BigInt> expected, std::optional<BigInt> label_order = {},
                   std::string note = {}) {
  CatalogEntry e{a,      std::move(label), shape, spectrum_from_shape(shape),
                 "maximal subgroup table", c,  std::move(expected), std::move(label_order),
                 std::move(note)};
  return e;
}

std::vector<CatalogEntry> make_catalog(Ambient a) {
  using C = Construction;
  switch (a) {
    case Ambient::M11:
      return {
          entry(a, "point stabilizer (M10)", {1, 10}, C::PointStabilizer, BigInt(720)),
          entry(a, "PSL(2,11)", {11}, C::InvolutionSearch, BigInt(660)),
          entry(a, "pentad stabilizer (S5)", {5, 6}, C::PentadStabilizer, BigInt(120)),
          entry(a, "2.S4", {2, 9}, C::PairStabilizer, BigInt(144), BigInt(48),
                "the 2-set stabilizer has order 144 = |M9:2|; a group of type 2.S4 has order 48"),
          entry(a, "M9:2", {3, 8}, C::TripleStabilizer, BigInt(48), BigInt(144),
                "the 3-set stabilizer has order 48 = |2.S4|; a group of type M9:2 has order 144"),
      };
    case Ambient::M12:
      return {
          entry(a, "point stabilizer (M11)", {1, 11}, C::PointStabilizer, BigInt(7920)),
          entry(a, "pair stabilizer (M10:2)", {2, 10}, C::PairStabilizer, BigInt(1440)),
          entry(a, "triple stabilizer (3^2:2S4)", {3, 9}, C::TripleStabilizer, BigInt(432)),
          entry(a, "tetrad stabilizer (Q8:S4)", {4, 8}, C::TetradStabilizer, BigInt(192)),
          entry(a, "PSL(2,11)", {12}, C::ProjectiveLine, BigInt(660)),
          entry(a, "M11 (transitive class)", {12}, C::None, {}),
          entry(a, "S6:2", {12}, C::None, {}),
          entry(a, "M10:2 (transitive class)", {12}, C::None, {}),
          entry(a, "3^2:2S4 (transitive class)", {12}, C::None, {}),
      };
    case Ambient::M24:
      return {
          entry(a, "point stabilizer (M23)", {1, 23}, C::PointStabilizer, BigInt(10200960)),
          entry(a, "pair stabilizer (M22:2)", {2, 22}, C::PairStabilizer, BigInt(887040)),
          entry(a, "triple stabilizer (PSL(3,4):S3)", {3, 21}, C::TripleStabilizer,
                BigInt(120960), {},
                "this class is also labelled 'sextet stabilizer', a name that conventionally "
                "denotes the transitive subgroup 2^6:3.S6"),
          entry(a, "octad stabilizer (2^4:A8)", {8, 16}, C::OctadStabilizer, BigInt(322560)),
          entry(a, "trio stabilizer (2^6:(PSL(2,7) x S3))", {8, 8, 8},
                C::OrderedTrioStabilizer, BigInt(10752), BigInt(64512),
                "built as the ordered-trio stabilizer, index 6 in the full trio stabilizer; "
                "the orbit shape of the full trio stabilizer is not computed"),
          entry(a, "dodecad stabilizer (M12:2)", {12, 12}, C::DodecadStabilizer, BigInt(95040),
                BigInt(190080),
                "the setwise stabilizer of one dodecad is M12 (order 95040); M12:2 also swaps "
                "the dodecad with its complement"),
          entry(a, "PSL(2,23)", {24}, C::ProjectiveLine, BigInt(6072)),
      };
  }
  return {};
}

// PSL(2,11) inside M11 on 11 points: generated by the first generator (an
// 11-cycle) and the first involution, in lexicographic order of images,
// that together with it generates a group of order 660.
PermutationGroup m11_psl(const PermutationGroup& m11) {
  const Permutation& cycle = m11.generators().front();
  std::unordered_set<Permutation, PermutationHash> seen{Permutation::identity(m11.degree())};
  std::vector<Permutation> elements{Permutation::identity(m11.degree())};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : m11.generators()) {
      Permutation next = compose(elements[head], gen);
      if (seen.insert(next).second) elements.push_back(std::move(next));
    }
  }
  std::vector<Permutation> involutions;
  for (const auto& e : elements) {
    if (!e.is_identity() && compose(e, e).is_identity()) involutions.push_back(e);
  }
  std::sort(involutions.begin(), involutions.end());
  for (const auto& t : involutions) {
    PermutationGroup h(m11.degree(), {cycle, t});
    if (h.order() == 660) return h;
  }
  throw Error(ErrorCode::NotFound, "no PSL(2,11) found inside the M11 data");
}

PermutationGroup stabilize_points(const PermutationGroup& t, std::initializer_list<Point> pts,
                                  const SetwiseSearchOptions& options) {
  return setwise_stabilizer(t, PointSet(t.degree(), pts), options);
}

std::vector<PointSet> octads_of(const PermutationGroup& m24) {
  return enumerate_blocks(m24, derive_block(m24, PointSet(24, {0, 1, 2, 3, 4})));
}

}  // namespace

const std::vector<CatalogEntry>& catalog(Ambient a) {
  static const std::vector<CatalogEntry> m11 = make_catalog(Ambient::M11);
  static const std::vector<CatalogEntry> m12 = make_catalog(Ambient::M12);
  static const std::vector<CatalogEntry> m24 = make_catalog(Ambient::M24);
  switch (a) {
    case Ambient::M11: return m11;
    case Ambient::M12: return m12;
    case Ambient::M24: return m24;
  }
  return m11;
}

const CatalogEntry& catalog_entry(Ambient a, std::string_view class_label) {
  for (const auto& e : catalog(a)) {
    if (e.class_label == class_label) return e;
  }
  // Short forms: the label up to the first " (".
  for (const auto& e : catalog(a)) {
    auto cut = e.class_label.find(" (");
    if (cut != std::string::npos && e.class_label.substr(0, cut) == class_label) return e;
  }
  throw Error(ErrorCode::UnknownLabel, ambient_name(a) + " has no class \"" +
                                           std::string(class_label) + "\"");
}

PermutationGroup build_catalog_subgroup(const PermutationGroup& t, Ambient a,
                                        std::string_view class_label,
                                        const SetwiseSearchOptions& options) {
  const CatalogEntry& e = catalog_entry(a, class_label);
  using C = Construction;
  switch (e.construction) {
    case C::PointStabilizer:
      return pointwise_stabilizer(t, PointSet(t.degree(), {0}));
    case C::PairStabilizer:
      return stabilize_points(t, {0, 1}, options);
    case C::TripleStabilizer:
      return stabilize_points(t, {0, 1, 2}, options);
    case C::TetradStabilizer:
      return stabilize_points(t, {0, 1, 2, 3}, options);
    case C::PentadStabilizer:
      return setwise_stabilizer(t, derive_block(t, PointSet(t.degree(), {0, 1, 2, 3})), options);
    case C::OctadStabilizer:
      return setwise_stabilizer(t, derive_block(t, PointSet(t.degree(), {0, 1, 2, 3, 4})),
                                options);
    case C::DodecadStabilizer:
      return setwise_stabilizer(t, derive_dodecad(octads_of(t)), options);
    case C::OrderedTrioStabilizer: {
      Trio trio = derive_trio(octads_of(t));
      return setwise_stabilizer(setwise_stabilizer(t, trio.b1, options), trio.b2, options);
    }
    case C::ProjectiveLine:
      return projective_linear_group(static_cast<std::uint32_t>(t.degree() - 1), false);
    case C::InvolutionSearch:
      return m11_psl(t);
    case C::None:
      break;
  }
  throw Error(ErrorCode::UnknownLabel, "class \"" + e.class_label + "\" has no construction");
}

std::string_view status_name(ClassificationResult::Status s) {
  switch (s) {
    case ClassificationResult::Status::Match: return "match";
    case ClassificationResult::Status::TransitiveAmbiguous: return "transitive-ambiguous";
    case ClassificationResult::Status::UnknownShape: return "unknown-shape";
  }
  return "";
}

ClassificationResult classify(const PermutationGroup& t, Ambient a, const PermutationGroup& h) {
  if (t.degree() != h.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "ambient degree " + std::to_string(t.degree()) +
                                               ", subgroup degree " + std::to_string(h.degree()));
  }
  if (!is_transitive(t)) throw Error(ErrorCode::NotTransitive, "ambient group is intransitive");
  ClassificationResult r;
  CliqueUnionGraph g = intersection_orbital_graph(t, h);
  r.partition = g.partition;
  r.shape = shape_of(g);
  r.spectrum = spectrum_from_shape(r.shape);
  r.aut = aut_order(r.shape);
  r.invariants = invariants(r.shape);
  r.subgroup_order = h.order();

  std::vector<std::pair<Shape, std::string>> table;
  for (const auto& e : catalog(a)) table.emplace_back(e.claimed_shape, e.class_label);
  ShapeLookup lookup = shape_lookup(table, r.shape);
  r.labels = lookup.labels;
  if (r.shape.part_count() == 1) {
    r.status = ClassificationResult::Status::TransitiveAmbiguous;
  } else if (lookup.status == ShapeLookup::Status::Found) {
    r.status = ClassificationResult::Status::Match;
  } else {
    r.status = ClassificationResult::Status::UnknownShape;
  }
  return r;
}

bool CatalogReport::pass() const {
  return std::none_of(rows.begin(), rows.end(), [](const CatalogRow& r) { return r.status == "fail"; });
}

namespace {

CatalogRow verify_entry(const CatalogEntry& e, const PermutationGroup& t,
                        const SetwiseSearchOptions& options, std::vector<std::string>& notes) {
  CatalogRow row;
  row.entry = e.class_label;
  row.claimed_shape = e.claimed_shape;
  if (e.construction == Construction::None) {
    row.status = "skipped";
    return row;
  }
  try {
    PermutationGroup h = build_catalog_subgroup(t, e.ambient, e.class_label, options);
    bool inside = std::all_of(h.generators().begin(), h.generators().end(),
                              [&](const Permutation& p) { return t.contains(p); });
    Shape shape = shape_of(intersection_orbital_graph(t, h));
    row.computed_shape = shape;
    row.computed_order = h.order();
    row.spectrum = spectrum_from_shape(shape);
    bool ok = inside && shape == e.claimed_shape && *row.spectrum == e.claimed_spectrum;
    if (e.expected_order && *row.computed_order != *e.expected_order) ok = false;
    if (!inside) notes.push_back(e.class_label + ": constructed subgroup is not contained in " +
                                 ambient_name(e.ambient));
    if (e.label_order && *e.label_order != *row.computed_order) {
      notes.push_back(e.class_label + ": computed order " + to_string(*row.computed_order) +
                      ", label order " + to_string(*e.label_order) + "; " + e.note);
    } else if (!e.note.empty()) {
      notes.push_back(e.class_label + ": " + e.note);
    }
    row.status = ok ? "pass" : "fail";
  } catch (const Error& err) {
    row.status = "fail";
    notes.push_back(e.class_label + ": " + err.what());
  }
  return row;
}

}  // namespace

CatalogReport verify_catalog(Ambient a, const PermutationGroup& t,
                             const SetwiseSearchOptions& options, std::size_t workers) {
  const auto& entries = catalog(a);
  CatalogReport report{a, std::vector<CatalogRow>(entries.size()), {}};
  std::vector<std::vector<std::string>> notes(entries.size());
  (void)t.chain();
  workers = std::max<std::size_t>(1, std::min(workers, entries.size()));
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    auto job = [&, w] {
      for (std::size_t i = w; i < entries.size(); i += workers) {
        report.rows[i] = verify_entry(entries[i], t, options, notes[i]);
      }
    };
    if (w + 1 == workers) {
      job();
    } else {
      threads.emplace_back(job);
    }
  }
  for (auto& th : threads) th.join();
  for (auto& n : notes) report.notes.insert(report.notes.end(), n.begin(), n.end());

  // Fingerprints of the constructed intransitive classes must be pairwise
  // distinct, and so must all computed spectra.
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    for (std::size_t j = i + 1; j < report.rows.size(); ++j) {
      auto& x = report.rows[i];
      auto& y = report.rows[j];
      if (!x.computed_shape || !y.computed_shape) continue;
      if (x.computed_shape->part_count() > 1 && *x.computed_shape == *y.computed_shape) {
        report.notes.push_back("shape " + x.computed_shape->to_string() + " shared by " +
                               x.entry + " and " + y.entry);
        x.status = y.status = "fail";
      } else if (*x.spectrum == *y.spectrum && x.computed_shape->part_count() > 1) {
        report.notes.push_back("spectrum shared by " + x.entry + " and " + y.entry);
        x.status = y.status = "fail";
      }
    }
  }
  return report;
}

CatalogReport verify_catalog(Ambient a) {
  return verify_catalog(a, load_validated_group(a));
}

}  // namespace orbitfold
