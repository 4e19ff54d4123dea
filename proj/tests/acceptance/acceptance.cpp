// Acceptance run: one PASS/FAIL line per criterion, exit status = number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "orbitfold/group.hpp"
#include "orbitfold/iog.hpp"
#include "orbitfold/mathieu.hpp"
#include "orbitfold/recognition.hpp"
#include "orbitfold/spectral.hpp"

using namespace orbitfold;

namespace {

std::uint64_t g_seed = 20240611;

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      lines.push_back("  mismatch: " + what);
    }
  }
  void info(const std::string& what) { lines.push_back("  " + what); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const PermutationGroup& ambient(Ambient a) {
  static const PermutationGroup m11 = load_validated_group(Ambient::M11);
  static const PermutationGroup m12 = load_validated_group(Ambient::M12);
  static const PermutationGroup m24 = load_validated_group(Ambient::M24);
  return a == Ambient::M11 ? m11 : a == Ambient::M12 ? m12 : m24;
}

std::size_t workers() { return std::max(1u, std::thread::hardware_concurrency()); }

const CatalogRow* row_for(const CatalogReport& r, const std::string& prefix) {
  for (const auto& row : r.rows) {
    if (row.entry.rfind(prefix, 0) == 0) return &row;
  }
  return nullptr;
}

// Shape and order of a named catalog row.
void expect_row(Outcome& out, const CatalogReport& r, const std::string& prefix, const Shape& shape,
                std::optional<long long> order) {
  const CatalogRow* row = row_for(r, prefix);
  if (!row || !row->computed_shape) {
    out.check(false, prefix + " not constructed");
    return;
  }
  out.check(*row->computed_shape == shape,
            prefix + " shape " + row->computed_shape->to_string() + " vs " + shape.to_string());
  if (order) {
    out.check(row->computed_order && *row->computed_order == BigInt(*order),
              prefix + " order " + (row->computed_order ? to_string(*row->computed_order) : "-") +
                  " vs " + std::to_string(*order));
  }
  out.check(row->status == "pass", prefix + " status " + row->status);
}

Outcome criterion_m12() {
  Outcome out;
  auto start = Clock::now();
  auto r = verify_catalog(Ambient::M12, ambient(Ambient::M12), {}, workers());
  expect_row(out, r, "point stabilizer", {11, 1}, 7920);
  expect_row(out, r, "pair stabilizer", {10, 2}, 1440);
  expect_row(out, r, "triple stabilizer", {9, 3}, 432);
  expect_row(out, r, "tetrad stabilizer", {8, 4}, 192);
  expect_row(out, r, "PSL(2,11)", {12}, 660);
  double t = seconds_since(start);
  out.check(t < 10.0, "runtime " + std::to_string(t) + " s");
  return out;
}

Outcome criterion_m24() {
  Outcome out;
  auto start = Clock::now();
  const auto& m24 = ambient(Ambient::M24);
  auto r = verify_catalog(Ambient::M24, m24, {}, workers());
  expect_row(out, r, "point stabilizer", {23, 1}, 10200960);
  expect_row(out, r, "pair stabilizer", {22, 2}, 887040);
  expect_row(out, r, "triple stabilizer", {21, 3}, 120960);
  expect_row(out, r, "octad stabilizer", {16, 8}, 322560);
  expect_row(out, r, "dodecad stabilizer", {12, 12}, 95040);
  expect_row(out, r, "PSL(2,23)", {24}, 6072);
  expect_row(out, r, "trio stabilizer", {8, 8, 8}, std::nullopt);

  auto octads = enumerate_blocks(m24, derive_block(m24, PointSet(24, {0, 1, 2, 3, 4})));
  out.check(octads.size() == 759, "octad count " + std::to_string(octads.size()));
  auto octad_stab = setwise_stabilizer(m24, octads.front());
  out.check(octad_stab.order() * octads.size() == m24.order(), "octad orbit-stabilizer");
  PointSet dodecad = derive_dodecad(octads);
  auto dodecad_stab = setwise_stabilizer(m24, dodecad);
  std::size_t dodecads = oracle::set_orbit_size(m24, dodecad);
  out.check(dodecads == 2576, "dodecad orbit " + std::to_string(dodecads));
  out.check(dodecad_stab.order() * dodecads == m24.order(), "dodecad orbit-stabilizer");
  Trio trio = derive_trio(octads);
  out.check(std::binary_search(octads.begin(), octads.end(), trio.b3), "trio third octad");
  // Every 5-set lies in exactly one octad.
  std::map<std::uint64_t, int> through;
  for (const auto& o : octads) {
    auto m = o.members();
    for (std::size_t skip1 = 0; skip1 < 8; ++skip1) {
      for (std::size_t skip2 = skip1 + 1; skip2 < 8; ++skip2) {
        for (std::size_t skip3 = skip2 + 1; skip3 < 8; ++skip3) {
          std::uint64_t mask = o.mask();
          mask &= ~(std::uint64_t{1} << m[skip1]);
          mask &= ~(std::uint64_t{1} << m[skip2]);
          mask &= ~(std::uint64_t{1} << m[skip3]);
          ++through[mask];
        }
      }
    }
  }
  bool steiner = through.size() == 42504 &&
                 std::all_of(through.begin(), through.end(), [](auto& kv) { return kv.second == 1; });
  out.check(steiner, "S(5,8,24) block count through 5-sets");
  double t = seconds_since(start);
  out.check(t < 300.0, "runtime " + std::to_string(t) + " s");
  out.info("759 octads, 2576 dodecads, " + std::to_string(t).substr(0, 5) + " s");
  return out;
}

Outcome criterion_m11() {
  Outcome out;
  auto start = Clock::now();
  const auto& m11 = ambient(Ambient::M11);
  auto r = verify_catalog(Ambient::M11, m11, {}, workers());
  expect_row(out, r, "point stabilizer", {10, 1}, std::nullopt);
  expect_row(out, r, "2.S4", {9, 2}, std::nullopt);
  expect_row(out, r, "M9:2", {8, 3}, std::nullopt);
  expect_row(out, r, "pentad stabilizer", {6, 5}, std::nullopt);
  expect_row(out, r, "PSL(2,11)", {11}, std::nullopt);
  auto pentads = enumerate_blocks(m11, derive_block(m11, PointSet(11, {0, 1, 2, 3})));
  out.check(pentads.size() == 66, "pentad orbit " + std::to_string(pentads.size()));
  std::size_t discrepancy_notes = 0;
  for (const auto& note : r.notes) discrepancy_notes += note.find("label order") != std::string::npos;
  out.check(discrepancy_notes >= 2, "label/order discrepancies not recorded");
  for (const char* label : {"2.S4", "M9:2"}) {
    const CatalogRow* row = row_for(r, label);
    if (row && row->computed_order) out.info(std::string(label) + " computed order " + to_string(*row->computed_order));
  }
  double t = seconds_since(start);
  out.check(t < 10.0, "runtime " + std::to_string(t) + " s");
  return out;
}

Outcome criterion_spectra() {
  Outcome out;
  struct Row {
    Ambient a;
    const char* prefix;
    Shape shape;
    const char* spectrum;
  };
  const std::vector<Row> table{
      {Ambient::M12, "point stabilizer", {1, 11}, "{10^1, (-1)^{10}, 0^1}"},
      {Ambient::M12, "pair stabilizer", {2, 10}, "{9^1, 1^1, (-1)^{10}}"},
      {Ambient::M12, "triple stabilizer", {3, 9}, "{8^1, 2^1, (-1)^{10}}"},
      {Ambient::M12, "tetrad stabilizer", {4, 8}, "{7^1, 3^1, (-1)^{10}}"},
      {Ambient::M12, "PSL(2,11)", {12}, "{11^1, (-1)^{11}}"},
      {Ambient::M24, "point stabilizer", {1, 23}, "{22^1, (-1)^{22}, 0^1}"},
      {Ambient::M24, "pair stabilizer", {2, 22}, "{21^1, 1^1, (-1)^{22}}"},
      {Ambient::M24, "triple stabilizer", {3, 21}, "{20^1, 2^1, (-1)^{22}}"},
      {Ambient::M24, "octad stabilizer", {8, 16}, "{15^1, 7^1, (-1)^{22}}"},
      {Ambient::M24, "trio stabilizer", {8, 8, 8}, "{7^3, (-1)^{21}}"},
      {Ambient::M24, "dodecad stabilizer", {12, 12}, "{11^2, (-1)^{22}}"},
      {Ambient::M24, "PSL(2,23)", {24}, "{23^1, (-1)^{23}}"},
  };
  std::map<Ambient, CatalogReport> reports;
  for (Ambient a : {Ambient::M12, Ambient::M24}) {
    reports.emplace(a, verify_catalog(a, ambient(a), {}, workers()));
  }
  for (const auto& row : table) {
    SpectrumSummary listed = parse_spectrum(row.spectrum);
    const CatalogRow* computed = row_for(reports.at(row.a), row.prefix);
    bool ok = computed && computed->spectrum && *computed->spectrum == listed &&
              computed->spectrum->to_string() == row.spectrum;
    out.check(ok, ambient_name(row.a) + " " + row.prefix + " spectrum " +
                      (computed && computed->spectrum ? computed->spectrum->to_string() : "-") +
                      " vs " + row.spectrum);
    out.check(spectrum_from_shape(row.shape) == listed, row.shape.to_string() + " formula");
    if (row.a == Ambient::M12) {
      auto h = build_catalog_subgroup(ambient(Ambient::M12), Ambient::M12, row.prefix);
      auto dense = densify(intersection_orbital_graph(ambient(Ambient::M12), h));
      auto poly = char_poly_exact(dense);
      out.check(poly == clique_union_char_poly(row.shape), std::string(row.prefix) + " char poly");
      // Each listed eigenvalue is a root of the right order.
      for (const auto& [eig, mult] : listed.pairs) {
        IntPolynomial q = poly;
        std::size_t order = 0;
        while (q.size() > 1) {
          // Synthetic division by (x - eig).
          IntPolynomial quotient(q.size() - 1);
          BigInt carry = 0;
          for (std::size_t i = q.size(); i-- > 1;) {
            carry = q[i] + carry * eig;
            quotient[i - 1] = carry;
          }
          if (q[0] + carry * eig != 0) break;
          q = std::move(quotient);
          ++order;
        }
        out.check(order == mult, std::string(row.prefix) + " root multiplicity of " +
                                     std::to_string(eig));
      }
    }
  }
  out.info("12 spectra compared");
  return out;
}

Outcome criterion_ds() {
  Outcome out;
  auto start = Clock::now();
  auto six = ds_scan(6, workers());
  out.check(six.levels.back().graphs == 32768, "n=6 graph count");
  out.check(six.pass(), "n<=6 counterexamples " + std::to_string(six.total_counterexamples()));
  auto seven = ds_scan(7, workers());
  out.check(seven.levels.back().graphs == (std::uint64_t{1} << 21), "n=7 graph count");
  out.check(seven.pass(), "n<=7 counterexamples " + std::to_string(seven.total_counterexamples()));
  double t = seconds_since(start);
  out.check(t < 300.0, "runtime " + std::to_string(t) + " s");
  out.info(std::to_string(seven.total_graphs()) + " labeled graphs on <= 7 vertices, " +
           std::to_string(seven.levels.back().clique_unions) + " clique unions at n=7");
  return out;
}

Outcome criterion_quadratic() {
  Outcome out;
  std::size_t disagreements = 0, graphs = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * (n - 1) / 2)); ++bits) {
      auto g = SimpleGraph::from_edge_bits(n, bits);
      ++graphs;
      disagreements += satisfies_quadratic_relation(g) != recognize_clique_union(g).has_value();
    }
  }
  out.check(disagreements == 0, std::to_string(disagreements) + " disagreements");
  out.info(std::to_string(graphs) + " graphs");
  return out;
}

// Subgroups of Sym(n) as sorted element lists, for deduplication.
using Elements = std::vector<std::vector<Point>>;

Elements closure(const PermutationGroup& g) {
  auto e = oracle::elements(g);
  std::sort(e.begin(), e.end());
  return e;
}

Outcome criterion_reconstruction() {
  Outcome out;
  auto start = Clock::now();
  std::mt19937_64 rng(g_seed);
  for (std::size_t n : {5u, 6u}) {
    const BigInt full = factorial(n);
    const PermutationGroup alt = alternating_group(n);
    std::vector<PermutationGroup> corpus{symmetric_group(n), alternating_group(n)};
    std::set<Elements> seen;
    std::vector<Point> p(n);
    std::iota(p.begin(), p.end(), Point{0});
    do {
      PermutationGroup c(n, {Permutation(p)});
      if (seen.insert(closure(c)).second) corpus.push_back(c);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t cyclic = corpus.size() - 2;
    for (int i = 0; i < 200; ++i) {
      corpus.emplace_back(n, std::vector<Permutation>{oracle::random_permutation(n, rng),
                                                      oracle::random_permutation(n, rng)});
    }
    std::map<std::string, std::size_t> exceptions;
    std::size_t complete_count = 0;
    for (const auto& g : corpus) {
      bool complete = true;
      for (std::size_t k = 1; k + 1 <= n && complete; ++k) {
        complete = is_complete(k_intersection_graph(alt, g, k));
      }
      const BigInt order = g.order();
      bool large = order == full || order * 2 == full;
      complete_count += complete;
      if (complete != large) ++exceptions[to_string(order)];
    }
    std::ostringstream line;
    line << "n=" << n << ": " << corpus.size() << " groups (" << cyclic << " cyclic), "
         << complete_count << " with every Gamma_k complete";
    out.info(line.str());
    for (const auto& [order, count] : exceptions) {
      out.check(false, "n=" + std::to_string(n) + ": " + std::to_string(count) +
                           " corpus groups of order " + order +
                           " have every Gamma_k complete without containing Alt(n)");
    }
  }
  double t = seconds_since(start);
  out.check(t < 30.0, "runtime " + std::to_string(t) + " s");
  return out;
}

Outcome criterion_recognition() {
  Outcome out;
  auto m12 = recognize_degree12(ambient(Ambient::M12));
  out.check(m12.is_m12(), "validated M12 verdict " + m12.verdict);
  struct Case {
    const char* name;
    PermutationGroup g;
    bool projective;
  };
  std::vector<Case> cases{{"Sym(12)", symmetric_group(12), false},
                          {"Alt(12)", alternating_group(12), false},
                          {"PSL(2,11)", projective_linear_group(11, false), true},
                          {"PGL(2,11)", projective_linear_group(11, true), true}};
  for (const auto& c : cases) {
    auto r = recognize_degree12(c.g);
    out.check(!r.is_m12(), std::string(c.name) + " verdict " + r.verdict);
    if (c.projective) {
      out.check(r.point_stabilizer_3set_orbits >= 3,
                std::string(c.name) + " 3-subset orbits " +
                    std::to_string(r.point_stabilizer_3set_orbits));
      out.info(std::string(c.name) + ": point stabilizer has " +
               std::to_string(r.point_stabilizer_3set_orbits) + " orbits on 3-subsets");
    }
  }
  return out;
}

Outcome criterion_rigidity() {
  Outcome out;
  auto start = Clock::now();
  const auto& m12 = ambient(Ambient::M12);
  auto r = steiner_rigidity_check(m12, 0);
  for (const auto& level : r.levels) {
    out.check(level.orbit_count == 2,
              "k=" + std::to_string(level.k) + " orbit count " + std::to_string(level.orbit_count));
  }
  const auto& two = r.levels.front();
  out.check(two.avoiding_orbit_size == 55, "k=2 vertex count " + std::to_string(two.avoiding_orbit_size));
  bool valency24 = false;
  std::ostringstream found;
  for (const auto& g : two.graphs) {
    valency24 = valency24 || g.valency == 24;
    found << " " << g.vertices << "/" << g.valency;
    if (g.srg) {
      found << " srg(" << g.srg->v << "," << g.srg->k << "," << g.srg->lambda << "," << g.srg->mu
            << ")";
    }
  }
  out.info("k=2 orbital graphs (vertices/valency):" + found.str());
  std::vector<oracle::GraphFacts> reported;
  for (const auto& g : two.graphs) {
    if (g.self_paired) reported.push_back({g.valency, g.srg});
  }
  std::sort(reported.begin(), reported.end());
  out.check(reported == oracle::orbital_graphs(m12, 0, 2),
            "k=2 SRG parameters disagree with the common-neighbour oracle");
  out.check(valency24, "no k=2 orbital graph of valency 24");
  for (const auto& level : r.levels) {
    out.check(level.pass, "k=" + std::to_string(level.k) + " rank " + std::to_string(level.rank) +
                              ", not every orbital graph is a non-degenerate SRG");
  }
  auto sym = steiner_rigidity_check(symmetric_group(12), 0);
  bool degenerate_k2 = std::all_of(sym.levels.front().graphs.begin(), sym.levels.front().graphs.end(),
                                   [](const OrbitalGraphInfo& g) { return g.complete || g.edgeless; });
  out.check(!sym.pass(), "Sym(12) passes");
  out.check(degenerate_k2, "Sym(12) k=2 orbital graphs are non-degenerate SRGs (rank " +
                               std::to_string(sym.levels.front().rank) + ")");
  double t = seconds_since(start);
  out.check(t < 60.0, "runtime " + std::to_string(t) + " s");
  return out;
}

Outcome criterion_formulas() {
  Outcome out;
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& s : integer_partitions(n)) {
      auto brute = oracle::automorphism_count(oracle::clique_union_graph(s.parts()));
      out.check(aut_order(s).order == BigInt(brute), "aut order of " + s.to_string());
      ++checked;
    }
  }
  // 1575 is the number of partitions of 24 itself; every smaller total is
  // covered as well.
  std::size_t round_trips = 0;
  std::size_t of_24 = 0;
  for (std::size_t n = 1; n <= 24; ++n) {
    for (const auto& s : integer_partitions(n)) {
      out.check(shape_from_spectrum(spectrum_from_shape(s)) == s, "round trip " + s.to_string());
      ++round_trips;
      of_24 += n == 24;
    }
  }
  out.check(of_24 == 1575, "partitions of 24: " + std::to_string(of_24));
  out.check(round_trips == 7337, "partitions of totals <= 24: " + std::to_string(round_trips));
  out.info(std::to_string(checked) + " automorphism counts, " + std::to_string(round_trips) +
           " round trips (" + std::to_string(of_24) + " of total 24)");
  return out;
}

}  // namespace

std::uint64_t oracle::seed() { return g_seed; }

int main(int argc, char** argv) {
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) g_seed = std::strtoull(argv[i] + 7, nullptr, 10);
    if (std::strcmp(argv[i], "-v") == 0) verbose = true;
  }
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"M12 fingerprint table", criterion_m12},
      {"M24 fingerprint table", criterion_m24},
      {"M11 fingerprint table", criterion_m11},
      {"spectral tables", criterion_spectra},
      {"DS property up to 7 vertices", criterion_ds},
      {"quadratic-relation equivalence", criterion_quadratic},
      {"strong reconstruction, n = 5, 6", criterion_reconstruction},
      {"degree-12 recognition", criterion_recognition},
      {"Steiner rigidity", criterion_rigidity},
      {"formula cross-checks", criterion_formulas},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %2zu  %s  (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                seconds_since(start));
    if (!o.pass || verbose) {
      for (const auto& line : o.lines) std::printf("%s\n", line.c_str());
    }
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed;
}
