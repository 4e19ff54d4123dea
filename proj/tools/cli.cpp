#include "cli.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "orbitfold/error.hpp"
#include "orbitfold/group.hpp"
#include "orbitfold/group_io.hpp"
#include "orbitfold/iog.hpp"
#include "orbitfold/mathieu.hpp"
#include "orbitfold/recognition.hpp"
#include "orbitfold/report_json.hpp"
#include "orbitfold/spectral.hpp"
#include "orbitfold/subset_domain.hpp"

namespace orbitfold::cli {
namespace {

struct RunConfig {
  std::string format = "json";
  std::vector<std::string> inputs;
  std::size_t k = 1;
  std::string ambient;
  std::string dot_path;
  std::uint64_t budget = SetwiseSearchOptions{}.node_budget;
  std::size_t workers = 1;
  std::size_t point = 1;
  std::size_t max_n = 6;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::uint32_t parse_count(const std::string& spec, const std::string& text) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::Malformed, "bad group spec \"" + spec + "\"");
  }
  return v;
}

// Catalog subgroups by the first word of their label, e.g. "m12:tetrad".
PermutationGroup catalog_group(Ambient a, const std::string& spec, const std::string& word,
                               const SetwiseSearchOptions& options) {
  const PermutationGroup ambient = load_validated_group(a);
  std::vector<const CatalogEntry*> hits;
  for (const auto& e : catalog(a)) {
    if (e.construction == Construction::None) continue;
    std::string label = lower(e.class_label);
    if (label == word || label.substr(0, label.find(' ')) == word) hits.push_back(&e);
  }
  if (hits.size() != 1) {
    throw Error(ErrorCode::UnknownLabel, "no unique constructible class for \"" + spec + "\"");
  }
  return build_catalog_subgroup(ambient, a, hits.front()->class_label, options);
}

/// A group file, or one of sym:N, alt:N, psl:P, pgl:P, m11, m12, m24 and
/// m11/m12/m24:CLASS.
PermutationGroup resolve_group(const std::string& spec, const SetwiseSearchOptions& options) {
  const std::string s = lower(spec);
  const auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  if (colon == std::string::npos) {
    if (s == "m11" || s == "m12" || s == "m24") return load_validated_group(parse_ambient(s));
    return read_group_file(spec);
  }
  const std::string tail = s.substr(colon + 1);
  if (head == "sym") return symmetric_group(parse_count(spec, tail));
  if (head == "alt") return alternating_group(parse_count(spec, tail));
  if (head == "psl") return projective_linear_group(parse_count(spec, tail), false);
  if (head == "pgl") return projective_linear_group(parse_count(spec, tail), true);
  if (head == "m11" || head == "m12" || head == "m24") {
    return catalog_group(parse_ambient(head), spec, tail, options);
  }
  return read_group_file(spec);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string join_points(const std::vector<Point>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(pts[i] + 1);
  }
  return s + "}";
}

int cmd_orbits(const RunConfig& cfg, std::ostream& out) {
  const PermutationGroup g = resolve_group(cfg.inputs.at(0), {cfg.budget});
  if (cfg.k == 0 || cfg.k > g.degree()) {
    throw Error(ErrorCode::KTooLarge, "k must lie in 1.." + std::to_string(g.degree()));
  }
  const Partition p = cfg.k == 1 ? point_orbits(g) : subset_orbits(g, cfg.k);
  const Shape shape = shape_of(p);
  Json j;
  j["degree"] = g.degree();
  j["order"] = to_string(g.order());
  j["k"] = cfg.k;
  j["orbit_count"] = p.block_count();
  j["shape"] = shape.to_string();
  if (cfg.k == 1) {
    j["partition"] = partition_json(p);
  } else {
    SubsetDomain domain(g.degree(), cfg.k);
    Json orbits = Json::array();
    for (const auto& block : p.blocks()) {
      Json row;
      row["size"] = block.size();
      Json rep = Json::array();
      for (Point x : domain.subset(block.front()).members()) rep.push_back(x + 1);
      row["representative"] = std::move(rep);
      orbits.push_back(std::move(row));
    }
    j["orbits"] = std::move(orbits);
  }
  if (cfg.format == "text") {
    out << "degree " << g.degree() << ", order " << to_string(g.order()) << "\n";
    out << "k = " << cfg.k << ": " << p.block_count() << " orbit(s), shape " << shape.to_string()
        << "\n";
    if (cfg.k == 1) {
      for (const auto& block : p.blocks()) {
        std::vector<Point> pts(block.begin(), block.end());
        out << "  " << join_points(pts) << "\n";
      }
    }
  } else {
    emit(out, j);
  }
  return kPass;
}

int cmd_graph(const RunConfig& cfg, std::ostream& out) {
  const SetwiseSearchOptions options{cfg.budget};
  const PermutationGroup g1 = resolve_group(cfg.inputs.at(0), options);
  const PermutationGroup g2 = resolve_group(cfg.inputs.at(1), options);
  const CliqueUnionGraph graph =
      cfg.k == 1 ? intersection_orbital_graph(g1, g2) : k_intersection_graph(g1, g2, cfg.k);
  if (!cfg.dot_path.empty()) {
    std::ofstream f(cfg.dot_path);
    if (!f) throw Error(ErrorCode::MissingData, "cannot write " + cfg.dot_path);
    f << to_dot(graph);
  }
  const Shape shape = shape_of(graph);
  if (cfg.format == "dot") {
    out << to_dot(graph);
    return kPass;
  }
  if (cfg.format == "text") {
    const InvariantTriple inv = invariants(shape);
    out << clique_notation(shape) << " on " << graph.vertex_count() << " vertices"
        << (is_complete(graph) ? " (complete)" : "") << "\n";
    out << "shape     " << shape.to_string() << "\n";
    out << "spectrum  " << spectrum_from_shape(shape).to_string() << "\n";
    out << "|Aut|     " << to_string(aut_order(shape).order) << "\n";
    out << "chi/omega/alpha  " << inv.chi << "/" << inv.omega << "/" << inv.alpha << "\n";
    return kPass;
  }
  Json j;
  j["degree"] = g1.degree();
  j["k"] = cfg.k;
  j["graph"] = graph_summary_json(graph);
  j["characteristic_polynomial"] = polynomial_json(clique_union_char_poly(shape));
  emit(out, j);
  return kPass;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const Ambient a = parse_ambient(cfg.ambient);
  const PermutationGroup ambient = load_validated_group(a);
  const PermutationGroup h = resolve_group(cfg.inputs.at(0), {cfg.budget});
  const ClassificationResult r = classify(ambient, a, h);
  if (cfg.format == "text") {
    out << ambient_name(a) << " subgroup of order " << to_string(r.subgroup_order) << ": shape "
        << r.shape.to_string() << ", " << status_name(r.status) << "\n";
    for (const auto& label : r.labels) out << "  " << label << "\n";
  } else {
    emit(out, classification_json(r));
  }
  return r.status == ClassificationResult::Status::UnknownShape ? kReportFailure : kPass;
}

int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
  const Ambient a = parse_ambient(cfg.ambient);
  const PermutationGroup ambient = load_validated_group(a);
  const CatalogReport r = verify_catalog(a, ambient, {cfg.budget}, cfg.workers);
  if (cfg.format == "text") {
    for (const auto& row : r.rows) {
      out << row.status << "  " << row.entry << "  claimed " << row.claimed_shape.to_string();
      if (row.computed_shape) out << "  computed " << row.computed_shape->to_string();
      if (row.computed_order) out << "  order " << to_string(*row.computed_order);
      out << "\n";
    }
    for (const auto& note : r.notes) out << "note: " << note << "\n";
  } else {
    emit(out, catalog_report_json(r));
  }
  return r.pass() ? kPass : kReportFailure;
}

int cmd_recognize12(const RunConfig& cfg, std::ostream& out) {
  const PermutationGroup g = resolve_group(cfg.inputs.at(0), {cfg.budget});
  const RecognitionReport r = recognize_degree12(g, {cfg.budget});
  if (cfg.format == "text") {
    out << r.verdict << "\n";
    for (const auto& c : r.candidates) {
      out << "  " << c.name << ": " << (c.consistent ? "consistent" : "excluded") << " ("
          << c.reason << ")\n";
    }
  } else {
    emit(out, recognition_json(r));
  }
  return r.is_m12() ? kPass : kReportFailure;
}

int cmd_rigidity(const RunConfig& cfg, std::ostream& out) {
  const PermutationGroup g = resolve_group(cfg.inputs.at(0), {cfg.budget});
  if (cfg.point == 0 || cfg.point > g.degree()) {
    throw Error(ErrorCode::OutOfRange, "point must lie in 1.." + std::to_string(g.degree()));
  }
  const RigidityReport r = steiner_rigidity_check(g, static_cast<Point>(cfg.point - 1));
  if (cfg.format == "text") {
    for (const auto& level : r.levels) {
      out << "k=" << level.k << "  orbits " << level.orbit_count << "  rank " << level.rank
          << "  " << (level.pass ? "pass" : "fail") << "\n";
      for (const auto& info : level.graphs) {
        out << "    " << info.vertices << " vertices, valency " << info.valency;
        if (info.srg) {
          out << ", srg(" << info.srg->v << "," << info.srg->k << "," << info.srg->lambda << ","
              << info.srg->mu << ")";
        }
        out << "\n";
      }
    }
  } else {
    emit(out, rigidity_json(r));
  }
  return r.pass() ? kPass : kReportFailure;
}

int cmd_ds_scan(const RunConfig& cfg, std::ostream& out) {
  const DsScanReport r = ds_scan(cfg.max_n, cfg.workers);
  if (cfg.format == "text") {
    for (const auto& level : r.levels) {
      out << "n=" << level.n << "  graphs " << level.graphs << "  clique unions "
          << level.clique_unions << "  cospectral " << level.cospectral_with_clique_union
          << "  counterexamples " << level.counterexamples << "\n";
    }
  } else {
    emit(out, ds_scan_json(r));
  }
  return r.pass() ? kPass : kReportFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Orbit partitions, intersection orbital graphs and Mathieu fingerprints"};
  app.name("orbitfold");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}));

  auto* orbits = app.add_subcommand("orbits", "Orbit partition on points or k-subsets");
  orbits->add_option("group", cfg.inputs, "Group file or builtin")->required()->expected(1);
  orbits->add_option("--k", cfg.k, "Subset size")->check(CLI::PositiveNumber);

  auto* graph = app.add_subcommand("graph", "Intersection orbital graph of two groups");
  graph->add_option("groups", cfg.inputs, "Two group files or builtins")->required()->expected(2);
  graph->add_option("--k", cfg.k, "Subset size")->check(CLI::PositiveNumber);
  graph->add_option("--dot", cfg.dot_path, "Also write Graphviz output here");
  graph->add_option("--budget", cfg.budget, "Backtrack node budget");

  auto* classify_cmd = app.add_subcommand("classify", "Fingerprint a subgroup of a Mathieu group");
  classify_cmd->add_option("--ambient", cfg.ambient, "m11, m12 or m24")->required();
  classify_cmd->add_option("group", cfg.inputs, "Subgroup file or builtin")->required()->expected(1);
  classify_cmd->add_option("--budget", cfg.budget, "Backtrack node budget");

  auto* catalog_cmd = app.add_subcommand("catalog", "Verify the maximal subgroup table");
  catalog_cmd->add_option("--ambient", cfg.ambient, "m11, m12 or m24")->required();
  catalog_cmd->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  catalog_cmd->add_option("--budget", cfg.budget, "Backtrack node budget");

  auto* rec = app.add_subcommand("recognize12", "Decide whether a degree-12 group is M12");
  rec->add_option("group", cfg.inputs, "Group file or builtin")->required()->expected(1);
  rec->add_option("--budget", cfg.budget, "Backtrack node budget");

  auto* rig = app.add_subcommand("rigidity", "Orbital graphs of a point stabilizer on k-subsets");
  rig->add_option("group", cfg.inputs, "Group file or builtin")->required()->expected(1);
  rig->add_option("--point", cfg.point, "Stabilized point (1-based)")->required();

  auto* ds = app.add_subcommand("ds-scan", "Exhaustive spectral check on small graphs");
  ds->add_option("--max-n", cfg.max_n, "Largest vertex count")->required();
  ds->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (cfg.format == "dot" && !graph->parsed()) {
      throw Error(ErrorCode::Malformed, "--format dot applies to the graph subcommand only");
    }
    if (orbits->parsed()) return cmd_orbits(cfg, out);
    if (graph->parsed()) return cmd_graph(cfg, out);
    if (classify_cmd->parsed()) return cmd_classify(cfg, out);
    if (catalog_cmd->parsed()) return cmd_catalog(cfg, out);
    if (rec->parsed()) return cmd_recognize12(cfg, out);
    if (rig->parsed()) return cmd_rigidity(cfg, out);
    if (ds->parsed()) return cmd_ds_scan(cfg, out);
  } catch (const Error& e) {
    err << "orbitfold: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "orbitfold: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace orbitfold::cli
