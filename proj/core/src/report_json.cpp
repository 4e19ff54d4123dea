#include "orbitfold/report_json.hpp"

namespace orbitfold {

Json partition_json(const Partition& p) {
  Json blocks = Json::array();
  for (const auto& block : p.blocks()) {
    Json b = Json::array();
    for (std::size_t x : block) b.push_back(x + 1);
    blocks.push_back(std::move(b));
  }
  return Json{{"domain", p.domain_size()}, {"blocks", std::move(blocks)}};
}

Json spectrum_json(const SpectrumSummary& s) {
  Json pairs = Json::array();
  for (const auto& [e, m] : s.pairs) pairs.push_back(Json::array({e, m}));
  return Json{{"pairs", std::move(pairs)}};
}

Json polynomial_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(to_string(c));
  return out;
}

Json aut_json(const AutDescription& a) {
  Json factors = Json::array();
  for (const auto& [size, mult] : a.factors) {
    factors.push_back(Json{{"component_size", size}, {"multiplicity", mult}});
  }
  return Json{{"factors", std::move(factors)}, {"order", to_string(a.order)}};
}

Json invariants_json(const InvariantTriple& t) {
  return Json{{"chi", t.chi}, {"omega", t.omega}, {"alpha", t.alpha}};
}

Json graph_summary_json(const CliqueUnionGraph& g) {
  Shape s = shape_of(g);
  return Json{{"vertices", g.vertex_count()},
              {"shape", s.to_string()},
              {"graph", clique_notation(s)},
              {"complete", is_complete(g)},
              {"components", s.part_count()},
              {"nontrivial_components", nontrivial_component_count(g)},
              {"spectrum", spectrum_json(spectrum_from_shape(s))},
              {"aut", aut_json(aut_order(s))},
              {"invariants", invariants_json(invariants(s))}};
}

Json catalog_row_json(const CatalogRow& row) {
  Json j;
  j["entry"] = row.entry;
  j["claimed_shape"] = row.claimed_shape.to_string();
  j["computed_shape"] = row.computed_shape ? Json(row.computed_shape->to_string()) : Json();
  j["computed_order"] = row.computed_order ? Json(to_string(*row.computed_order)) : Json();
  j["spectrum"] = row.spectrum ? spectrum_json(*row.spectrum) : Json();
  j["status"] = row.status;
  return j;
}

Json catalog_report_json(const CatalogReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(catalog_row_json(row));
  return Json{{"ambient", ambient_name(r.ambient)},
              {"rows", std::move(rows)},
              {"notes", r.notes},
              {"pass", r.pass()}};
}

Json classification_json(const ClassificationResult& r) {
  return Json{{"status", std::string(status_name(r.status))},
              {"labels", r.labels},
              {"subgroup_order", to_string(r.subgroup_order)},
              {"shape", r.shape.to_string()},
              {"graph", clique_notation(r.shape)},
              {"partition", partition_json(r.partition)},
              {"spectrum", spectrum_json(r.spectrum)},
              {"aut", aut_json(r.aut)},
              {"invariants", invariants_json(r.invariants)}};
}

Json recognition_json(const RecognitionReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(catalog_row_json(w));
  Json candidates = Json::array();
  for (const auto& c : r.candidates) {
    candidates.push_back(
        Json{{"candidate", c.name}, {"consistent", c.consistent}, {"reason", c.reason}});
  }
  return Json{{"primitive", r.primitive},
              {"has_odd_permutation", r.has_odd_permutation},
              {"witnesses", std::move(witnesses)},
              {"tetrad_maximality_proxy", r.tetrad_proxy},
              {"hexad_maximality_proxy", r.hexad_proxy},
              {"point_stabilizer_3set_orbits", r.point_stabilizer_3set_orbits},
              {"candidates", std::move(candidates)},
              {"verdict", r.verdict},
              {"notes", r.notes}};
}

Json rigidity_json(const RigidityReport& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json graphs = Json::array();
    for (const auto& g : l.graphs) {
      Json srg;
      if (g.srg) srg = Json{{"v", g.srg->v}, {"k", g.srg->k}, {"lambda", g.srg->lambda},
                            {"mu", g.srg->mu}};
      graphs.push_back(Json{{"vertices", g.vertices},
                            {"valency", g.valency},
                            {"self_paired", g.self_paired},
                            {"complete", g.complete},
                            {"edgeless", g.edgeless},
                            {"srg", std::move(srg)}});
    }
    levels.push_back(Json{{"k", l.k},
                          {"orbit_count", l.orbit_count},
                          {"avoiding_orbit_size", l.avoiding_orbit_size},
                          {"rank", l.rank},
                          {"orbital_graphs", std::move(graphs)},
                          {"pass", l.pass}});
  }
  return Json{{"point", r.omega + 1},
              {"primitive", r.primitive},
              {"levels", std::move(levels)},
              {"pass", r.pass()}};
}

Json ds_scan_json(const DsScanReport& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    levels.push_back(Json{{"n", l.n},
                          {"graphs", l.graphs},
                          {"clique_unions", l.clique_unions},
                          {"cospectral_with_clique_union", l.cospectral_with_clique_union},
                          {"counterexamples", l.counterexamples}});
  }
  Json ces = Json::array();
  for (const auto& c : r.counterexamples) {
    ces.push_back(Json{{"n", c.n}, {"edge_bits", c.edge_bits},
                       {"cospectral_shape", c.cospectral_shape.to_string()}});
  }
  return Json{{"max_n", r.max_n},
              {"levels", std::move(levels)},
              {"total_graphs", r.total_graphs()},
              {"counterexamples", std::move(ces)},
              {"pass", r.pass()}};
}

}  // namespace orbitfold
