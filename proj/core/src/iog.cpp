#include "orbitfold/iog.hpp"

#include <algorithm>
#include <sstream>

#include "orbitfold/error.hpp"

namespace orbitfold {

namespace {

void require_same_degree(const PermutationGroup& g1, const PermutationGroup& g2) {
  if (g1.degree() != g2.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "groups of degree " + std::to_string(g1.degree()) +
                                               " and " + std::to_string(g2.degree()));
  }
}

std::string vertex_name(const CliqueUnionGraph& g, std::size_t v) {
  if (g.vertex_labels.empty()) return std::to_string(v + 1);
  return g.vertex_labels[v].to_string();
}

}  // namespace

CliqueUnionGraph clique_union(const Partition& p) { return CliqueUnionGraph{p, {}}; }

CliqueUnionGraph intersection_orbital_graph(const PermutationGroup& g1,
                                            const PermutationGroup& g2) {
  require_same_degree(g1, g2);
  return clique_union(meet(point_orbits(g1), point_orbits(g2)));
}

CliqueUnionGraph k_intersection_graph(const PermutationGroup& g1, const PermutationGroup& g2,
                                      std::size_t k, std::uint64_t domain_cap) {
  require_same_degree(g1, g2);
  SubsetDomain domain(g1.degree(), k, domain_cap);
  CliqueUnionGraph out{meet(subset_orbits(g1, k, domain_cap), subset_orbits(g2, k, domain_cap)),
                       {}};
  if (k > 1) {
    out.vertex_labels.reserve(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) out.vertex_labels.push_back(domain.subset(i));
  }
  return out;
}

bool is_complete(const CliqueUnionGraph& g) { return g.partition.block_count() == 1; }

const std::vector<std::vector<std::size_t>>& components(const CliqueUnionGraph& g) {
  return g.partition.blocks();
}

std::size_t nontrivial_component_count(const CliqueUnionGraph& g) {
  std::size_t c = 0;
  for (const auto& b : g.partition.blocks()) c += b.size() >= 2;
  return c;
}

Shape shape_of(const CliqueUnionGraph& g) { return shape_of(g.partition); }

std::string clique_notation(const Shape& s) {
  std::string out;
  for (std::size_t i = 0; i < s.parts().size(); ++i) {
    if (i) out += " ⊔ ";
    out += "K" + std::to_string(s.parts()[i]);
  }
  return out;
}

SimpleGraph densify(const CliqueUnionGraph& g) {
  SimpleGraph out(g.vertex_count());
  for (const auto& block : g.partition.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) out.add_edge(block[i], block[j]);
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> edge_list(const CliqueUnionGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& block : g.partition.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        out.emplace_back(block[i] + 1, block[j] + 1);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_dot(const CliqueUnionGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  const auto& blocks = g.partition.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    out << "  subgraph cluster_" << b << " {\n";
    out << "    label=\"K" << blocks[b].size() << "\";\n";
    for (std::size_t v : blocks[b]) out << "    \"" << vertex_name(g, v) << "\";\n";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      for (std::size_t j = i + 1; j < blocks[b].size(); ++j) {
        out << "    \"" << vertex_name(g, blocks[b][i]) << "\" -- \""
            << vertex_name(g, blocks[b][j]) << "\";\n";
      }
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace orbitfold
