#include "orbitfold/simple_graph.hpp"

#include <bit>

#include "orbitfold/error.hpp"

namespace orbitfold {

SimpleGraph::SimpleGraph(std::size_t vertex_count)
    : n_(vertex_count), words_((vertex_count + 63) / 64) {
  if (vertex_count > kMaxVertices) {
    throw Error(ErrorCode::DomainTooLarge,
                std::to_string(vertex_count) + " vertices exceed " +
                    std::to_string(kMaxVertices));
  }
  rows_.assign(n_ * words_, 0);
}

SimpleGraph SimpleGraph::from_edge_bits(std::size_t n, std::uint64_t edge_bits) {
  if (n > 11) throw Error(ErrorCode::DomainTooLarge, "edge bit encoding needs n <= 11");
  SimpleGraph g(n);
  std::size_t bit = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u, ++bit) {
      if ((edge_bits >> bit) & 1u) {
        g.rows_[u * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        g.rows_[v * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
      }
    }
  }
  return g;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw Error(ErrorCode::OutOfRange, "edge endpoint outside graph");
  if (u == v) throw Error(ErrorCode::Malformed, "loop at vertex " + std::to_string(u + 1));
  rows_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

std::size_t SimpleGraph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t u = 0; u < n_; ++u) twice += degree(u);
  return twice / 2;
}

std::size_t SimpleGraph::common_neighbours(std::size_t u, std::size_t v) const {
  auto a = row(u);
  auto b = row(v);
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Partition connected_components(const SimpleGraph& g) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> label(n, kUnset);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != kUnset) continue;
    label[s] = s;
    stack.assign(1, s);
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      auto r = g.row(u);
      for (std::size_t w = 0; w < r.size(); ++w) {
        for (std::uint64_t bits = r[w]; bits; bits &= bits - 1) {
          std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          if (label[v] == kUnset) {
            label[v] = s;
            stack.push_back(v);
          }
        }
      }
    }
  }
  return Partition::from_labels(label);
}

bool satisfies_quadratic_relation(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::int64_t> deg(n);
  for (std::size_t u = 0; u < n; ++u) deg[u] = static_cast<std::int64_t>(g.degree(u));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      auto lhs = static_cast<std::int64_t>(g.common_neighbours(u, v));
      std::int64_t rhs = (deg[u] - 1) * (g.adjacent(u, v) ? 1 : 0) + (u == v ? deg[u] : 0);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::optional<Shape> recognize_clique_union(const SimpleGraph& g) {
  Partition comps = connected_components(g);
  std::vector<std::size_t> parts;
  for (const auto& block : comps.blocks()) {
    for (std::size_t u : block) {
      if (g.degree(u) != block.size() - 1) return std::nullopt;
    }
    parts.push_back(block.size());
  }
  if (parts.empty()) return std::nullopt;
  return Shape(std::move(parts));
}

std::optional<SrgParameters> strongly_regular_parameters(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) return std::nullopt;
  SrgParameters p;
  p.v = n;
  p.k = g.degree(0);
  if (p.k == 0 || p.k == n - 1) return std::nullopt;
  for (std::size_t u = 1; u < n; ++u) {
    if (g.degree(u) != p.k) return std::nullopt;
  }
  bool have_lambda = false;
  bool have_mu = false;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      std::size_t c = g.common_neighbours(u, v);
      if (g.adjacent(u, v)) {
        if (have_lambda && c != p.lambda) return std::nullopt;
        p.lambda = c;
        have_lambda = true;
      } else {
        if (have_mu && c != p.mu) return std::nullopt;
        p.mu = c;
        have_mu = true;
      }
    }
  }
  return p;
}

}  // namespace orbitfold
