#include "orbitfold/group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>

#include "orbitfold/error.hpp"

namespace orbitfold {

struct PermutationGroup::ChainCache {
  std::once_flag once;
  std::optional<StabilizerChain> chain;
};

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)),
      cache_(std::make_shared<ChainCache>()) {
  if (degree == 0 || degree > kMaxDegree) {
    throw Error(ErrorCode::BadDegree, "group degree " + std::to_string(degree));
  }
  for (const auto& g : generators_) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch, "generator " + g.to_cycle_string() +
                                                 " has degree " + std::to_string(g.degree()) +
                                                 ", group degree " + std::to_string(degree));
    }
  }
  if (generators_.empty()) generators_.push_back(Permutation::identity(degree));
}

const StabilizerChain& PermutationGroup::chain() const {
  std::call_once(cache_->once, [this] {
    cache_->chain.emplace(StabilizerChain::build(degree_, generators_));
  });
  return *cache_->chain;
}

StabilizerChain build_chain(const PermutationGroup& g, std::span<const Point> base_prefix) {
  if (base_prefix.empty()) return g.chain();
  return StabilizerChain::build(g.degree(), g.generators(), base_prefix);
}

bool contains(const PermutationGroup& g, const Permutation& p) {
  if (p.degree() != g.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "element degree " + std::to_string(p.degree()) +
                                               " vs group degree " + std::to_string(g.degree()));
  }
  return g.contains(p);
}

Partition orbits_of_action(std::size_t size, std::span<const std::vector<Point>> index_generators) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(size, kUnset);
  std::vector<std::size_t> queue;
  std::size_t next = 0;
  for (std::size_t start = 0; start < size; ++start) {
    if (label[start] != kUnset) continue;
    label[start] = next;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t x = queue[head];
      for (const auto& gen : index_generators) {
        std::size_t y = gen[x];
        if (label[y] == kUnset) {
          label[y] = next;
          queue.push_back(y);
        }
      }
    }
    ++next;
  }
  return Partition::from_labels(label);
}

IndexedDomain point_domain(const PermutationGroup& g) {
  IndexedDomain d;
  d.size = g.degree();
  for (const auto& gen : g.generators()) {
    d.generator_images.emplace_back(gen.images().begin(), gen.images().end());
  }
  return d;
}

IndexedDomain subset_domain(const PermutationGroup& g, std::size_t k, std::uint64_t domain_cap) {
  SubsetDomain domain(g.degree(), k, domain_cap);
  IndexedDomain d;
  d.size = domain.size();
  for (const auto& gen : g.generators()) d.generator_images.push_back(domain.induced(gen));
  return d;
}

IndexedDomain restrict_domain(const IndexedDomain& domain, std::span<const std::size_t> indices) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> local(domain.size, kUnset);
  for (std::size_t i = 0; i < indices.size(); ++i) local[indices[i]] = i;
  IndexedDomain d;
  d.size = indices.size();
  for (std::size_t i = 0; i < indices.size(); ++i) {
    d.original_index.push_back(domain.original_index.empty() ? indices[i]
                                                             : domain.original_index[indices[i]]);
  }
  for (const auto& images : domain.generator_images) {
    std::vector<Point> r(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
      std::size_t y = local[images[indices[i]]];
      if (y == kUnset) {
        throw Error(ErrorCode::DomainMismatch, "restriction is not invariant");
      }
      r[i] = static_cast<Point>(y);
    }
    d.generator_images.push_back(std::move(r));
  }
  return d;
}

Partition point_orbits(const PermutationGroup& g) {
  IndexedDomain d = point_domain(g);
  return orbits_of_action(d.size, d.generator_images);
}

Partition subset_orbits(const PermutationGroup& g, std::size_t k, std::uint64_t domain_cap) {
  IndexedDomain d = subset_domain(g, k, domain_cap);
  return orbits_of_action(d.size, d.generator_images);
}

bool is_transitive(const PermutationGroup& g) { return point_orbits(g).block_count() == 1; }

bool is_k_homogeneous(const PermutationGroup& g, std::size_t k, std::uint64_t domain_cap) {
  return subset_orbits(g, k, domain_cap).block_count() == 1;
}

PermutationGroup pointwise_stabilizer(const PermutationGroup& g, const PointSet& s) {
  if (s.degree() != g.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "set degree " + std::to_string(s.degree()) +
                                               " vs group degree " + std::to_string(g.degree()));
  }
  std::vector<Point> prefix = s.members();
  StabilizerChain chain = build_chain(g, prefix);
  return PermutationGroup(g.degree(), chain.stabilizer_generators(prefix.size()));
}

Partition suborbits(const PermutationGroup& g, Point omega) {
  if (omega >= g.degree()) throw Error(ErrorCode::OutOfRange, "point outside domain");
  if (!is_transitive(g)) throw Error(ErrorCode::NotTransitive, "suborbits need a transitive group");
  return point_orbits(pointwise_stabilizer(g, PointSet(g.degree(), {omega})));
}

Partition minimal_block_system(const PermutationGroup& g, Point alpha, Point beta) {
  const std::size_t n = g.degree();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::pair<std::size_t, std::size_t>> queue;
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    queue.emplace_back(a, b);
  };
  unite(alpha, beta);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [x, y] = queue[head];
    for (const auto& gen : g.generators()) {
      unite(gen[static_cast<Point>(x)], gen[static_cast<Point>(y)]);
    }
  }
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = find(i);
  return Partition::from_labels(labels);
}

bool is_primitive(const PermutationGroup& g) {
  if (!is_transitive(g)) {
    throw Error(ErrorCode::NotTransitive, "primitivity is defined for transitive groups");
  }
  for (Point beta = 1; beta < g.degree(); ++beta) {
    if (minimal_block_system(g, 0, beta).block_count() != 1) return false;
  }
  return true;
}

OrbitalDecomposition orbitals_on(const IndexedDomain& domain, std::uint64_t pair_cap) {
  const std::uint64_t m = domain.size;
  if (m * m > pair_cap) {
    throw Error(ErrorCode::DomainTooLarge, std::to_string(m * m) + " ordered pairs exceed cap " +
                                               std::to_string(pair_cap));
  }
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(m * m, kUnset);
  OrbitalDecomposition out;
  out.domain_size = domain.size;
  std::vector<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < m * m; ++start) {
    if (label[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(out.orbitals.size());
    label[start] = id;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::uint64_t a = queue[head] / m;
      std::uint64_t b = queue[head] % m;
      for (const auto& images : domain.generator_images) {
        std::uint64_t next = std::uint64_t{images[a]} * m + images[b];
        if (label[next] == kUnset) {
          label[next] = id;
          queue.push_back(next);
        }
      }
    }
    Orbital orbital;
    std::sort(queue.begin(), queue.end());
    for (std::uint64_t code : queue) orbital.pairs.emplace_back(code / m, code % m);
    const auto [a, b] = orbital.pairs.front();
    orbital.diagonal = (a == b);
    orbital.self_paired = label[b * m + a] == id;
    out.orbitals.push_back(std::move(orbital));
  }
  return out;
}

}  // namespace orbitfold
