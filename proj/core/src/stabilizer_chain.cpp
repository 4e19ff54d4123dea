#include "orbitfold/stabilizer_chain.hpp"

#include <algorithm>

#include "orbitfold/error.hpp"

namespace orbitfold {

Permutation StabilizerLevel::transversal(Point p) const {
  std::vector<std::int32_t> path;
  Point q = p;
  while (schreier[q] != kRoot) {
    auto j = schreier[q];
    path.push_back(j);
    q = inverse_generators[static_cast<std::size_t>(j)][q];
  }
  Permutation u = Permutation::identity(schreier.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    u = compose(u, generators[static_cast<std::size_t>(*it)]);
  }
  return u;
}

Permutation StabilizerLevel::sift_step(const Permutation& g, Point p) const {
  Permutation h = g;
  while (schreier[p] != kRoot) {
    const auto& inv = inverse_generators[static_cast<std::size_t>(schreier[p])];
    h = compose(h, inv);
    p = inv[p];
  }
  return h;
}

void StabilizerChain::rebuild_orbit(std::size_t i) {
  StabilizerLevel& lvl = levels_[i];
  lvl.inverse_generators.clear();
  for (const auto& g : lvl.generators) lvl.inverse_generators.push_back(inverse(g));
  lvl.schreier.assign(degree_, StabilizerLevel::kAbsent);
  lvl.orbit.clear();
  lvl.schreier[lvl.base_point] = StabilizerLevel::kRoot;
  lvl.orbit.push_back(lvl.base_point);
  for (std::size_t head = 0; head < lvl.orbit.size(); ++head) {
    Point p = lvl.orbit[head];
    for (std::size_t j = 0; j < lvl.generators.size(); ++j) {
      Point q = lvl.generators[j][p];
      if (lvl.schreier[q] == StabilizerLevel::kAbsent) {
        lvl.schreier[q] = static_cast<std::int32_t>(j);
        lvl.orbit.push_back(q);
      }
    }
  }
}

StabilizerChain StabilizerChain::build(std::size_t degree,
                                       std::span<const Permutation> generators,
                                       std::span<const Point> base_prefix) {
  if (degree == 0 || degree > kMaxDegree) {
    throw Error(ErrorCode::BadDegree, "chain degree " + std::to_string(degree));
  }
  StabilizerChain chain(degree);

  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch, "generator of degree " +
                                                 std::to_string(g.degree()) + " in group of degree " +
                                                 std::to_string(degree));
    }
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) {
      gens.push_back(g);
    }
  }

  std::vector<Point> base;
  for (Point b : base_prefix) {
    if (b >= degree) throw Error(ErrorCode::OutOfRange, "base point outside domain");
    if (std::find(base.begin(), base.end(), b) == base.end()) base.push_back(b);
  }
  for (const auto& g : gens) {
    bool fixes_base = std::all_of(base.begin(), base.end(), [&](Point b) { return g[b] == b; });
    if (fixes_base) base.push_back(first_moved_point(g));
  }

  for (std::size_t i = 0; i < base.size(); ++i) {
    StabilizerLevel lvl;
    lvl.base_point = base[i];
    for (const auto& g : gens) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i && fixes_prefix; ++j) fixes_prefix = g[base[j]] == base[j];
      if (fixes_prefix) lvl.generators.push_back(g);
    }
    chain.levels_.push_back(std::move(lvl));
    chain.rebuild_orbit(i);
  }

  // Deterministic Schreier-Sims: every Schreier generator of level i must
  // sift through levels i+1.. ; failures become new strong generators.
  std::size_t pending = chain.levels_.size();
  while (pending >= 1) {
    const std::size_t i = pending - 1;
    bool extended = false;
    const std::vector<Point> orbit = chain.levels_[i].orbit;
    const std::vector<Permutation> level_gens = chain.levels_[i].generators;
    for (std::size_t oi = 0; oi < orbit.size() && !extended; ++oi) {
      const Point beta = orbit[oi];
      const Permutation u_beta = chain.levels_[i].transversal(beta);
      for (const auto& x : level_gens) {
        Permutation schreier_gen =
            chain.levels_[i].sift_step(compose(u_beta, x), x[beta]);
        if (schreier_gen.is_identity()) continue;
        auto [residue, stop] = chain.strip(schreier_gen, i + 1);
        if (stop == chain.levels_.size() && residue.is_identity()) continue;

        if (stop == chain.levels_.size()) {
          StabilizerLevel fresh;
          fresh.base_point = first_moved_point(residue);
          chain.levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = i + 1; l <= stop; ++l) {
          chain.levels_[l].generators.push_back(residue);
          chain.rebuild_orbit(l);
        }
        pending = stop + 1;
        extended = true;
        break;
      }
    }
    if (!extended) --pending;
  }
  return chain;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& lvl : levels_) b.push_back(lvl.base_point);
  return b;
}

BigInt StabilizerChain::order() const {
  BigInt r = 1;
  for (const auto& lvl : levels_) r *= lvl.orbit.size();
  return r;
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(const Permutation& g,
                                                           std::size_t from) const {
  Permutation h = g;
  for (std::size_t i = from; i < levels_.size(); ++i) {
    Point beta = h[levels_[i].base_point];
    if (!levels_[i].in_orbit(beta)) return {std::move(h), i};
    h = levels_[i].sift_step(h, beta);
  }
  return {std::move(h), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) {
    throw Error(ErrorCode::DegreeMismatch, "element of degree " + std::to_string(g.degree()) +
                                               " vs group degree " + std::to_string(degree_));
  }
  auto [residue, stop] = strip(g);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<Permutation> StabilizerChain::stabilizer_generators(std::size_t i) const {
  if (i < levels_.size() && !levels_[i].generators.empty()) return levels_[i].generators;
  return {Permutation::identity(degree_)};
}

}  // namespace orbitfold
