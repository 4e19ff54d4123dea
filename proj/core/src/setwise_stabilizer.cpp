#include "orbitfold/error.hpp"
#include "orbitfold/group.hpp"

namespace orbitfold {

namespace {

class SetwiseSearch {
 public:
  SetwiseSearch(const PermutationGroup& g, const PointSet& s, const SetwiseSearchOptions& options,
                SetwiseSearchStats& stats)
      : s_(s), budget_(options.node_budget), stats_(stats), members_(s.members()),
        chain_(build_chain(g, members_)) {
    // Transversal elements for the levels that carry points of S.
    for (std::size_t i = 0; i < members_.size(); ++i) {
      const auto& lvl = chain_.level(i);
      std::vector<Permutation> reps;
      reps.reserve(lvl.orbit.size());
      for (Point beta : lvl.orbit) reps.push_back(lvl.transversal(beta));
      transversals_.push_back(std::move(reps));
    }
    found_ = chain_.stabilizer_generators(members_.size());
    found_chain_ = StabilizerChain::build(g.degree(), found_);
  }

  std::vector<Permutation> run() {
    descend(0, Permutation::identity(chain_.degree()));
    return found_;
  }

 private:
  // h maps base[0..depth-1] into S; extend one level at a time.
  void descend(std::size_t depth, const Permutation& h) {
    if (++stats_.nodes > budget_) {
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "setwise stabilizer search exceeded " + std::to_string(budget_) + " nodes");
    }
    if (depth == members_.size()) {
      ++stats_.leaves;
      if (!found_chain_.contains(h)) {
        found_.push_back(h);
        found_chain_ = StabilizerChain::build(chain_.degree(), found_);
      }
      return;
    }
    const auto& lvl = chain_.level(depth);
    for (std::size_t j = 0; j < lvl.orbit.size(); ++j) {
      if (!s_.contains(h[lvl.orbit[j]])) continue;
      descend(depth + 1, compose(transversals_[depth][j], h));
    }
  }

  const PointSet& s_;
  std::uint64_t budget_;
  SetwiseSearchStats& stats_;
  std::vector<Point> members_;
  StabilizerChain chain_;
  std::vector<std::vector<Permutation>> transversals_;
  std::vector<Permutation> found_;
  StabilizerChain found_chain_ = StabilizerChain::build(1, {});
};

}  // namespace

PermutationGroup setwise_stabilizer(const PermutationGroup& g, const PointSet& s,
                                    const SetwiseSearchOptions& options,
                                    SetwiseSearchStats* stats) {
  if (s.degree() != g.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "set degree " + std::to_string(s.degree()) +
                                               " vs group degree " + std::to_string(g.degree()));
  }
  SetwiseSearchStats local;
  SetwiseSearchStats& st = stats ? *stats : local;
  st = {};
  if (s.empty() || s.size() == g.degree()) return g;
  SetwiseSearch search(g, s, options, st);
  std::vector<Permutation> gens = search.run();
  std::erase_if(gens, [](const Permutation& p) { return p.is_identity(); });
  return PermutationGroup(g.degree(), std::move(gens));
}

}  // namespace orbitfold
