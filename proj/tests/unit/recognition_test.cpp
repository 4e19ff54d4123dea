#include <gtest/gtest.h>

#include "error_code.hpp"
#include "oracles.hpp"
#include "orbitfold/mathieu.hpp"
#include "orbitfold/recognition.hpp"

using namespace orbitfold;
using oracle::error_code;

namespace {

const PermutationGroup& m12() {
  static const PermutationGroup g = load_validated_group(Ambient::M12);
  return g;
}

std::vector<oracle::GraphFacts> reported(const RigidityLevel& level) {
  std::vector<oracle::GraphFacts> out;
  for (const auto& g : level.graphs) {
    if (g.self_paired) out.push_back({g.valency, g.srg});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Recognize, M12) {
  auto r = recognize_degree12(m12());
  EXPECT_EQ(r.verdict, "M12");
  EXPECT_TRUE(r.is_m12());
  EXPECT_TRUE(r.primitive);
  ASSERT_EQ(r.witnesses.size(), 3u);
  EXPECT_EQ(*r.witnesses[0].computed_shape, (Shape{11, 1}));
  EXPECT_EQ(*r.witnesses[1].computed_shape, (Shape{8, 4}));
  EXPECT_EQ(*r.witnesses[1].computed_order, 192);
  EXPECT_EQ(*r.witnesses[2].computed_shape, (Shape{6, 6}));
  EXPECT_TRUE(r.tetrad_proxy);
  EXPECT_TRUE(r.hexad_proxy);
  EXPECT_EQ(r.point_stabilizer_3set_orbits, 2u);
}

TEST(Recognize, Impostors) {
  auto sym = recognize_degree12(symmetric_group(12));
  EXPECT_EQ(sym.verdict, "not-M12");
  EXPECT_TRUE(sym.has_odd_permutation);
  EXPECT_EQ(*sym.witnesses[1].computed_shape, (Shape{8, 4}));
  EXPECT_FALSE(sym.hexad_proxy);

  auto alt = recognize_degree12(alternating_group(12));
  EXPECT_EQ(alt.verdict, "not-M12");
  EXPECT_FALSE(alt.hexad_proxy);

  for (bool extended : {false, true}) {
    auto r = recognize_degree12(projective_linear_group(11, extended));
    EXPECT_EQ(r.verdict, "not-M12");
    EXPECT_TRUE(r.primitive);
    EXPECT_GE(r.point_stabilizer_3set_orbits, 3u);
  }
}

TEST(Recognize, Candidates) {
  auto r = recognize_degree12(m12());
  std::vector<std::string> consistent;
  for (const auto& c : r.candidates) {
    if (c.consistent) consistent.push_back(c.name);
  }
  EXPECT_EQ(consistent, (std::vector<std::string>{"M12"}));
}

TEST(Recognize, Errors) {
  EXPECT_EQ(error_code([] { recognize_degree12(symmetric_group(11)); }), ErrorCode::BadDegree);
  auto imprimitive = recognize_degree12(PermutationGroup(
      12, {parse_permutation("(1,2,3,4,5,6,7,8,9,10,11,12)", 12)}));
  EXPECT_FALSE(imprimitive.primitive);
  EXPECT_EQ(imprimitive.verdict, "not-M12");
}

TEST(Rigidity, M12TwoSubsets) {
  auto r = steiner_rigidity_check(m12(), 0);
  ASSERT_EQ(r.levels.size(), 3u);
  const auto& two = r.levels[0];
  EXPECT_EQ(two.k, 2u);
  EXPECT_EQ(two.orbit_count, 2u);
  EXPECT_EQ(two.avoiding_orbit_size, 55u);
  EXPECT_EQ(two.rank, 3u);
  EXPECT_EQ(reported(two), oracle::orbital_graphs(m12(), 0, 2));
  std::vector<std::size_t> valencies;
  for (const auto& g : two.graphs) {
    ASSERT_TRUE(g.srg.has_value());
    valencies.push_back(g.valency);
  }
  std::sort(valencies.begin(), valencies.end());
  EXPECT_EQ(valencies, (std::vector<std::size_t>{18, 36}));
  EXPECT_TRUE(two.pass);
}

TEST(Rigidity, M12LargerSubsets) {
  auto r = steiner_rigidity_check(m12(), 0);
  for (std::size_t i = 1; i < 3; ++i) {
    const auto& level = r.levels[i];
    EXPECT_EQ(level.orbit_count, 2u);
    EXPECT_EQ(level.avoiding_orbit_size, binomial(11, level.k));
    EXPECT_EQ(reported(level), oracle::orbital_graphs(m12(), 0, level.k)) << level.k;
  }
}

TEST(Rigidity, Sym12) {
  auto r = steiner_rigidity_check(symmetric_group(12), 0);
  EXPECT_EQ(r.levels[0].orbit_count, 2u);
  EXPECT_EQ(r.levels[0].rank, 3u);
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(error_code([] {
              steiner_rigidity_check(PermutationGroup(12, {parse_permutation("(1,2)", 12)}), 0);
            }),
            ErrorCode::NotTransitive);
  EXPECT_EQ(error_code([] { steiner_rigidity_check(symmetric_group(10), 0); }),
            ErrorCode::BadDegree);
}
