#include "primnorm/small_norm.hpp"

#include <gtest/gtest.h>

#include "primnorm/errors.hpp"
#include "primnorm/oracle.hpp"
#include "test_support.hpp"

using namespace primnorm;
using primnorm::testing::load;

TEST(Bounds, GeneratingSetAndBaseBounds) {
  EXPECT_EQ(generating_set_bound(2), 2u);
  EXPECT_EQ(generating_set_bound(8), 4u);
  EXPECT_EQ(generating_set_bound(31), 5u);
  EXPECT_EQ(base_size_bound(8), 32u);
  EXPECT_EQ(base_size_bound(32), 36u);
}

TEST(GeneratingSet, GeneratesAndMeetsTheBound) {
  for (const char* id : {"psl2_07", "agl3_2", "m11", "s08", "c13", "pgaml2_09"}) {
    const Group g = load(id).group();
    const auto x = small_generating_set(g);
    EXPECT_LE(x.size(), generating_set_bound(g.degree())) << id;
    EXPECT_TRUE(same_group(Group(g.degree(), x), g)) << id;
  }
}

TEST(Base, PointwiseStabiliserIsTrivial) {
  for (const char* id : {"psl2_07", "agl4_2", "m12", "psl3_3"}) {
    const Group g = load(id).group();
    const auto b = small_base(g);
    EXPECT_LE(b.size(), base_size_bound(g.degree())) << id;
    EXPECT_TRUE(pointwise_stabiliser(g, b).is_trivial()) << id;
    EXPECT_TRUE(pointwise_stabiliser(g, greedy_base(g)).is_trivial()) << id;
  }
}

TEST(Backtrack, KnownNormalisers) {
  EXPECT_EQ(normaliser_small(load("c07").group()).normaliser.order(), 42);
  EXPECT_EQ(normaliser_small(load("d10").group()).normaliser.order(), 20);
  EXPECT_EQ(normaliser_small(load("psl2_07").group()).normaliser.order(), 336);
  EXPECT_EQ(normaliser_small(load("agl3_2").group()).normaliser.order(), 1344);
  EXPECT_EQ(normaliser_small(load("f21").group()).normaliser.order(), 42);
}

namespace {

struct Switches {
  bool cycle_type, injectivity, early, orbit, coset;
};

class PruneSwitches : public ::testing::TestWithParam<Switches> {};

}  // namespace

TEST_P(PruneSwitches, AgreeWithBruteForce) {
  const auto s = GetParam();
  BacktrackOptions opts;
  opts.prune_cycle_type = s.cycle_type;
  opts.prune_injectivity = s.injectivity;
  opts.prune_early_resolution = s.early;
  opts.orbit_reduction = s.orbit;
  opts.prune_coset_minimality = s.coset;
  for (const char* id : {"c05", "d10", "c07", "psl2_07", "agl1_08_scr", "a06"}) {
    const Group g = load(id).group();
    const auto r = normaliser_small(g, opts);
    EXPECT_TRUE(same_group(r.normaliser, brute_force_normaliser(g, g.degree()))) << id;
  }
}

INSTANTIATE_TEST_SUITE_P(AllCombinations, PruneSwitches,
                         ::testing::Values(Switches{true, true, true, true, true}, Switches{false, false, false, false, false},
                                           Switches{true, false, false, false, false},
                                           Switches{false, true, false, false, false},
                                           Switches{false, false, true, false, false},
                                           Switches{false, false, false, true, false},
                                           Switches{false, false, false, false, true},
                                           Switches{true, true, false, true, true},
                                           Switches{false, true, true, false, true}));

TEST(Backtrack, AcceptedElementsNormalise) {
  const Group g = load("psl2_07").group();
  BacktrackOptions opts;
  opts.record_accepted = true;
  opts.orbit_reduction = false;
  opts.prune_coset_minimality = false;
  const auto r = normaliser_small(g, opts);
  EXPECT_EQ(r.accepted.size(), 336u);
  EXPECT_EQ(r.stats.accepted, 336u);
  for (const auto& s : r.accepted) EXPECT_TRUE(normalises(std::span(&s, 1), g));
}

TEST(Backtrack, ThreadsGiveTheSameGroup) {
  const Group g = load("agl3_2").group();
  BacktrackOptions one, many;
  many.threads = 3;
  EXPECT_TRUE(same_group(normaliser_small(g, one).normaliser, normaliser_small(g, many).normaliser));
}

TEST(Backtrack, NodeBudgetIsEnforced) {
  BacktrackOptions opts;
  opts.node_budget = 10;
  EXPECT_THROW(normaliser_small(load("a07").group(), opts), BudgetExceeded);
}

TEST(Backtrack, ExplicitGeneratorsAndBase) {
  const Group g = load("psl2_07").group();
  const auto base = greedy_base(g);
  const auto r = normaliser_backtrack(g, g.generators(), base);
  EXPECT_EQ(r.normaliser.order(), 336);
  EXPECT_GT(r.stats.nodes, 0u);
}
