#include <gtest/gtest.h>

#include "spr/errors.hpp"
#include "spr/feasibility.hpp"
#include "spr/generators.hpp"
#include "spr/reductions.hpp"
#include "spr/stable_search.hpp"
#include "spr/verify.hpp"
#include "test_support.hpp"

namespace spr {
namespace {

using testing::data_instance;
using testing::matching_of;

TEST(StableSearch, Example1HasNone) {
  SearchStats stats;
  EXPECT_FALSE(search_stable(example1_instance(), {}, &stats));
  EXPECT_GT(stats.nodes, 0u);
}

TEST(StableSearch, SingleStudentGetsTheSingletonMatching) {
  const auto inst = data_instance("single_student.json");
  const auto found = search_stable(inst);
  ASSERT_TRUE(found);
  EXPECT_EQ(found->matching, matching_of(inst, {{"s1", "p1"}}));
  EXPECT_TRUE(is_stable(inst, *found));
}

TEST(StableSearch, SingleSubsetCoupleGadgetHasNoStableMatching) {
  // the source is a no-instance, yet the one-subset gadget admits no stable matching;
  // frozen from this search and cross-checked against the exhaustive enumeration below
  const ForallExistsInstance src{14, testing::to_big({3, 3, 4, 4}), {{0, 1}}};
  EXPECT_FALSE(forall_exists_4partition(src).holds);
  const auto g = reduce_fe4partition_to_costable(src);
  EXPECT_FALSE(search_stable(g.instance));
  bool any = false;
  for_each_feasible_matching(g.instance, [&](const FeasiblePair& p) {
    any = is_stable(g.instance, p);
    return !any;
  });
  EXPECT_FALSE(any);
}

TEST(StableSearch, PruningIsSafeOnRandomInstances) {
  int found_count = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto inst = random_instance({}, seed);
    const auto pruned = search_stable(inst);
    SearchOptions plain;
    plain.prune_infeasible = false;
    plain.prune_envy = false;
    const auto unpruned = search_stable(inst, plain);
    ASSERT_EQ(pruned.has_value(), unpruned.has_value()) << "seed " << seed;
    if (pruned) {
      ++found_count;
      EXPECT_TRUE(is_stable(inst, *pruned));
      // lexicographic order makes the first stable matching unique
      EXPECT_EQ(pruned->matching, unpruned->matching) << "seed " << seed;
    }
  }
  EXPECT_GT(found_count, 0);
}

TEST(StableSearch, AgreesWithExhaustiveOracle) {
  for (std::uint64_t seed = 1000; seed < 1200; ++seed) {
    const auto inst = random_instance({}, seed);
    bool oracle = false;
    for (const auto& p : enumerate_feasible_matchings(inst)) {
      if (is_stable(inst, p)) {
        oracle = true;
        break;
      }
    }
    EXPECT_EQ(search_stable(inst).has_value(), oracle) << "seed " << seed;
  }
}

TEST(StableSearch, BudgetIsEnforced) {
  SearchOptions options;
  options.budget.max_matchings = 1;
  EXPECT_THROW(search_stable(example1_instance(), options), BudgetExceeded);
}

TEST(Enumerate, Example1HasFiveFeasibleMatchings) {
  const auto inst = example1_instance();
  const auto all = enumerate_feasible_matchings(inst);
  ASSERT_EQ(all.size(), 5u);
  EXPECT_EQ(all.back().matching.matched_count(), 0u);
  for (const auto& p : all) EXPECT_TRUE(is_feasible_pair(inst, p.matching, p.allocation));
}

TEST(Enumerate, NoResourcesLeavesOnlyEmptyMatching) {
  auto raw = example1_instance().to_raw();
  raw.resources.clear();
  const auto all = enumerate_feasible_matchings(make_instance(raw));
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].matching.matched_count(), 0u);
}

TEST(Enumerate, PartitionGadgetCountMatchesSubsetOracle) {
  const auto g = reduce_pareto_partition_to_nw_find({{5, 5}, 2, 5});
  const auto& inst = g.instance;
  const std::size_t n = inst.num_students();
  ASSERT_LE(n, 16u);
  // every student has a single acceptable project, so matchings are student subsets
  std::size_t oracle = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Matching y(n);
    for (StudentIx s = 0; s < n; ++s) {
      if (mask >> s & 1) y.assign(s, inst.student_prefs(s)[0]);
    }
    oracle += feasible_allocation_bruteforce(inst, required_capacity(inst, y)).has_value();
  }
  EXPECT_EQ(enumerate_feasible_matchings(inst).size(), oracle);
  EXPECT_EQ(oracle, 1024u);
}

TEST(Enumerate, EarlyStopIsHonoured) {
  std::size_t seen = 0;
  for_each_feasible_matching(example1_instance(), [&](const FeasiblePair&) { return ++seen < 2; });
  EXPECT_EQ(seen, 2u);
}

}  // namespace
}  // namespace spr
