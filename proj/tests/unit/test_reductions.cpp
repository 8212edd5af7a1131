#include <gtest/gtest.h>

#include "spr/errors.hpp"
#include "spr/feasibility.hpp"
#include "spr/partition.hpp"
#include "spr/reductions.hpp"
#include "spr/stable_search.hpp"
#include "spr/verify.hpp"
#include "test_support.hpp"

namespace spr {
namespace {

using testing::to_big;

TEST(FaReduction, SingleProjectOfFourUnitResources) {
  const auto g = reduce_4partition_to_fa({{1, 1, 1, 1}, 4});
  EXPECT_EQ(g.instance.num_projects(), 1u);
  EXPECT_EQ(g.instance.num_students(), 4u);
  EXPECT_EQ(g.instance.num_resources(), 4u);
  EXPECT_EQ(g.matching.matched_count(), 4u);
  EXPECT_EQ(required_capacity(g.instance, g.matching), (SeatVector{4}));
  EXPECT_EQ(solve_fa(g), Verdict::yes);
}

TEST(FaReduction, TwoSubsetYesInstance) {
  const auto g = reduce_4partition_to_fa({{3, 3, 4, 4, 3, 3, 4, 4}, 14});
  EXPECT_EQ(required_capacity(g.instance, g.matching), (SeatVector{14, 14}));
  EXPECT_TRUE(feasible_allocation_bruteforce(g.instance, SeatVector{14, 14}));
  EXPECT_EQ(solve_fa(g), Verdict::yes);
}

TEST(FaReduction, WindowViolationIsRejected) {
  EXPECT_THROW(reduce_4partition_to_fa({{3, 3, 3, 5, 3, 3, 3, 5}, 14}), InvalidInstance);
  EXPECT_THROW(reduce_4partition_to_fa({{4, 4, 4}, 12}), InvalidInstance);
  EXPECT_THROW(reduce_4partition_to_fa({{3, 3, 4, 4}, 15}), InvalidInstance);
}

TEST(FaReduction, DecodeMapsWitnessToVerdict) {
  EXPECT_EQ(decode_fa(std::nullopt), Verdict::no);
  EXPECT_EQ(decode_fa(Allocation{}), Verdict::yes);
}

TEST(NwVerifReduction, LayoutCounts) {
  const auto g = reduce_4partition_to_nw_verif({{1, 1, 1, 1}, 4});
  const std::size_t m = 1, theta = 4;
  EXPECT_EQ(g.instance.num_projects(), m + 2);
  EXPECT_EQ(g.instance.num_resources(), 4 * m + m + 1);
  EXPECT_EQ(acceptable_contracts(g.instance).size(), theta * m + m * theta + (m * theta + m));
}

TEST(NwVerifReduction, YesInstanceProducesClaim) {
  const auto g = reduce_4partition_to_nw_verif({{1, 1, 1, 1}, 4});
  EXPECT_EQ(solve_nw_verif(g), Verdict::yes);
  // s* heads p_{m+2}'s list here, so the given pair is not fair
  EXPECT_FALSE(is_fair(g.instance, g.pair));
}

TEST(NwVerifReduction, NoInstanceProducesNoClaim) {
  const FourPartitionInstance src{{4, 4, 4, 4, 4, 6, 6, 6}, 19};
  ASSERT_FALSE(four_partition_bruteforce(src));
  Budget budget;
  budget.max_dp_states = 20'000'000;
  const auto g = reduce_4partition_to_nw_verif(src, false, budget);
  EXPECT_EQ(solve_nw_verif(g, budget), Verdict::no);
}

TEST(NwVerifReduction, StableVerifOrderKeepsPairFeasible) {
  const auto g = reduce_4partition_to_nw_verif({{1, 1, 1, 1}, 4}, true);
  EXPECT_TRUE(is_feasible_pair(g.instance, g.pair.matching, g.pair.allocation));
  EXPECT_EQ(g.instance.project_prefs(g.claim_project).back(), g.s_star);
  EXPECT_TRUE(is_fair(g.instance, g.pair));
  EXPECT_EQ(solve_nw_verif(g), Verdict::yes);
}

TEST(ParetoReduction, SingleTriplet) {
  const Max3dmInstance src{1, {{0, 0, 0}}, {1}};
  const auto g = reduce_max3dm_to_pareto_partition(src);
  EXPECT_TRUE(audit_no_carry(g.table));
  EXPECT_TRUE(audit_column_balance(g.table, g.instance.subsets, {0}));
  const auto best = leximax_pareto_partition(g.instance);
  Budget wide;
  wide.max_assignments = 100'000'000;
  EXPECT_TRUE(is_pareto_efficient_partition(g.instance, best.partition, wide));
  EXPECT_EQ(decode_pareto_partition(g, best.deficits), BigInt(1));
  EXPECT_EQ(max3dm_bruteforce(src), 1);
}

TEST(ParetoReduction, DuplicateTripletsKeepOptimumOne) {
  const Max3dmInstance src{1, {{0, 0, 0}, {0, 0, 0}}, {1, 1}};
  EXPECT_EQ(max3dm_bruteforce(src), 1);
  const auto g = reduce_max3dm_to_pareto_partition(src);
  EXPECT_EQ(decode_pareto_partition(g, leximax_pareto_partition(g.instance).deficits), BigInt(1));
}

TEST(ParetoReduction, InvalidSourcesAreRejected) {
  EXPECT_THROW(reduce_max3dm_to_pareto_partition({1, {}, {}}), InvalidInstance);
  EXPECT_THROW(reduce_max3dm_to_pareto_partition({2, {{0, 0, 0}}, {1}}), InvalidInstance);
  EXPECT_THROW(reduce_max3dm_to_pareto_partition({1, {{0, 0, 0}}, {-1}}), InvalidInstance);
}

TEST(NwFindReduction, PerfectSplit) {
  const PartitionInstance src{{5, 5}, 2, 5};
  const auto g = reduce_pareto_partition_to_nw_find(src);
  const auto part = solve_nw_find(g);
  ASSERT_TRUE(part);
  EXPECT_EQ(deficit_vector(src, *part), (DeficitVector{0, 0}));
}

TEST(NwFindReduction, ImperfectSplitIsParetoEfficient) {
  const PartitionInstance src{{3, 3}, 2, 5};
  const auto part = solve_nw_find(reduce_pareto_partition_to_nw_find(src));
  ASSERT_TRUE(part);
  EXPECT_TRUE(is_pareto_efficient_partition(src, *part));
}

TEST(NwFindReduction, StudentBudget) {
  Budget tiny;
  tiny.max_students = 5;
  EXPECT_THROW(reduce_pareto_partition_to_nw_find({{5, 5}, 2, 5}, tiny), BudgetExceeded);
}

TEST(ForallExistsReduction, UniversalOnlyIsNo) {
  const ForallExists3dmInstance src{1, {{0, 0, 0}}, {}};
  EXPECT_FALSE(forall_exists_3dm_bruteforce(src));
  const auto g = reduce_fe3dm_to_fe4partition(src);
  EXPECT_TRUE(audit_no_carry(g.table));
  EXPECT_EQ(solve_fe4partition(g), Verdict::no);
  EXPECT_EQ(forall_exists_4partition_bruteforce(g.instance), false);
}

TEST(ForallExistsReduction, ExistentialOnlyIsYes) {
  const ForallExists3dmInstance src{1, {}, {{0, 0, 0}}};
  EXPECT_TRUE(forall_exists_3dm_bruteforce(src));
  const auto g = reduce_fe3dm_to_fe4partition(src);
  EXPECT_TRUE(g.instance.couples.empty());
  EXPECT_EQ(solve_fe4partition(g), Verdict::yes);
}

TEST(ForallExistsReduction, BaseIsAtLeastNominal) {
  const ForallExists3dmInstance src{2, {{0, 0, 0}}, {{1, 1, 1}, {0, 1, 1}}};
  const auto g = reduce_fe3dm_to_fe4partition(src);
  EXPECT_GE(g.table.base, g.nominal_base);
  EXPECT_NO_THROW(validate(g.instance));
  EXPECT_EQ(solve_fe4partition(g) == Verdict::yes, forall_exists_3dm_bruteforce(src));
}

TEST(ForallExistsReduction, SharedUniversalAElementIsRejected) {
  EXPECT_THROW(reduce_fe3dm_to_fe4partition({2, {{0, 0, 0}, {0, 1, 1}}, {{1, 1, 1}}}), InvalidInstance);
}

TEST(CoStableReduction, SolvableWithoutCouplesHasNoStableMatching) {
  const ForallExistsInstance src{14, to_big({3, 3, 4, 4, 3, 3, 4, 4}), {}};
  EXPECT_TRUE(forall_exists_4partition(src).holds);
  EXPECT_EQ(solve_costable(reduce_fe4partition_to_costable(src)), Verdict::yes);
}

TEST(CoStableReduction, SingleSubsetNoInstanceStillDecodesYes) {
  // one subset leaves the couple gadget without a second project to escape to
  const ForallExistsInstance src{14, to_big({3, 3, 4, 4}), {{0, 1}}};
  EXPECT_FALSE(forall_exists_4partition(src).holds);
  EXPECT_EQ(solve_costable(reduce_fe4partition_to_costable(src)), Verdict::yes);
}

TEST(CoStableReduction, TwoSubsetNoInstanceHasStableMatching) {
  const ForallExistsInstance src{19, to_big({4, 4, 4, 4, 4, 6, 6, 6}), {}};
  ASSERT_FALSE(forall_exists_4partition(src).holds);
  SearchOptions options;
  options.budget.max_dp_states = 20'000'000;
  options.budget.max_matchings = 100'000'000;
  EXPECT_EQ(solve_costable(reduce_fe4partition_to_costable(src), options), Verdict::no);
}

TEST(CoStableReduction, DecodeMapsSearchOutcome) {
  EXPECT_EQ(decode_costable(std::nullopt), Verdict::undecided);
  EXPECT_EQ(decode_costable(std::optional<FeasiblePair>{}), Verdict::yes);
  EXPECT_EQ(decode_costable(FeasiblePair{}), Verdict::no);
}

TEST(CoStableReduction, RequiresExactTotal) {
  EXPECT_THROW(reduce_fe4partition_to_costable({15, to_big({3, 3, 4, 4}), {}}), InvalidInstance);
}

TEST(Oracles, FourPartitionBruteforce) {
  EXPECT_TRUE(four_partition_bruteforce({{3, 3, 4, 4, 3, 3, 4, 4}, 14}));
  EXPECT_FALSE(four_partition_bruteforce({{4, 4, 4, 4, 4, 6, 6, 6}, 19}));
}

}  // namespace
}  // namespace spr
