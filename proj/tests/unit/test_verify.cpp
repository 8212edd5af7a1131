#include <gtest/gtest.h>

#include "spr/errors.hpp"
#include "spr/generators.hpp"
#include "spr/mechanisms.hpp"
#include "spr/reductions.hpp"
#include "spr/verify.hpp"
#include "test_support.hpp"

namespace spr {
namespace {

using testing::data_instance;
using testing::matching_of;

TEST(ClaimingPair, Example1AcdaOutput) {
  const auto inst = example1_instance();
  const FeasiblePair pair{matching_of(inst, {{"s_b", "p_a"}}), Allocation{{0}}};
  const auto c = find_claiming_pair(inst, pair);
  ASSERT_TRUE(c);
  EXPECT_EQ(inst.student_id(c->student), "s_b");
  EXPECT_EQ(inst.project_id(c->project), "p_b");
  EXPECT_EQ(c->witness.placement, (std::vector<ProjectIx>{1}));
  EXPECT_EQ(count_claiming_pairs(inst, pair), 1u);
}

TEST(ClaimingPair, EveryoneAtTopChoiceHasNone) {
  const auto inst = data_instance("swap.json");
  const FeasiblePair pair{matching_of(inst, {{"s1", "p1"}, {"s2", "p2"}}), Allocation{{0, 1}}};
  EXPECT_FALSE(find_claiming_pair(inst, pair));
  EXPECT_TRUE(is_stable(inst, pair));
}

TEST(ClaimingPair, ClaimGadgetYesInstanceClaimsForSStar) {
  const auto g = reduce_4partition_to_nw_verif({{1, 1, 1, 1}, 4});
  const auto c = find_claiming_pair(g.instance, g.pair);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->student, g.s_star);
  EXPECT_EQ(c->project, g.claim_project);
  EXPECT_EQ(g.instance.project_id(c->project), "p_3");
}

TEST(ClaimingPair, InfeasibleInputIsRejected) {
  const auto inst = example1_instance();
  const FeasiblePair pair{matching_of(inst, {{"s_a", "p_b"}}), Allocation{{0}}};
  EXPECT_THROW(find_claiming_pair(inst, pair), ContractViolation);
  EXPECT_THROW(find_envious_pair(inst, pair), ContractViolation);
}

TEST(EnviousPair, EmptyProjectCannotBeEnvied) {
  const auto inst = example1_instance();
  const FeasiblePair pair{matching_of(inst, {{"s_b", "p_a"}}), Allocation{{0}}};
  EXPECT_FALSE(find_envious_pair(inst, pair));
}

TEST(EnviousPair, CrossedAssignmentWithTwoResourcesHasNone) {
  auto raw = example1_instance().to_raw();
  raw.resources.push_back({"r2", 1, {"p_b"}});
  const auto inst = make_instance(raw);
  const FeasiblePair pair{matching_of(inst, {{"s_a", "p_b"}, {"s_b", "p_a"}}), Allocation{{0, 1}}};
  EXPECT_FALSE(find_envious_pair(inst, pair));
  EXPECT_EQ(count_envious_pairs(inst, pair), 0u);
}

TEST(EnviousPair, TopStudentLeftOutIsReported) {
  RawInstance raw;
  raw.students = {{"s1", {"p"}}, {"s2", {"p"}}, {"s3", {"p"}}};
  raw.projects = {{"p", {"s1", "s2", "s3"}}};
  raw.resources = {{"r", 1, {"p"}}};
  const auto inst = make_instance(raw);
  const FeasiblePair pair{matching_of(inst, {{"s3", "p"}}), Allocation{{0}}};
  const auto e = find_envious_pair(inst, pair);
  ASSERT_TRUE(e);
  EXPECT_EQ(*e, (EnviousPair{0, 0, 2}));
  EXPECT_EQ(count_envious_pairs(inst, pair), 2u);
}

TEST(Properties, SdOnExample1IsNonwastefulButUnfair) {
  const auto inst = example1_instance();
  const FeasiblePair pair{matching_of(inst, {{"s_a", "p_a"}}), Allocation{{0}}};
  EXPECT_TRUE(is_nonwasteful(inst, pair));
  EXPECT_FALSE(is_fair(inst, pair));
  EXPECT_FALSE(is_stable(inst, pair));
  const auto e = find_envious_pair(inst, pair);
  ASSERT_TRUE(e);
  EXPECT_EQ(*e, (EnviousPair{1, 0, 0}));
}

TEST(Properties, AcdaOnExample1IsFairButWasteful) {
  const auto inst = example1_instance();
  const FeasiblePair pair{matching_of(inst, {{"s_b", "p_a"}}), Allocation{{0}}};
  EXPECT_TRUE(is_fair(inst, pair));
  EXPECT_FALSE(is_nonwasteful(inst, pair));
  EXPECT_FALSE(is_stable(inst, pair));
}

TEST(Properties, SaturatedSingleContractIsStable) {
  const auto inst = data_instance("single_student.json");
  const FeasiblePair pair{matching_of(inst, {{"s1", "p1"}}), Allocation{{0}}};
  EXPECT_TRUE(is_stable(inst, pair));
  EXPECT_TRUE(is_pareto_efficient_bruteforce(inst, pair));
}

TEST(ParetoDominates, Basics) {
  const auto inst = example1_instance();
  const auto pa = matching_of(inst, {{"s_a", "p_a"}});
  const auto pb = matching_of(inst, {{"s_a", "p_b"}});
  EXPECT_FALSE(pareto_dominates(inst, pa, pa));
  EXPECT_TRUE(pareto_dominates(inst, pa, Matching(2)));
  EXPECT_FALSE(pareto_dominates(inst, pb, pa));
  EXPECT_TRUE(pareto_dominates(inst, pa, pb));
}

TEST(ParetoEfficiency, AcdaOnExample1IsDominated) {
  const auto inst = example1_instance();
  const FeasiblePair pair{matching_of(inst, {{"s_b", "p_a"}}), Allocation{{0}}};
  EXPECT_FALSE(is_pareto_efficient_bruteforce(inst, pair));
}

TEST(ParetoEfficiency, EmptyInstanceIsEfficient) {
  const auto inst = make_instance(RawInstance{});
  EXPECT_TRUE(is_pareto_efficient_bruteforce(inst, FeasiblePair{Matching(0), Allocation{}}));
}

TEST(ParetoEfficiency, NonwastefulDoesNotImplyPareto) {
  const auto inst = data_instance("swap.json");
  const FeasiblePair pair{matching_of(inst, {{"s1", "p2"}, {"s2", "p1"}}), Allocation{{0, 1}}};
  EXPECT_TRUE(is_nonwasteful(inst, pair));
  EXPECT_FALSE(is_pareto_efficient_bruteforce(inst, pair));
}

TEST(ParetoEfficiency, SdOutputOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto inst = random_instance({}, seed);
    const auto out = serial_dictatorship(inst, random_order(inst, seed));
    EXPECT_TRUE(is_nonwasteful(inst, out)) << "seed " << seed;
    EXPECT_TRUE(is_pareto_efficient_bruteforce(inst, out)) << "seed " << seed;
  }
}

TEST(ParetoEfficiency, BudgetIsEnforced) {
  const auto inst = random_instance({}, 3);
  const auto out = serial_dictatorship(inst);
  Budget tiny;
  tiny.max_matchings = 0;
  if (inst.num_students() > 0) {
    EXPECT_THROW(is_pareto_efficient_bruteforce(inst, FeasiblePair{Matching(inst.num_students()), out.allocation}, tiny),
                 BudgetExceeded);
  }
}

}  // namespace
}  // namespace spr
