#include <gtest/gtest.h>

#include <random>

#include "spr/errors.hpp"
#include "spr/partition.hpp"
#include "test_support.hpp"

namespace spr {
namespace {

using testing::to_big;

PartitionInstance pinst(std::vector<Seats> w, std::size_t m, Seats theta) { return {to_big(w), m, theta}; }

DeficitVector dv(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

TEST(Deficit, DirectArithmetic) {
  EXPECT_EQ(deficit_vector(pinst({5, 5}, 2, 5), {{0}, {1}}), dv({0, 0}));
  EXPECT_EQ(deficit_vector(pinst({3, 3}, 2, 5), {{0}, {1}}), dv({-2, -2}));
  EXPECT_EQ(deficit_vector(pinst({3, 3}, 2, 5), {{0, 1}, {}}), dv({0, -5}));
}

TEST(Deficit, MalformedPartitionIsRejected) {
  const auto inst = pinst({3, 3}, 2, 5);
  EXPECT_THROW(deficit_vector(inst, {{0}, {0}}), ContractViolation);
  EXPECT_THROW(deficit_vector(inst, {{0}}), ContractViolation);
  EXPECT_THROW(deficit_vector(inst, {{0}, {}}), ContractViolation);
}

TEST(Leximax, SpecimenInstances) {
  EXPECT_EQ(leximax_pareto_partition(pinst({5, 5}, 2, 5)).deficits, dv({0, 0}));
  EXPECT_EQ(leximax_pareto_partition(pinst({1, 1, 1, 1}, 1, 4)).deficits, dv({0}));
}

TEST(Leximax, FirstSubsetIsMaximisedFirst) {
  // coordinates are fixed in subset order, so the first subset reaches 0 at the
  // expense of the second; (-2,-2) is Pareto efficient too but not what this order picks
  const auto inst = pinst({3, 3}, 2, 5);
  const auto result = leximax_pareto_partition(inst);
  EXPECT_EQ(result.deficits, dv({0, -5}));
  EXPECT_TRUE(is_pareto_efficient_partition(inst, result.partition));
  EXPECT_TRUE(is_pareto_efficient_partition(inst, {{0}, {1}}));
}

TEST(Leximax, DeficitsMatchReturnedPartition) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 7)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::vector<Seats> w(n);
    for (auto& x : w) x = std::uniform_int_distribution<Seats>(1, 9)(rng);
    const auto inst = pinst(w, m, std::uniform_int_distribution<Seats>(1, 20)(rng));
    const auto result = leximax_pareto_partition(inst);
    EXPECT_EQ(deficit_vector(inst, result.partition), result.deficits);
    EXPECT_TRUE(is_pareto_efficient_partition(inst, result.partition)) << "trial " << trial;
  }
}

TEST(Leximax, WideIntegersTakeTheSameShape) {
  // 2^61 forces the 128-bit kernel, 2^100 the arbitrary precision one
  for (BigInt unit : {BigInt(1) << 61, BigInt(1) << 100}) {
    const PartitionInstance inst{{3 * unit, 3 * unit}, 2, 5 * unit};
    EXPECT_EQ(leximax_pareto_partition(inst).deficits, (DeficitVector{0, -5 * unit}));
    const PartitionInstance exact{{5 * unit, 5 * unit, 2 * unit, 3 * unit}, 2, 5 * unit};
    EXPECT_EQ(leximax_pareto_partition(exact).deficits, (DeficitVector{0, 0}));
  }
}

TEST(LowerBoundDecider, VacuousBoundsPutEverythingFirst) {
  const auto inst = pinst({3, 3, 2}, 3, 5);
  const auto p = lower_bound_decider(inst, to_big({-5, -5, -5}));
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, (Partition{{0, 1, 2}, {}, {}}));
}

TEST(LowerBoundDecider, ForcedGroupingAndInfeasibleBounds) {
  const auto inst = pinst({3, 3}, 2, 5);
  const auto p = lower_bound_decider(inst, to_big({0, -5}));
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, (Partition{{0, 1}, {}}));
  EXPECT_FALSE(lower_bound_decider(inst, to_big({0, -1})));
}

TEST(LowerBoundDecider, AgreesWithExhaustiveAssignment) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::vector<Seats> w(n);
    for (auto& x : w) x = std::uniform_int_distribution<Seats>(1, 8)(rng);
    const Seats theta = std::uniform_int_distribution<Seats>(1, 12)(rng);
    const auto inst = pinst(w, m, theta);
    std::vector<BigInt> bounds(m);
    for (auto& b : bounds) b = -std::uniform_int_distribution<Seats>(0, theta)(rng);

    bool oracle = false;
    std::vector<std::size_t> digit(n, 0);
    for (;;) {
      Partition part(m);
      for (std::size_t i = 0; i < n; ++i) part[digit[i]].push_back(i);
      const auto d = deficit_vector(inst, part);
      bool ok = true;
      for (std::size_t j = 0; j < m; ++j) ok = ok && d[j] >= bounds[j];
      if (ok) {
        oracle = true;
        break;
      }
      std::size_t i = 0;
      while (i < n && ++digit[i] == m) digit[i++] = 0;
      if (i == n) break;
    }
    const auto got = lower_bound_decider(inst, bounds);
    ASSERT_EQ(got.has_value(), oracle) << "trial " << trial;
    if (got) {
      const auto d = deficit_vector(inst, *got);
      for (std::size_t j = 0; j < m; ++j) EXPECT_GE(d[j], bounds[j]);
    }
  }
}

TEST(ParetoPartition, SpecimenChecks) {
  EXPECT_TRUE(is_pareto_efficient_partition(pinst({3, 3}, 2, 5), {{0}, {1}}));
  EXPECT_FALSE(is_pareto_efficient_partition(pinst({5, 5}, 2, 5), {{0, 1}, {}}));
  EXPECT_TRUE(is_pareto_efficient_partition(pinst({1, 2, 3}, 1, 4), {{0, 1, 2}}));
  EXPECT_TRUE(is_pareto_efficient_partition(pinst({1, 2, 3}, 1, 100), {{0, 1, 2}}));
}

TEST(ParetoPartition, DominanceIsStrict) {
  EXPECT_TRUE(deficits_dominate(dv({0, 0}), dv({0, -5})));
  EXPECT_FALSE(deficits_dominate(dv({0, -5}), dv({-2, -2})));
  EXPECT_FALSE(deficits_dominate(dv({-2, -2}), dv({-2, -2})));
}

TEST(ParetoPartition, BudgetIsEnforced) {
  Budget tiny;
  tiny.max_assignments = 3;
  EXPECT_THROW(is_pareto_efficient_partition(pinst({3, 3}, 2, 5), {{0}, {1}}, tiny), BudgetExceeded);
}

ForallExistsInstance fe(std::vector<Seats> w, Seats theta, std::vector<std::pair<std::size_t, std::size_t>> couples) {
  return {theta, to_big(w), std::move(couples)};
}

TEST(SigmaSearch, SingleSubset) {
  const auto inst = fe({3, 3, 4, 4}, 14, {{0, 1}});
  const auto p = sigma_satisfying_search(inst, Sigma{true});
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, (Partition{{0, 1, 2, 3}}));
  EXPECT_TRUE(is_sigma_satisfying(inst, Sigma{true}, *p));
  EXPECT_FALSE(sigma_satisfying_search(inst, Sigma{false}));
}

TEST(SigmaSearch, TwoSubsetsWithoutCouples) {
  const auto inst = fe({3, 3, 4, 4, 3, 3, 4, 4}, 14, {});
  const auto p = sigma_satisfying_search(inst, Sigma{});
  ASSERT_TRUE(p);
  ASSERT_EQ(p->size(), 2u);
  EXPECT_TRUE(is_sigma_satisfying(inst, Sigma{}, *p));
  const PartitionInstance as_partition{inst.weights, 2, inst.theta};
  EXPECT_EQ(deficit_vector(as_partition, *p), dv({0, 0}));
}

TEST(SigmaSearch, CouplesAreSeparatedWhenAsked) {
  const auto inst = fe({3, 3, 4, 4, 3, 3, 4, 4}, 14, {{0, 1}, {2, 3}});
  for (int bits = 0; bits < 4; ++bits) {
    const Sigma sigma{(bits & 1) != 0, (bits & 2) != 0};
    const auto p = sigma_satisfying_search(inst, sigma);
    ASSERT_TRUE(p) << bits;
    EXPECT_TRUE(is_sigma_satisfying(inst, sigma, *p));
  }
}

TEST(ForallExists, Answers) {
  EXPECT_TRUE(forall_exists_4partition(fe({3, 3, 4, 4, 3, 3, 4, 4}, 14, {})).holds);
  const auto no = forall_exists_4partition(fe({3, 3, 4, 4}, 14, {{0, 1}}));
  EXPECT_FALSE(no.holds);
  ASSERT_TRUE(no.falsifier);
  EXPECT_EQ(*no.falsifier, Sigma{false});
}

TEST(ForallExists, MatchesBruteforceOnSmallInstances) {
  for (const auto& src : testing::windowed_four_partitions(2, 12, 20)) {
    const auto inst = fe(src.weights, src.theta, {{0, 4}, {1, 5}});
    EXPECT_EQ(forall_exists_4partition(inst).holds, forall_exists_4partition_bruteforce(inst));
  }
}

TEST(ForallExists, ConstructionChecks) {
  EXPECT_THROW(validate(fe({1, 1, 1, 100}, 103, {})), InvalidInstance);
  EXPECT_THROW(validate(fe({3, 3, 4}, 14, {})), InvalidInstance);
  EXPECT_THROW(validate(fe({3, 3, 4, 4}, 14, {{0, 0}})), InvalidInstance);
  EXPECT_THROW(validate(fe({3, 3, 4, 4}, 14, {{0, 1}, {2, 3}})), InvalidInstance);
  Budget tiny;
  tiny.max_couples = 0;
  EXPECT_THROW(forall_exists_4partition(fe({3, 3, 4, 4}, 14, {{0, 1}}), tiny), BudgetExceeded);
}

TEST(PartitionJson, RoundTripKeepsWideValues) {
  const PartitionInstance inst{{BigInt(1) << 80, 7}, 2, BigInt(1) << 81};
  const auto back = partition_instance_from_json(partition_instance_to_json(inst));
  EXPECT_EQ(back.weights, inst.weights);
  EXPECT_EQ(back.subsets, 2u);
  EXPECT_EQ(back.theta, inst.theta);
  const auto f = fe({3, 3, 4, 4}, 14, {{0, 1}});
  const auto fb = forall_exists_from_json(forall_exists_to_json(f));
  EXPECT_EQ(fb.weights, f.weights);
  EXPECT_EQ(fb.couples, f.couples);
}

}  // namespace
}  // namespace spr
