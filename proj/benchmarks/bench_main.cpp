#include <benchmark/benchmark.h>

#include "spr/feasibility.hpp"
#include "spr/generators.hpp"
#include "spr/mechanisms.hpp"
#include "spr/partition.hpp"
#include "spr/stable_search.hpp"

namespace {

using namespace spr;

// two projects sharing eight resources, half the students on each
SprInstance two_project_instance(std::size_t students) {
  RawInstance raw;
  raw.projects = {{"p1", {}}, {"p2", {}}};
  for (std::size_t s = 0; s < students; ++s) {
    const std::string id = "s" + std::to_string(s + 1);
    auto& p = raw.projects[s < students / 2 ? 0 : 1];
    raw.students.push_back({id, {p.id}});
    p.prefs.push_back(id);
  }
  for (int r = 1; r <= 8; ++r) {
    raw.resources.push_back({"r" + std::to_string(r), static_cast<Seats>(std::max<std::size_t>(students / 4, 1)), {"p1", "p2"}});
  }
  return make_instance(raw);
}

void BM_FeasibilityDp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = two_project_instance(n);
  const SeatVector demand{static_cast<Seats>(n / 2), static_cast<Seats>(n / 2)};
  Budget budget;
  budget.max_dp_states = UINT64_MAX;
  for (auto _ : state) benchmark::DoNotOptimize(feasible_allocation_dp(inst, demand, budget));
  state.counters["states"] = static_cast<double>((n / 2 + 1) * (n / 2 + 1) * 9);
}
BENCHMARK(BM_FeasibilityDp)->RangeMultiplier(2)->Range(64, 1024);

void BM_FeasibilityBruteforce(benchmark::State& state) {
  const auto inst = random_instance({6, 6, 3, 3, 6, 6, 1, 3, 0.8, 3, 0.9}, 7);
  const SeatVector demand(inst.num_projects(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(feasible_allocation_bruteforce(inst, demand));
}
BENCHMARK(BM_FeasibilityBruteforce);

void BM_SerialDictatorship(benchmark::State& state) {
  RandomInstanceParams params;
  params.min_students = params.max_students = static_cast<std::size_t>(state.range(0));
  params.min_projects = params.max_projects = 3;
  params.min_resources = params.max_resources = 6;
  const auto inst = random_instance(params, 11);
  for (auto _ : state) benchmark::DoNotOptimize(serial_dictatorship(inst));
}
BENCHMARK(BM_SerialDictatorship)->Arg(8)->Arg(32)->Arg(128);

void BM_Acda(benchmark::State& state) {
  RandomInstanceParams params;
  params.min_students = params.max_students = static_cast<std::size_t>(state.range(0));
  const auto inst = random_instance(params, 13);
  const auto mu = first_compatible_allocation(inst);
  for (auto _ : state) benchmark::DoNotOptimize(acda(inst, mu));
}
BENCHMARK(BM_Acda)->Arg(8)->Arg(128);

void BM_StableSearch(benchmark::State& state) {
  const auto inst = random_instance({8, 8, 3, 3, 4, 4, 1, 2, 0.6, 3, 0.9}, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(search_stable(inst));
}
BENCHMARK(BM_StableSearch)->Arg(1)->Arg(2)->Arg(3);

void BM_LeximaxPartition(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PartitionInstance inst;
  for (std::size_t i = 0; i < n; ++i) inst.weights.push_back(BigInt(3 + (i * 7) % 10));
  inst.subsets = 3;
  BigInt total = 0;
  for (const auto& w : inst.weights) total += w;
  inst.theta = total / 3;
  for (auto _ : state) benchmark::DoNotOptimize(leximax_pareto_partition(inst));
}
BENCHMARK(BM_LeximaxPartition)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
