#include "spr/mechanisms.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "spr/errors.hpp"
#include "spr/feasibility.hpp"

namespace spr {
namespace {

void require_permutation(const SprInstance& inst, std::span<const StudentIx> order) {
  std::vector<bool> seen(inst.num_students(), false);
  if (order.size() != inst.num_students()) {
    throw ContractViolation("order must list every student exactly once");
  }
  for (StudentIx s : order) {
    if (s >= inst.num_students() || seen[s]) {
      throw ContractViolation("order must list every student exactly once");
    }
    seen[s] = true;
  }
}

void require_capacities(const SprInstance& inst, std::span<const Seats> capacities) {
  if (capacities.size() != inst.num_projects()) {
    throw ContractViolation("capacity vector must have one entry per project");
  }
  for (Seats c : capacities) {
    if (c < 0) throw ContractViolation("capacities must be non-negative");
  }
}

// Keeps p's best `cap` students among `pool`, returns the rejected ones.
std::vector<StudentIx> keep_best(const SprInstance& inst, ProjectIx p, Seats cap,
                                 std::vector<StudentIx>& pool) {
  std::vector<StudentIx> rejected;
  std::erase_if(pool, [&](StudentIx s) {
    if (inst.in_contracts(s, p)) return false;
    rejected.push_back(s);
    return true;
  });
  std::sort(pool.begin(), pool.end(), [&](StudentIx a, StudentIx b) {
    return *inst.project_rank(p, a) < *inst.project_rank(p, b);
  });
  const auto keep = static_cast<std::size_t>(std::max<Seats>(cap, 0));
  if (pool.size() > keep) {
    rejected.insert(rejected.end(), pool.begin() + static_cast<std::ptrdiff_t>(keep), pool.end());
    pool.resize(keep);
  }
  return rejected;
}

}  // namespace

FeasiblePair serial_dictatorship(const SprInstance& inst, std::span<const StudentIx> order,
                                 const SdOptions& options) {
  require_permutation(inst, order);
  Matching y(inst.num_students());
  for (StudentIx s : order) {
    for (ProjectIx p : inst.options(s)) {
      y.assign(s, p);
      if (is_feasible(inst, y, options.budget)) break;
      y.unassign(s);
    }
    if (options.on_turn) options.on_turn(s, y);
  }
  auto mu = is_feasible(inst, y, options.budget);
  if (!mu) throw Error("serial dictatorship lost feasibility");  // unreachable by heredity
  return {std::move(y), std::move(*mu)};
}

FeasiblePair serial_dictatorship(const SprInstance& inst, const SdOptions& options) {
  std::vector<StudentIx> order(inst.num_students());
  std::iota(order.begin(), order.end(), StudentIx{0});
  return serial_dictatorship(inst, order, options);
}

Matching deferred_acceptance(const SprInstance& inst, std::span<const Seats> capacities) {
  require_capacities(inst, capacities);
  const std::size_t ns = inst.num_students();
  std::vector<std::size_t> next(ns, 0);  // position in the student's list
  std::vector<std::vector<StudentIx>> held(inst.num_projects());
  std::vector<StudentIx> free(ns);
  std::iota(free.begin(), free.end(), StudentIx{0});

  while (!free.empty()) {
    std::vector<std::vector<StudentIx>> applicants(inst.num_projects());
    bool any = false;
    for (StudentIx s : free) {
      const auto prefs = inst.student_prefs(s);
      if (next[s] >= prefs.size()) continue;  // exhausted, stays unmatched
      applicants[prefs[next[s]++]].push_back(s);
      any = true;
    }
    if (!any) break;
    std::vector<bool> rejected(ns, false);
    for (ProjectIx p = 0; p < inst.num_projects(); ++p) {
      if (applicants[p].empty()) continue;
      auto& pool = held[p];
      pool.insert(pool.end(), applicants[p].begin(), applicants[p].end());
      for (StudentIx s : keep_best(inst, p, capacities[p], pool)) rejected[s] = true;
    }
    // rejected students with options left apply again next round
    std::vector<StudentIx> still_free;
    for (StudentIx s = 0; s < ns; ++s) {
      if (rejected[s] && next[s] < inst.student_prefs(s).size()) still_free.push_back(s);
    }
    free = std::move(still_free);
  }

  Matching y(ns);
  for (ProjectIx p = 0; p < inst.num_projects(); ++p) {
    for (StudentIx s : held[p]) y.assign(s, p);
  }
  return y;
}

Matching deferred_acceptance_sequential(const SprInstance& inst, std::span<const Seats> capacities,
                                        std::uint64_t seed) {
  require_capacities(inst, capacities);
  std::mt19937_64 rng(seed);
  const std::size_t ns = inst.num_students();
  std::vector<std::size_t> next(ns, 0);
  std::vector<std::vector<StudentIx>> held(inst.num_projects());
  std::vector<StudentIx> free(ns);
  std::iota(free.begin(), free.end(), StudentIx{0});

  while (!free.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
    const std::size_t i = pick(rng);
    const StudentIx s = free[i];
    const auto prefs = inst.student_prefs(s);
    if (next[s] >= prefs.size()) {
      free.erase(free.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    const ProjectIx p = prefs[next[s]++];
    free.erase(free.begin() + static_cast<std::ptrdiff_t>(i));
    held[p].push_back(s);
    for (StudentIx r : keep_best(inst, p, capacities[p], held[p])) free.push_back(r);
  }

  Matching y(ns);
  for (ProjectIx p = 0; p < inst.num_projects(); ++p) {
    for (StudentIx s : held[p]) y.assign(s, p);
  }
  return y;
}

FeasiblePair acda(const SprInstance& inst, const Allocation& mu) {
  require_valid_allocation(inst, mu);
  return {deferred_acceptance(inst, mu.capacities(inst)), mu};
}

Allocation first_compatible_allocation(const SprInstance& inst) {
  Allocation mu;
  for (ResourceIx r = 0; r < inst.num_resources(); ++r) mu.placement.push_back(inst.compatible(r)[0]);
  return mu;
}

Allocation random_allocation(const SprInstance& inst, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Allocation mu;
  for (ResourceIx r = 0; r < inst.num_resources(); ++r) {
    const auto compat = inst.compatible(r);
    std::uniform_int_distribution<std::size_t> pick(0, compat.size() - 1);
    mu.placement.push_back(compat[pick(rng)]);
  }
  return mu;
}

std::vector<StudentIx> random_order(const SprInstance& inst, std::uint64_t seed) {
  std::vector<StudentIx> order(inst.num_students());
  std::iota(order.begin(), order.end(), StudentIx{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace spr
