#include "spr/feasibility.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "spr/errors.hpp"

namespace spr {
namespace {

std::atomic<std::uint64_t> g_dp_calls{0};

void check_demand(const SprInstance& inst, std::span<const Seats> demand) {
  if (demand.size() != inst.num_projects()) {
    throw ContractViolation("demand vector has " + std::to_string(demand.size()) +
                            " entries, instance has " + std::to_string(inst.num_projects()) +
                            " projects");
  }
  for (Seats d : demand) {
    if (d < 0) throw ContractViolation("demand entries must be non-negative");
  }
}

// Necessary conditions; rejecting early keeps hopeless queries out of the table.
bool obviously_infeasible(const SprInstance& inst, std::span<const Seats> demand) {
  Seats total = 0;
  std::vector<Seats> reachable(inst.num_projects(), 0);
  for (ResourceIx r = 0; r < inst.num_resources(); ++r) {
    for (ProjectIx p : inst.compatible(r)) reachable[p] += inst.capacity(r);
  }
  for (ProjectIx p = 0; p < inst.num_projects(); ++p) {
    if (demand[p] > reachable[p]) return true;
    total += demand[p];
  }
  return total > inst.total_capacity();
}

}  // namespace

DpTable DpTable::build(const SprInstance& inst, std::span<const Seats> demand,
                       const Budget& budget) {
  check_demand(inst, demand);
  DpTable t;
  t.demand_.assign(demand.begin(), demand.end());
  t.stride_.assign(inst.num_projects(), 0);
  for (ProjectIx p = 0; p < inst.num_projects(); ++p) {
    if (demand[p] == 0) continue;
    t.stride_[p] = t.num_states_;
    t.num_states_ = saturating_mul(t.num_states_, static_cast<std::uint64_t>(demand[p]) + 1);
  }
  const std::uint64_t stored = saturating_mul(t.num_states_, inst.num_resources() + 1);
  if (stored > budget.max_dp_states || t.num_states_ >= (std::uint64_t{1} << 58)) {
    throw BudgetExceeded("feasibility DP needs " +
                         (stored == UINT64_MAX ? std::string("more than 2^64")
                                               : std::to_string(stored)) +
                         " states, budget is " + std::to_string(budget.max_dp_states));
  }

  t.resources_ = inst.resources();
  const std::size_t words = static_cast<std::size_t>((t.num_states_ + 63) / 64);
  t.layers_.assign(inst.num_resources() + 1, Bits(words, 0));
  t.layers_[0][0] = 1;
  for (ResourceIx r = 0; r < inst.num_resources(); ++r) {
    const Bits& prev = t.layers_[r];
    Bits& next = t.layers_[r + 1];
    const Seats q = inst.capacity(r);
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = prev[w]; bits != 0; bits &= bits - 1) {
        const std::uint64_t state = w * 64 + static_cast<std::uint64_t>(__builtin_ctzll(bits));
        for (ProjectIx p : inst.compatible(r)) {
          std::uint64_t to = state;
          if (t.stride_[p] != 0) {
            const Seats have = t.coordinate(state, p);
            to += static_cast<std::uint64_t>(std::min(have + q, t.demand_[p]) - have) * t.stride_[p];
          }
          next[to >> 6] |= std::uint64_t{1} << (to & 63);
        }
      }
    }
  }
  return t;
}

Seats DpTable::coordinate(std::uint64_t state, ProjectIx p) const {
  const auto radix = static_cast<std::uint64_t>(demand_[p]) + 1;
  return static_cast<Seats>((state / stride_[p]) % radix);
}

bool DpTable::reachable(std::size_t layer, std::span<const Seats> capped) const {
  if (layer >= num_layers()) throw ContractViolation("DP layer out of range");
  if (capped.size() != demand_.size()) throw ContractViolation("capped vector has wrong size");
  std::uint64_t index = 0;
  for (ProjectIx p = 0; p < demand_.size(); ++p) {
    if (capped[p] < 0 || capped[p] > demand_[p]) {
      throw ContractViolation("capped vector entry outside [0, demand]");
    }
    index += static_cast<std::uint64_t>(capped[p]) * stride_[p];
  }
  return test(layers_[layer], index);
}

bool DpTable::satisfiable() const { return test(layers_.back(), num_states_ - 1); }

std::optional<Allocation> DpTable::witness() const {
  if (!satisfiable()) return std::nullopt;
  Allocation mu;
  mu.placement.resize(resources_.size());
  std::uint64_t state = num_states_ - 1;
  for (std::size_t k = resources_.size(); k-- > 0;) {
    const Seats q = resources_[k].capacity;
    const Bits& prev = layers_[k];
    std::optional<std::uint64_t> from;
    for (ProjectIx p : resources_[k].compatible) {
      if (stride_[p] == 0) {
        if (test(prev, state)) from = state;
      } else {
        const Seats have = coordinate(state, p);
        const std::uint64_t base = state - static_cast<std::uint64_t>(have) * stride_[p];
        // a saturated coordinate may come from any value within q of the demand
        const Seats lo = have == demand_[p] ? std::max<Seats>(have - q, 0) : have - q;
        const Seats hi = have == demand_[p] ? have : have - q;
        for (Seats c = std::max<Seats>(lo, 0); c <= hi && !from; ++c) {
          if (test(prev, base + static_cast<std::uint64_t>(c) * stride_[p])) {
            from = base + static_cast<std::uint64_t>(c) * stride_[p];
          }
        }
      }
      if (from) {
        mu.placement[k] = p;
        break;
      }
    }
    if (!from) throw ContractViolation("DP table is inconsistent");
    state = *from;
  }
  return mu;
}

std::optional<Allocation> feasible_allocation_dp(const SprInstance& inst,
                                                 std::span<const Seats> demand,
                                                 const Budget& budget) {
  check_demand(inst, demand);
  g_dp_calls.fetch_add(1, std::memory_order_relaxed);
  if (obviously_infeasible(inst, demand)) return std::nullopt;
  return DpTable::build(inst, demand, budget).witness();
}

std::optional<Allocation> feasible_allocation_bruteforce(const SprInstance& inst,
                                                         std::span<const Seats> demand,
                                                         const Budget& budget) {
  check_demand(inst, demand);
  const std::size_t nr = inst.num_resources();
  std::uint64_t total = 1;
  for (ResourceIx r = 0; r < nr; ++r) total = saturating_mul(total, inst.compatible(r).size());
  if (total > budget.max_placements) {
    throw BudgetExceeded("oracle too large: " + std::to_string(total) +
                         " allocations exceed budget " + std::to_string(budget.max_placements));
  }

  std::vector<std::size_t> digit(nr, 0);
  Allocation mu;
  mu.placement.resize(nr);
  for (;;) {
    for (ResourceIx r = 0; r < nr; ++r) mu.placement[r] = inst.compatible(r)[digit[r]];
    const SeatVector have = mu.capacities(inst);
    bool ok = true;
    for (ProjectIx p = 0; p < inst.num_projects() && ok; ++p) ok = have[p] >= demand[p];
    if (ok) return mu;
    // odometer, last resource fastest
    std::size_t r = nr;
    while (r > 0) {
      --r;
      if (++digit[r] < inst.compatible(r).size()) break;
      digit[r] = 0;
      if (r == 0) return std::nullopt;
    }
    if (nr == 0) return std::nullopt;
  }
}

std::optional<Allocation> is_feasible(const SprInstance& inst, const Matching& y,
                                      const Budget& budget) {
  require_valid_matching(inst, y);
  return feasible_allocation_dp(inst, required_capacity(inst, y), budget);
}

std::uint64_t dp_invocation_count() noexcept { return g_dp_calls.load(std::memory_order_relaxed); }

}  // namespace spr
