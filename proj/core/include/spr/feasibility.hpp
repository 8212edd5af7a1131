#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spr/budget.hpp"
#include "spr/instance.hpp"
#include "spr/matching.hpp"

namespace spr {

/// Layered reachability table over capped capacity vectors.
///
/// Layer k holds every vector kappa, with 0 <= kappa_p <= demand_p, that some
/// placement of resources r_1..r_k reaches when each project's accumulated
/// capacity is clipped at its demand. Layer 0 holds only the zero vector.
/// Projects with zero demand take no table dimension. Layers are bitsets, one
/// bit per state. The witness is traced from the last layer back: for each
/// resource the first compatible project (declaration order) with a reachable
/// predecessor wins, and among capped predecessors the smallest index.
class DpTable {
 public:
  /// Throws BudgetExceeded when (|R|+1) * prod_p (demand_p+1) exceeds
  /// budget.max_dp_states, and ContractViolation on a malformed demand vector.
  static DpTable build(const SprInstance& inst, std::span<const Seats> demand,
                       const Budget& budget = {});

  std::size_t num_layers() const noexcept { return layers_.size(); }
  std::uint64_t states_per_layer() const noexcept { return num_states_; }
  std::uint64_t stored_states() const noexcept { return num_states_ * num_layers(); }

  /// `capped` has one entry per project; entries must lie in [0, demand_p].
  bool reachable(std::size_t layer, std::span<const Seats> capped) const;
  /// The all-saturated vector is reachable in the last layer.
  bool satisfiable() const;
  /// Allocation traced back from the all-saturated state, if reachable.
  std::optional<Allocation> witness() const;

 private:
  using Bits = std::vector<std::uint64_t>;
  static bool test(const Bits& bits, std::uint64_t i) { return (bits[i >> 6] >> (i & 63)) & 1U; }

  Seats coordinate(std::uint64_t state, ProjectIx p) const;

  std::vector<Seats> demand_;
  std::vector<std::uint64_t> stride_;  // per project; 0 when inactive
  std::uint64_t num_states_ = 1;
  std::vector<Resource> resources_;
  std::vector<Bits> layers_;  // layers 0..|R|
};

/// Some allocation mu with q_mu(p) >= demand(p) for all p, found by the capped
/// dynamic program; nullopt when none exists.
std::optional<Allocation> feasible_allocation_dp(const SprInstance& inst,
                                                 std::span<const Seats> demand,
                                                 const Budget& budget = {});

/// Same contract, by enumerating all prod_r |T_r| allocations in
/// lexicographic order (resource 0 most significant, projects in index
/// order); returns the first that works. Throws BudgetExceeded ("oracle too
/// large") when the product exceeds budget.max_placements.
std::optional<Allocation> feasible_allocation_bruteforce(const SprInstance& inst,
                                                         std::span<const Seats> demand,
                                                         const Budget& budget = {});

/// SPR/FA: an allocation making y feasible, or nullopt.
std::optional<Allocation> is_feasible(const SprInstance& inst, const Matching& y,
                                      const Budget& budget = {});

/// Number of DP feasibility queries issued by this process so far.
std::uint64_t dp_invocation_count() noexcept;

}  // namespace spr
