#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "spr/budget.hpp"
#include "spr/instance.hpp"
#include "spr/matching.hpp"

namespace spr {

struct SearchOptions {
  Budget budget{};
  /// Cut branches whose partial matching is already infeasible (a subset of a
  /// feasible matching is feasible, so nothing below can be feasible).
  bool prune_infeasible = true;
  /// Cut branches where two already decided students form an envious pair;
  /// later decisions cannot remove it.
  bool prune_envy = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

// Candidates are visited in lexicographic order: students in declaration
// order, each trying her acceptable projects in preference order and then
// the empty assignment. Every visited node counts against
// budget.max_matchings; running out raises BudgetExceeded.

/// First stable feasible pair in that order, or nullopt when none exists.
std::optional<FeasiblePair> search_stable(const SprInstance& inst, const SearchOptions& options = {},
                                          SearchStats* stats = nullptr);

/// Calls `visit` on every feasible matching (with a witness allocation) in
/// that order until it returns false. Only infeasibility pruning applies.
void for_each_feasible_matching(const SprInstance& inst,
                                const std::function<bool(const FeasiblePair&)>& visit,
                                const Budget& budget = {});

std::vector<FeasiblePair> enumerate_feasible_matchings(const SprInstance& inst,
                                                       const Budget& budget = {});

}  // namespace spr
