#pragma once

#include <optional>

#include "spr/budget.hpp"
#include "spr/instance.hpp"
#include "spr/matching.hpp"

namespace spr {

/// (student, project) can be granted with a possibly different allocation,
/// everybody else staying put.
struct ClaimingPair {
  StudentIx student;
  ProjectIx project;
  Allocation witness;
};

/// `student` prefers `project`, which holds `displaced`, ranked below her.
struct EnviousPair {
  StudentIx student;
  ProjectIx project;
  StudentIx displaced;
  friend bool operator==(const EnviousPair&, const EnviousPair&) = default;
};

// Every verifier requires a feasible (matching, allocation) pair and throws
// ContractViolation otherwise. "First" means students in declaration order,
// then projects in that student's preference order.

/// First claiming pair, with the allocation that makes the move feasible.
std::optional<ClaimingPair> find_claiming_pair(const SprInstance& inst, const FeasiblePair& pair,
                                               const Budget& budget = {});

/// First envious pair; the displaced student is the one the project likes
/// least among those it holds below the envious student. Never consults the
/// feasibility engine.
std::optional<EnviousPair> find_envious_pair(const SprInstance& inst, const FeasiblePair& pair);

bool is_nonwasteful(const SprInstance& inst, const FeasiblePair& pair, const Budget& budget = {});
bool is_fair(const SprInstance& inst, const FeasiblePair& pair);
bool is_stable(const SprInstance& inst, const FeasiblePair& pair, const Budget& budget = {});

/// Number of distinct claiming (resp. envious) contracts (s, p).
std::size_t count_claiming_pairs(const SprInstance& inst, const FeasiblePair& pair,
                                 const Budget& budget = {});
std::size_t count_envious_pairs(const SprInstance& inst, const FeasiblePair& pair);

/// Every student weakly prefers y1 to y2 and at least one strictly.
bool pareto_dominates(const SprInstance& inst, const Matching& y1, const Matching& y2);

/// No feasible matching Pareto dominates pair.matching. Only matchings giving
/// every student something at least as good as her current project are
/// enumerated (nothing else can dominate), and each one is tested for
/// feasibility. Throws BudgetExceeded when that candidate count exceeds
/// budget.max_matchings.
bool is_pareto_efficient_bruteforce(const SprInstance& inst, const FeasiblePair& pair,
                                    const Budget& budget = {});

}  // namespace spr
