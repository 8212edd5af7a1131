#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "spr/budget.hpp"
#include "spr/instance.hpp"
#include "spr/matching.hpp"

namespace spr {

struct SdOptions {
  Budget budget{};
  /// Called after each student's turn with the matching so far.
  std::function<void(StudentIx, const Matching&)> on_turn;
};

/// Serial dictatorship. Students take turns in `order` (which must be a
/// permutation of all students); each takes her most preferred acceptable
/// project p such that the current matching plus (s, p) is still feasible
/// under some allocation, or stays unmatched. The returned allocation is the
/// witness for the final matching.
FeasiblePair serial_dictatorship(const SprInstance& inst, std::span<const StudentIx> order,
                                 const SdOptions& options = {});

/// Serial dictatorship in declaration order.
FeasiblePair serial_dictatorship(const SprInstance& inst, const SdOptions& options = {});

/// Student-proposing deferred acceptance with fixed capacities, in batch
/// rounds: every free student with options left applies to her next project,
/// and each project keeps its best `capacities[p]` among held and new
/// applicants. Applications to projects that do not list the student are
/// rejected outright.
Matching deferred_acceptance(const SprInstance& inst, std::span<const Seats> capacities);

/// One-proposal-at-a-time deferred acceptance where the next proposer is drawn
/// from the free students with a seeded RNG. Produces the same matching as the
/// batch version; kept to test that independence.
Matching deferred_acceptance_sequential(const SprInstance& inst, std::span<const Seats> capacities,
                                        std::uint64_t seed);

/// Artificial-caps deferred acceptance: DA under q_mu for a fixed allocation.
FeasiblePair acda(const SprInstance& inst, const Allocation& mu);

/// Each resource on its lowest-indexed compatible project.
Allocation first_compatible_allocation(const SprInstance& inst);
/// Each resource on a uniformly drawn compatible project.
Allocation random_allocation(const SprInstance& inst, std::uint64_t seed);
/// A uniformly drawn permutation of the students.
std::vector<StudentIx> random_order(const SprInstance& inst, std::uint64_t seed);

}  // namespace spr
