#pragma once

#include <cstdint>
#include <string_view>

namespace spr {

/// Work guards for the exhaustive procedures. Every field is an upper bound;
/// exceeding one raises BudgetExceeded.
struct Budget {
  /// Stored DP states per feasibility call, i.e. (|R|+1) * prod_p (kappa_p+1).
  std::uint64_t max_dp_states = 100'000;
  /// Search nodes (partial or complete candidate matchings) per enumeration.
  std::uint64_t max_matchings = 1'000'000;
  /// Allocations enumerated by the brute-force feasibility oracle.
  std::uint64_t max_placements = 100'000;
  /// Item-to-subset assignments enumerated by partition brute force.
  std::uint64_t max_assignments = 10'000'000;
  /// Largest couple list accepted by the forall-exists quantifier loop.
  std::uint32_t max_couples = 20;
  /// Students a reduction may emit.
  std::uint64_t max_students = 100'000;

  /// Defaults overridden by an SPR_BUDGET-style spec: either a bare number
  /// applied to every counting field, or comma separated key=value pairs with
  /// keys states, matchings, placements, assignments, couples, students.
  /// Throws std::invalid_argument on malformed text.
  static Budget parse(std::string_view spec, Budget base);
  static Budget parse(std::string_view spec);

  /// Defaults, overridden by the SPR_BUDGET environment variable when set.
  static Budget from_env();
};

/// Saturating multiply, used when sizing search spaces.
constexpr std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace spr
