#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "spr/bigint.hpp"
#include "spr/budget.hpp"

namespace spr {

/// Multiset of positive weights to split into m subsets, each aiming at theta.
struct PartitionInstance {
  std::vector<BigInt> weights;
  std::size_t subsets = 1;
  BigInt theta = 0;
};

/// Throws InvalidInstance unless every weight is >= 1, subsets >= 1, theta >= 0.
void validate(const PartitionInstance& inst);

/// subsets[i] lists the (zero-based) weight positions placed in subset i.
using Partition = std::vector<std::vector<std::size_t>>;
/// delta_i = min(w(V_i) - theta, 0).
using DeficitVector = std::vector<BigInt>;

/// Throws ContractViolation unless `partition` splits all positions into
/// exactly inst.subsets disjoint parts.
DeficitVector deficit_vector(const PartitionInstance& inst, const Partition& partition);

/// Partition whose deficits are >= bounds componentwise, or nullopt.
/// Exact backtracking: weights heaviest first (ties by position), subsets in
/// ascending order, with dead states memoized. When bounds are all -theta the
/// answer puts every weight into the first subset.
/// Throws ContractViolation unless -theta <= bounds[i] <= 0.
std::optional<Partition> lower_bound_decider(const PartitionInstance& inst,
                                             const std::vector<BigInt>& bounds);

struct PartitionResult {
  Partition partition;
  DeficitVector deficits;
};

/// Leximax partition: subset 1's deficit is maximised first, then subset 2's
/// with subset 1 held, and so on, each by binary search over [-theta, 0].
/// The deficit vector is Pareto efficient.
PartitionResult leximax_pareto_partition(const PartitionInstance& inst);

/// Exhaustive: enumerates all m^|W| assignments looking for a dominating
/// deficit vector. Throws BudgetExceeded past budget.max_assignments.
bool is_pareto_efficient_partition(const PartitionInstance& inst, const Partition& partition,
                                   const Budget& budget = {});

/// Every deficit at least as large, one strictly larger.
bool deficits_dominate(const DeficitVector& a, const DeficitVector& b);

/// 4m weights strictly inside (theta/5, theta/3) and couples (u_i, v_i) of
/// zero-based positions; couple i is tied to subset i.
struct ForallExistsInstance {
  BigInt theta = 0;
  std::vector<BigInt> weights;
  std::vector<std::pair<std::size_t, std::size_t>> couples;

  std::size_t subsets() const noexcept { return weights.size() / 4; }
};

/// Throws InvalidInstance: weight count not a positive multiple of 4, window
/// violated, couple positions out of range or repeated, more couples than
/// subsets.
void validate(const ForallExistsInstance& inst);

using Sigma = std::vector<bool>;

/// Each subset has four weights summing to theta, u_i is in subset i, and v_i
/// is in subset i exactly when sigma[i]. Checked directly from the definition.
bool is_sigma_satisfying(const ForallExistsInstance& inst, const Sigma& sigma,
                         const Partition& partition);

/// Backtracking search for a sigma-satisfying partition.
std::optional<Partition> sigma_satisfying_search(const ForallExistsInstance& inst,
                                                 const Sigma& sigma);

struct ForallExistsAnswer {
  bool holds = false;
  /// Lexicographically least sigma without a satisfying partition.
  std::optional<Sigma> falsifier;
};

/// Tries every sigma in lexicographic order (first couple most significant).
/// Throws BudgetExceeded when the couple count exceeds budget.max_couples.
ForallExistsAnswer forall_exists_4partition(const ForallExistsInstance& inst,
                                            const Budget& budget = {});

// JSON: {"weights": [...], "m": int, "theta": int} and
// {"theta": int, "weights": [...], "couples": [[u, v], ...]}. Integers too
// large for 64 bits are written as decimal strings; both forms are accepted.
PartitionInstance partition_instance_from_json(const nlohmann::ordered_json& doc);
nlohmann::ordered_json partition_instance_to_json(const PartitionInstance& inst);
ForallExistsInstance forall_exists_from_json(const nlohmann::ordered_json& doc);
nlohmann::ordered_json forall_exists_to_json(const ForallExistsInstance& inst);
nlohmann::ordered_json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::ordered_json& v, const char* where);

}  // namespace spr
