#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "spr/bigint.hpp"
#include "spr/budget.hpp"
#include "spr/instance.hpp"
#include "spr/matching.hpp"
#include "spr/partition.hpp"
#include "spr/stable_search.hpp"
#include "spr/verify.hpp"

namespace spr {

/// Answer recovered for a source instance. `undecided` means the target side
/// gave no usable answer (budget exhausted, or a solution outside the shapes
/// the construction predicts).
enum class Verdict { yes, no, undecided };
std::string_view to_string(Verdict v);

// ---------------------------------------------------------------------------
// Source problems

/// 4m weights, each strictly between theta/5 and theta/3, summing to m*theta.
struct FourPartitionInstance {
  std::vector<Seats> weights;
  Seats theta = 0;
  std::size_t subsets() const noexcept { return weights.size() / 4; }
};
/// Throws InvalidInstance listing every violated precondition.
void validate(const FourPartitionInstance& src);

/// Elements are zero-based indices into A, B and C.
struct Triplet {
  std::size_t a = 0, b = 0, c = 0;
  friend bool operator==(const Triplet&, const Triplet&) = default;
};

struct Max3dmInstance {
  std::size_t d = 0;
  std::vector<Triplet> triplets;
  std::vector<BigInt> payoffs;
};
/// Elements in range, one non-negative payoff per triplet, and every element
/// of A, B and C used by some triplet.
void validate(const Max3dmInstance& src);

struct ForallExists3dmInstance {
  std::size_t d = 0;
  std::vector<Triplet> universal;    // M
  std::vector<Triplet> existential;  // N
};
/// Elements in range, M and N disjoint, every element covered by M or N, and
/// no two triplets of M sharing their A element (their couples would overlap).
void validate(const ForallExists3dmInstance& src);

// ---------------------------------------------------------------------------
// 4-Partition -> SPR/FA: a fixed matching that is feasible iff the weights
// split into m quadruples of sum theta.

struct FaGadget {
  SprInstance instance;
  Matching matching;
  nlohmann::ordered_json manifest;
};
FaGadget reduce_4partition_to_fa(const FourPartitionInstance& src, const Budget& budget = {});
Verdict decode_fa(const std::optional<Allocation>& witness);
/// Runs the feasibility DP on the gadget and decodes; budget trouble gives
/// `undecided`.
Verdict solve_fa(const FaGadget& gadget, const Budget& budget = {});

// ---------------------------------------------------------------------------
// 4-Partition -> SPR/Nw/Verif: the given pair is wasteful iff the source is a
// yes-instance, the only possible claiming pair being (s*, p_{m+2}).

struct NwVerifGadget {
  SprInstance instance;
  FeasiblePair pair;
  StudentIx s_star = 0;
  ProjectIx claim_project = 0;
  nlohmann::ordered_json manifest;
};
/// With `stable_verif_order`, p_{m+2} ranks s* last so that the given pair has
/// no envious pair and stability coincides with nonwastefulness.
NwVerifGadget reduce_4partition_to_nw_verif(const FourPartitionInstance& src,
                                            bool stable_verif_order = false,
                                            const Budget& budget = {});
Verdict decode_nw_verif(const NwVerifGadget& gadget, const std::optional<ClaimingPair>& claim);
Verdict solve_nw_verif(const NwVerifGadget& gadget, const Budget& budget = {});

// ---------------------------------------------------------------------------
// Max3DM -> ParetoPartition: base-beta gadget whose Pareto efficient deficit
// vectors are zero everywhere but one coordinate, equal to minus the payoff
// left out by an optimal 3DM.

/// One row per emitted integer, signed digits z_0.. z_k (least significant
/// first); values are sum z_i * base^i.
struct DigitTable {
  BigInt base = 2;
  std::vector<std::vector<BigInt>> rows;
  std::vector<std::string> labels;
  std::vector<BigInt> target;

  std::vector<BigInt> values() const;
  BigInt target_value() const;
  /// Column-wise sum of the row digits.
  std::vector<BigInt> column_totals() const;
};

/// Every column total lies in [0, base) and the digits of the summed values
/// equal those totals, so adding all the integers never carries.
bool audit_no_carry(const DigitTable& table);
/// Column totals equal `subsets` times the target digit, for every column
/// except those listed in `skip`.
bool audit_column_balance(const DigitTable& table, std::size_t subsets,
                          const std::vector<std::size_t>& skip = {});

struct ParetoGadget {
  PartitionInstance instance;
  DigitTable table;
  BigInt total_payoff;  // v_N
  nlohmann::ordered_json manifest;
};
ParetoGadget reduce_max3dm_to_pareto_partition(const Max3dmInstance& src);
/// Optimum 3DM payoff read off a Pareto efficient deficit vector, or nullopt
/// when the vector is not of the predicted shape.
std::optional<BigInt> decode_pareto_partition(const ParetoGadget& gadget, const DeficitVector& deficits);

// ---------------------------------------------------------------------------
// ParetoPartition -> SPR/Nw/Find: theta single-minded students per project,
// one all-compatible resource per weight.

struct NwFindGadget {
  SprInstance instance;
  std::size_t subsets = 0;
  nlohmann::ordered_json manifest;
};
/// Throws BudgetExceeded when m * theta exceeds budget.max_students.
NwFindGadget reduce_pareto_partition_to_nw_find(const PartitionInstance& src,
                                                const Budget& budget = {});
/// V_i = resources placed on p_i.
Partition decode_nw_find(const NwFindGadget& gadget, const FeasiblePair& pair);
/// Serial dictatorship on the gadget, decoded; nullopt on budget trouble.
std::optional<Partition> solve_nw_find(const NwFindGadget& gadget, const Budget& budget = {});

// ---------------------------------------------------------------------------
// Forall-exists 3DM -> forall-exists 4-Partition.

struct ForallExistsGadget {
  ForallExistsInstance instance;
  DigitTable table;
  /// Base prescribed by the construction, before raising it to fit the window.
  BigInt nominal_base;
  nlohmann::ordered_json manifest;
};
ForallExistsGadget reduce_fe3dm_to_fe4partition(const ForallExists3dmInstance& src);
Verdict decode_fe4partition(const std::optional<ForallExistsAnswer>& answer);
Verdict solve_fe4partition(const ForallExistsGadget& gadget, const Budget& budget = {});

// ---------------------------------------------------------------------------
// Forall-exists 4-Partition -> co-SPR/Stable/Exist: the gadget has no stable
// matching iff every sigma admits a sigma-satisfying partition.

struct CoStableGadget {
  SprInstance instance;
  nlohmann::ordered_json manifest;
};
/// Requires sum(W) = m * theta. Throws BudgetExceeded when the student count
/// exceeds budget.max_students.
CoStableGadget reduce_fe4partition_to_costable(const ForallExistsInstance& src,
                                               const Budget& budget = {});
/// `stable` is the search result, nullopt when the search gave up.
Verdict decode_costable(const std::optional<std::optional<FeasiblePair>>& stable);
Verdict solve_costable(const CoStableGadget& gadget, const SearchOptions& options = {});

// ---------------------------------------------------------------------------
// Source-side brute force, for validating the constructions.

/// Does W split into quadruples of sum theta? Plain recursion.
bool four_partition_bruteforce(const FourPartitionInstance& src);
/// Best total payoff over all partial 3DMs (subsets of triplets).
BigInt max3dm_bruteforce(const Max3dmInstance& src);
/// For every subset of M, is there a subset of N completing it to a perfect 3DM?
bool forall_exists_3dm_bruteforce(const ForallExists3dmInstance& src);
/// Checks every sigma and every assignment of positions to subsets directly.
bool forall_exists_4partition_bruteforce(const ForallExistsInstance& src);

}  // namespace spr
