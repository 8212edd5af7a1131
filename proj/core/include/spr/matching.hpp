#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spr/instance.hpp"

namespace spr {

/// Capacity demand or supply, one entry per project.
using SeatVector = std::vector<Seats>;

/// Partial map student -> project. Unmatched students have no entry; the
/// empty assignment is never stored as a project.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::size_t num_students) : assignment_(num_students) {}

  std::size_t num_students() const noexcept { return assignment_.size(); }
  std::optional<ProjectIx> project_of(StudentIx s) const { return assignment_.at(s); }
  bool is_matched(StudentIx s) const { return assignment_.at(s).has_value(); }

  void assign(StudentIx s, ProjectIx p) { assignment_.at(s) = p; }
  void unassign(StudentIx s) { assignment_.at(s).reset(); }

  std::size_t matched_count() const;
  std::vector<StudentIx> students_of(ProjectIx p) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<std::optional<ProjectIx>> assignment_;
};

/// Total map resource -> project.
struct Allocation {
  std::vector<ProjectIx> placement;

  /// q_mu: seats each project receives.
  SeatVector capacities(const SprInstance& inst) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

struct FeasiblePair {
  Matching matching;
  Allocation allocation;
};

/// Every assigned contract is in X and ranked above the empty assignment by
/// the student.
bool is_valid_matching(const SprInstance& inst, const Matching& y);
/// Every resource sits on a compatible project.
bool is_valid_allocation(const SprInstance& inst, const Allocation& mu);
/// |Y(p)| <= q_mu(p) for every project (both parts must be valid).
bool is_feasible_pair(const SprInstance& inst, const Matching& y, const Allocation& mu);

/// Throw ContractViolation unless the argument is valid for `inst`.
void require_valid_matching(const SprInstance& inst, const Matching& y);
void require_valid_allocation(const SprInstance& inst, const Allocation& mu);
void require_feasible_pair(const SprInstance& inst, const FeasiblePair& pair);

/// kappa_p = |Y(p)|.
SeatVector required_capacity(const SprInstance& inst, const Matching& y);

/// Is project a (or the empty assignment) strictly better than b for s.
bool student_prefers(const SprInstance& inst, StudentIx s, std::optional<ProjectIx> a,
                     std::optional<ProjectIx> b);

}  // namespace spr
