#include "spr/matching.hpp"

#include <string>

#include "spr/errors.hpp"

namespace spr {

std::size_t Matching::matched_count() const {
  std::size_t n = 0;
  for (const auto& a : assignment_) n += a.has_value();
  return n;
}

std::vector<StudentIx> Matching::students_of(ProjectIx p) const {
  std::vector<StudentIx> out;
  for (StudentIx s = 0; s < assignment_.size(); ++s) {
    if (assignment_[s] == p) out.push_back(s);
  }
  return out;
}

SeatVector Allocation::capacities(const SprInstance& inst) const {
  SeatVector q(inst.num_projects(), 0);
  for (ResourceIx r = 0; r < placement.size(); ++r) q.at(placement[r]) += inst.capacity(r);
  return q;
}

bool is_valid_matching(const SprInstance& inst, const Matching& y) {
  if (y.num_students() != inst.num_students()) return false;
  for (StudentIx s = 0; s < y.num_students(); ++s) {
    auto p = y.project_of(s);
    if (!p) continue;
    if (*p >= inst.num_projects()) return false;
    if (!inst.in_contracts(s, *p) || !inst.student_rank(s, *p)) return false;
  }
  return true;
}

bool is_valid_allocation(const SprInstance& inst, const Allocation& mu) {
  if (mu.placement.size() != inst.num_resources()) return false;
  for (ResourceIx r = 0; r < mu.placement.size(); ++r) {
    if (mu.placement[r] >= inst.num_projects() || !inst.is_compatible(r, mu.placement[r])) {
      return false;
    }
  }
  return true;
}

bool is_feasible_pair(const SprInstance& inst, const Matching& y, const Allocation& mu) {
  if (!is_valid_matching(inst, y) || !is_valid_allocation(inst, mu)) return false;
  const SeatVector need = required_capacity(inst, y);
  const SeatVector have = mu.capacities(inst);
  for (ProjectIx p = 0; p < inst.num_projects(); ++p) {
    if (need[p] > have[p]) return false;
  }
  return true;
}

void require_valid_matching(const SprInstance& inst, const Matching& y) {
  if (!is_valid_matching(inst, y)) {
    throw ContractViolation("matching is not valid for this instance");
  }
}

void require_valid_allocation(const SprInstance& inst, const Allocation& mu) {
  if (!is_valid_allocation(inst, mu)) {
    throw ContractViolation("allocation is not valid for this instance");
  }
}

void require_feasible_pair(const SprInstance& inst, const FeasiblePair& pair) {
  require_valid_matching(inst, pair.matching);
  require_valid_allocation(inst, pair.allocation);
  if (!is_feasible_pair(inst, pair.matching, pair.allocation)) {
    throw ContractViolation("matching is not feasible with the given allocation");
  }
}

SeatVector required_capacity(const SprInstance& inst, const Matching& y) {
  SeatVector kappa(inst.num_projects(), 0);
  for (StudentIx s = 0; s < y.num_students(); ++s) {
    if (auto p = y.project_of(s)) ++kappa.at(*p);
  }
  return kappa;
}

bool student_prefers(const SprInstance& inst, StudentIx s, std::optional<ProjectIx> a,
                     std::optional<ProjectIx> b) {
  // unacceptable projects rank below the empty assignment
  auto key = [&](std::optional<ProjectIx> p) -> long long {
    if (!p) return -1;
    auto r = inst.student_rank(s, *p);
    if (!r) return -2;
    return static_cast<long long>(inst.student_prefs(s).size() - *r);
  };
  return key(a) > key(b);
}

}  // namespace spr
