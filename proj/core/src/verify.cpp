#include "spr/verify.hpp"

#include <string>

#include "spr/errors.hpp"
#include "spr/feasibility.hpp"

namespace spr {
namespace {

// Projects on s's list strictly above her current assignment, in order.
std::vector<ProjectIx> improvements(const SprInstance& inst, const Matching& y, StudentIx s) {
  std::vector<ProjectIx> out;
  const auto current = y.project_of(s);
  for (ProjectIx p : inst.student_prefs(s)) {
    if (current && p == *current) break;
    if (inst.in_contracts(s, p)) out.push_back(p);
  }
  return out;
}

template <class Visit>
void scan_claims(const SprInstance& inst, const FeasiblePair& pair, const Budget& budget,
                 Visit&& visit) {
  require_feasible_pair(inst, pair);
  Matching y = pair.matching;
  for (StudentIx s = 0; s < inst.num_students(); ++s) {
    const auto current = y.project_of(s);
    for (ProjectIx p : improvements(inst, pair.matching, s)) {
      y.assign(s, p);
      auto mu = is_feasible(inst, y, budget);
      if (mu && !visit(ClaimingPair{s, p, std::move(*mu)})) return;
    }
    if (current) y.assign(s, *current);
    else y.unassign(s);
  }
}

template <class Visit>
void scan_envy(const SprInstance& inst, const FeasiblePair& pair, Visit&& visit) {
  require_feasible_pair(inst, pair);
  const Matching& y = pair.matching;
  for (StudentIx s = 0; s < inst.num_students(); ++s) {
    for (ProjectIx p : improvements(inst, y, s)) {
      const std::size_t my_rank = *inst.project_rank(p, s);
      std::optional<StudentIx> worst;
      for (StudentIx other : y.students_of(p)) {
        const std::size_t r = *inst.project_rank(p, other);
        if (r > my_rank && (!worst || r > *inst.project_rank(p, *worst))) worst = other;
      }
      if (worst && !visit(EnviousPair{s, p, *worst})) return;
    }
  }
}

}  // namespace

std::optional<ClaimingPair> find_claiming_pair(const SprInstance& inst, const FeasiblePair& pair,
                                               const Budget& budget) {
  std::optional<ClaimingPair> found;
  scan_claims(inst, pair, budget, [&](ClaimingPair c) {
    found = std::move(c);
    return false;
  });
  return found;
}

std::optional<EnviousPair> find_envious_pair(const SprInstance& inst, const FeasiblePair& pair) {
  std::optional<EnviousPair> found;
  scan_envy(inst, pair, [&](EnviousPair e) {
    found = e;
    return false;
  });
  return found;
}

bool is_nonwasteful(const SprInstance& inst, const FeasiblePair& pair, const Budget& budget) {
  return !find_claiming_pair(inst, pair, budget).has_value();
}

bool is_fair(const SprInstance& inst, const FeasiblePair& pair) {
  return !find_envious_pair(inst, pair).has_value();
}

bool is_stable(const SprInstance& inst, const FeasiblePair& pair, const Budget& budget) {
  return is_fair(inst, pair) && is_nonwasteful(inst, pair, budget);
}

std::size_t count_claiming_pairs(const SprInstance& inst, const FeasiblePair& pair,
                                 const Budget& budget) {
  std::size_t n = 0;
  scan_claims(inst, pair, budget, [&](const ClaimingPair&) {
    ++n;
    return true;
  });
  return n;
}

std::size_t count_envious_pairs(const SprInstance& inst, const FeasiblePair& pair) {
  std::size_t n = 0;
  scan_envy(inst, pair, [&](const EnviousPair&) {
    ++n;
    return true;
  });
  return n;
}

bool pareto_dominates(const SprInstance& inst, const Matching& y1, const Matching& y2) {
  if (y1.num_students() != inst.num_students() || y2.num_students() != inst.num_students()) {
    throw ContractViolation("matchings do not fit the instance");
  }
  bool strict = false;
  for (StudentIx s = 0; s < inst.num_students(); ++s) {
    if (student_prefers(inst, s, y2.project_of(s), y1.project_of(s))) return false;
    strict = strict || student_prefers(inst, s, y1.project_of(s), y2.project_of(s));
  }
  return strict;
}

bool is_pareto_efficient_bruteforce(const SprInstance& inst, const FeasiblePair& pair,
                                    const Budget& budget) {
  require_feasible_pair(inst, pair);
  const Matching& base = pair.matching;
  const std::size_t ns = inst.num_students();

  // candidate projects per student: at least as good as the current one
  std::vector<std::vector<std::optional<ProjectIx>>> choices(ns);
  std::uint64_t total = 1;
  for (StudentIx s = 0; s < ns; ++s) {
    for (ProjectIx p : improvements(inst, base, s)) choices[s].push_back(p);
    choices[s].push_back(base.project_of(s));
    total = saturating_mul(total, choices[s].size());
  }
  if (total > budget.max_matchings) {
    throw BudgetExceeded("Pareto check needs " + std::to_string(total) +
                         " candidate matchings, budget is " + std::to_string(budget.max_matchings));
  }

  std::vector<std::size_t> digit(ns, 0);
  Matching y(ns);
  for (;;) {
    bool differs = false;
    for (StudentIx s = 0; s < ns; ++s) {
      const auto p = choices[s][digit[s]];
      if (p) y.assign(s, *p);
      else y.unassign(s);
      differs = differs || digit[s] + 1 != choices[s].size();
    }
    if (differs && is_feasible(inst, y, budget)) return false;
    std::size_t s = ns;
    for (;;) {
      if (s == 0) return true;
      --s;
      if (++digit[s] < choices[s].size()) break;
      digit[s] = 0;
    }
  }
}

}  // namespace spr
