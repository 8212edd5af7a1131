#include <algorithm>
#include <functional>
#include <string>

#include "spr/errors.hpp"
#include "spr/feasibility.hpp"
#include "spr/reductions.hpp"
#include "spr/verify.hpp"

namespace spr {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::undecided: return "undecided";
  }
  return "undecided";
}

void validate(const FourPartitionInstance& src) {
  std::vector<std::string> issues;
  const std::size_t n = src.weights.size();
  if (n == 0 || n % 4 != 0) {
    issues.push_back("weight count must be a positive multiple of 4 (got " + std::to_string(n) + ")");
  }
  Seats total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Seats w = src.weights[k];
    if (!(5 * w > src.theta && 3 * w < src.theta)) {
      issues.push_back("weight " + std::to_string(k) + " = " + std::to_string(w) +
                       " is outside the open window (theta/5, theta/3)");
    }
    total += w;
  }
  if (n % 4 == 0 && total != static_cast<Seats>(n / 4) * src.theta) {
    issues.push_back("weights sum to " + std::to_string(total) + ", expected m * theta = " +
                     std::to_string(static_cast<Seats>(n / 4) * src.theta));
  }
  if (!issues.empty()) throw InvalidInstance(std::move(issues));
}

namespace {

void require_students(std::uint64_t count, const Budget& budget) {
  if (count > budget.max_students) {
    throw BudgetExceeded("reduction would emit " + std::to_string(count) + " students, budget is " +
                         std::to_string(budget.max_students));
  }
}

// Appends `count` students named prefix_1.. that accept only `project`.
std::vector<std::string> add_block(RawInstance& raw, const std::string& prefix, Seats count,
                                   const std::string& project) {
  std::vector<std::string> ids;
  for (Seats k = 1; k <= count; ++k) {
    ids.push_back(prefix + "_" + std::to_string(k));
    raw.students.push_back({ids.back(), {project}});
  }
  return ids;
}

nlohmann::ordered_json source_json(const FourPartitionInstance& src) {
  return {{"weights", src.weights}, {"theta", src.theta}};
}

Matching match_all(const SprInstance& inst, const std::function<bool(StudentIx)>& skip) {
  Matching y(inst.num_students());
  for (StudentIx s = 0; s < inst.num_students(); ++s) {
    if (!skip(s)) y.assign(s, inst.options(s).front());
  }
  return y;
}

}  // namespace

FaGadget reduce_4partition_to_fa(const FourPartitionInstance& src, const Budget& budget) {
  validate(src);
  const std::size_t m = src.subsets();
  require_students(static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(src.theta), budget);

  RawInstance raw;
  std::vector<std::string> all;
  for (std::size_t i = 1; i <= m; ++i) {
    const std::string p = "p_" + std::to_string(i);
    all.push_back(p);
    raw.projects.push_back({p, add_block(raw, "s_" + std::to_string(i), src.theta, p)});
  }
  for (std::size_t k = 0; k < src.weights.size(); ++k) {
    raw.resources.push_back({"r_" + std::to_string(k + 1), src.weights[k], all});
  }
  SprInstance inst = make_instance(raw);
  Matching y = match_all(inst, [](StudentIx) { return false; });
  nlohmann::ordered_json manifest{{"reduction", "thm1"},
                                  {"source", source_json(src)},
                                  {"decode", "the matching is feasible iff the source is a yes-instance"},
                                  {"resource_of_weight", nlohmann::ordered_json::array()}};
  for (std::size_t k = 0; k < src.weights.size(); ++k) {
    manifest["resource_of_weight"].push_back("r_" + std::to_string(k + 1));
  }
  return {std::move(inst), std::move(y), std::move(manifest)};
}

Verdict decode_fa(const std::optional<Allocation>& witness) {
  return witness ? Verdict::yes : Verdict::no;
}

Verdict solve_fa(const FaGadget& gadget, const Budget& budget) {
  try {
    return decode_fa(is_feasible(gadget.instance, gadget.matching, budget));
  } catch (const BudgetExceeded&) {
    return Verdict::undecided;
  }
}

NwVerifGadget reduce_4partition_to_nw_verif(const FourPartitionInstance& src, bool stable_verif_order,
                                            const Budget& budget) {
  validate(src);
  const auto m = static_cast<Seats>(src.subsets());
  const Seats theta = src.theta;
  require_students(static_cast<std::uint64_t>(m * theta * 3 + m), budget);

  auto pid = [](Seats i) { return "p_" + std::to_string(i); };
  RawInstance raw;
  for (Seats i = 1; i <= m; ++i) {
    raw.projects.push_back({pid(i), add_block(raw, "s_" + std::to_string(i), theta, pid(i))});
  }
  raw.projects.push_back({pid(m + 1), add_block(raw, "s_" + std::to_string(m + 1), m * theta, pid(m + 1))});
  raw.students.push_back({"s*", {pid(m + 2)}});
  auto tail = add_block(raw, "s_" + std::to_string(m + 2), m * theta + m - 1, pid(m + 2));
  std::vector<std::string> top;
  if (!stable_verif_order) top.push_back("s*");
  top.insert(top.end(), tail.begin(), tail.end());
  if (stable_verif_order) top.push_back("s*");
  raw.projects.push_back({pid(m + 2), top});

  std::vector<std::string> first_m1;
  for (Seats i = 1; i <= m + 1; ++i) first_m1.push_back(pid(i));
  for (Seats i = 1; i <= m; ++i) {
    raw.resources.push_back({"r_x" + std::to_string(i), theta + 1, {pid(i), pid(m + 2)}});
  }
  for (std::size_t k = 0; k < src.weights.size(); ++k) {
    raw.resources.push_back({"r_" + std::to_string(k + 1), src.weights[k], first_m1});
  }
  raw.resources.push_back({"r_z", m * theta + m - 1, {pid(m + 1), pid(m + 2)}});

  SprInstance inst = make_instance(raw);
  const StudentIx s_star = *inst.find_student("s*");
  const ProjectIx claim = *inst.find_project(pid(m + 2));
  Matching y = match_all(inst, [&](StudentIx s) { return s == s_star; });
  // the horizontal allocation: r_x_i -> p_i, weights -> p_{m+1}, r_z -> p_{m+2}
  Allocation mu;
  for (ResourceIx r = 0; r < inst.num_resources(); ++r) {
    const auto& id = inst.resource_id(r);
    if (id.rfind("r_x", 0) == 0) mu.placement.push_back(*inst.find_project(pid(std::stoll(id.substr(3)))));
    else if (id == "r_z") mu.placement.push_back(claim);
    else mu.placement.push_back(*inst.find_project(pid(m + 1)));
  }
  nlohmann::ordered_json manifest{{"reduction", "fig1"},
                                  {"source", source_json(src)},
                                  {"stable_verif_order", stable_verif_order},
                                  {"s_star", "s*"},
                                  {"claim_project", pid(m + 2)},
                                  {"decode", "(s*, p_{m+2}) is a claiming pair iff the source is a yes-instance"}};
  return {std::move(inst), {std::move(y), std::move(mu)}, s_star, claim, std::move(manifest)};
}

Verdict decode_nw_verif(const NwVerifGadget& gadget, const std::optional<ClaimingPair>& claim) {
  if (!claim) return Verdict::no;
  if (claim->student == gadget.s_star && claim->project == gadget.claim_project) return Verdict::yes;
  return Verdict::undecided;
}

Verdict solve_nw_verif(const NwVerifGadget& gadget, const Budget& budget) {
  try {
    return decode_nw_verif(gadget, find_claiming_pair(gadget.instance, gadget.pair, budget));
  } catch (const BudgetExceeded&) {
    return Verdict::undecided;
  }
}

namespace {

bool fill_quadruples(std::vector<Seats>& rest, Seats theta) {
  if (rest.empty()) return true;
  // the first remaining weight anchors a quadruple; choose its three partners
  const Seats anchor = rest.front();
  const std::size_t n = rest.size();
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (anchor + rest[i] + rest[j] + rest[k] != theta) continue;
        std::vector<Seats> next;
        for (std::size_t x = 1; x < n; ++x) {
          if (x != i && x != j && x != k) next.push_back(rest[x]);
        }
        if (fill_quadruples(next, theta)) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool four_partition_bruteforce(const FourPartitionInstance& src) {
  if (src.weights.size() % 4 != 0) return false;
  std::vector<Seats> rest = src.weights;
  return fill_quadruples(rest, src.theta);
}

}  // namespace spr
