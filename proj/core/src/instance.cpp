#include "spr/instance.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "spr/errors.hpp"

namespace spr {
namespace {

constexpr std::size_t kUnranked = std::numeric_limits<std::size_t>::max();

template <class Map>
std::optional<std::size_t> lookup(const Map& map, const std::string& id) {
  auto it = map.find(id);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

void index_ids(const std::vector<std::string>& ids, const char* kind,
               std::unordered_map<std::string, std::size_t>& out,
               std::vector<std::string>& issues) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i].empty()) {
      issues.push_back(std::string(kind) + " #" + std::to_string(i) + ": empty id");
      continue;
    }
    if (!out.emplace(ids[i], i).second) {
      issues.push_back(std::string("duplicate ") + kind + " id '" + ids[i] + "'");
    }
  }
}

// Resolves a preference list against `lookup_table`; reports unknown ids and
// repeated entries.
std::vector<std::size_t> resolve_list(const std::vector<std::string>& names,
                                      const std::unordered_map<std::string, std::size_t>& table,
                                      const std::string& owner, const char* target_kind,
                                      std::vector<std::string>& issues) {
  std::vector<std::size_t> out;
  std::unordered_set<std::size_t> seen;
  for (const auto& name : names) {
    auto it = table.find(name);
    if (it == table.end()) {
      issues.push_back(owner + ": unknown " + target_kind + " '" + name + "'");
      continue;
    }
    if (!seen.insert(it->second).second) {
      issues.push_back(owner + ": duplicate preference entry '" + name + "'");
      continue;
    }
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

std::optional<StudentIx> SprInstance::find_student(const std::string& id) const {
  return lookup(student_lookup_, id);
}
std::optional<ProjectIx> SprInstance::find_project(const std::string& id) const {
  return lookup(project_lookup_, id);
}
std::optional<ResourceIx> SprInstance::find_resource(const std::string& id) const {
  return lookup(resource_lookup_, id);
}

bool SprInstance::is_compatible(ResourceIx r, ProjectIx p) const {
  const auto& c = resources_.at(r).compatible;
  return std::binary_search(c.begin(), c.end(), p);
}

std::optional<std::size_t> SprInstance::student_rank(StudentIx s, ProjectIx p) const {
  std::size_t r = student_rank_.at(s * num_projects() + p);
  if (r == kUnranked) return std::nullopt;
  return r;
}

std::optional<std::size_t> SprInstance::project_rank(ProjectIx p, StudentIx s) const {
  std::size_t r = project_rank_.at(p * num_students() + s);
  if (r == kUnranked) return std::nullopt;
  return r;
}

std::vector<ProjectIx> SprInstance::options(StudentIx s) const {
  std::vector<ProjectIx> out;
  for (ProjectIx p : student_prefs(s)) {
    if (in_contracts(s, p)) out.push_back(p);
  }
  return out;
}

RawInstance SprInstance::to_raw() const {
  RawInstance raw;
  for (StudentIx s = 0; s < num_students(); ++s) {
    RawInstance::Agent a{student_ids_[s], {}};
    for (ProjectIx p : student_prefs_[s]) a.prefs.push_back(project_ids_[p]);
    raw.students.push_back(std::move(a));
  }
  for (ProjectIx p = 0; p < num_projects(); ++p) {
    RawInstance::Agent a{project_ids_[p], {}};
    for (StudentIx s : project_prefs_[p]) a.prefs.push_back(student_ids_[s]);
    raw.projects.push_back(std::move(a));
  }
  for (const auto& r : resources_) {
    RawInstance::Resource out{r.id, r.capacity, {}};
    for (ProjectIx p : r.compatible) out.compatible.push_back(project_ids_[p]);
    raw.resources.push_back(std::move(out));
  }
  return raw;
}

std::variant<SprInstance, ValidationReport> validate_instance(const RawInstance& raw) {
  std::vector<std::string> issues;
  SprInstance inst;

  for (const auto& s : raw.students) inst.student_ids_.push_back(s.id);
  for (const auto& p : raw.projects) inst.project_ids_.push_back(p.id);
  index_ids(inst.student_ids_, "student", inst.student_lookup_, issues);
  index_ids(inst.project_ids_, "project", inst.project_lookup_, issues);

  std::vector<std::string> resource_ids;
  for (const auto& r : raw.resources) resource_ids.push_back(r.id);
  index_ids(resource_ids, "resource", inst.resource_lookup_, issues);

  for (const auto& s : raw.students) {
    inst.student_prefs_.push_back(
        resolve_list(s.prefs, inst.project_lookup_, "student '" + s.id + "'", "project", issues));
  }
  for (const auto& p : raw.projects) {
    inst.project_prefs_.push_back(
        resolve_list(p.prefs, inst.student_lookup_, "project '" + p.id + "'", "student", issues));
  }

  for (const auto& r : raw.resources) {
    const std::string owner = "resource '" + r.id + "'";
    if (r.capacity <= 0) {
      issues.push_back(owner + ": capacity must be positive (got " + std::to_string(r.capacity) +
                       ")");
    }
    if (r.compatible.empty()) issues.push_back(owner + ": compatible set must be nonempty");
    std::vector<ProjectIx> compat;
    std::unordered_set<ProjectIx> seen;
    for (const auto& name : r.compatible) {
      auto it = inst.project_lookup_.find(name);
      if (it == inst.project_lookup_.end()) {
        issues.push_back(owner + ": unknown project '" + name + "'");
      } else if (!seen.insert(it->second).second) {
        issues.push_back(owner + ": duplicate compatible project '" + name + "'");
      } else {
        compat.push_back(it->second);
      }
    }
    std::sort(compat.begin(), compat.end());
    inst.resources_.push_back(Resource{r.id, r.capacity, std::move(compat)});
    if (r.capacity > 0) {
      if (inst.total_capacity_ > std::numeric_limits<Seats>::max() - r.capacity) {
        issues.push_back(owner + ": total capacity overflows");
      } else {
        inst.total_capacity_ += r.capacity;
      }
    }
  }

  if (!issues.empty()) return ValidationReport{std::move(issues)};

  const std::size_t ns = inst.num_students();
  const std::size_t np = inst.num_projects();
  inst.student_rank_.assign(ns * np, kUnranked);
  inst.project_rank_.assign(ns * np, kUnranked);
  for (StudentIx s = 0; s < ns; ++s) {
    const auto& prefs = inst.student_prefs_[s];
    for (std::size_t k = 0; k < prefs.size(); ++k) inst.student_rank_[s * np + prefs[k]] = k;
  }
  for (ProjectIx p = 0; p < np; ++p) {
    const auto& prefs = inst.project_prefs_[p];
    for (std::size_t k = 0; k < prefs.size(); ++k) inst.project_rank_[p * ns + prefs[k]] = k;
  }
  return inst;
}

SprInstance make_instance(const RawInstance& raw) {
  auto result = validate_instance(raw);
  if (auto* report = std::get_if<ValidationReport>(&result)) {
    throw InvalidInstance(std::move(report->issues));
  }
  return std::get<SprInstance>(std::move(result));
}

bool ContractSet::contains(StudentIx s, ProjectIx p) const {
  return std::binary_search(contracts_.begin(), contracts_.end(), Contract{s, p});
}

ContractSet acceptable_contracts(const SprInstance& inst) {
  std::vector<Contract> out;
  for (ProjectIx p = 0; p < inst.num_projects(); ++p) {
    for (StudentIx s : inst.project_prefs(p)) out.push_back({s, p});
  }
  std::sort(out.begin(), out.end());
  return ContractSet(std::move(out));
}

}  // namespace spr
