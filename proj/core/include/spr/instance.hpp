#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace spr {

// Dense indices, assigned in declaration order.
using StudentIx = std::size_t;
using ProjectIx = std::size_t;
using ResourceIx = std::size_t;
using Seats = std::int64_t;

/// Untyped instance description, exactly as read from a file. Nothing here is
/// checked; `validate_instance` turns it into an SprInstance.
struct RawInstance {
  struct Agent {
    std::string id;
    std::vector<std::string> prefs;
  };
  struct Resource {
    std::string id;
    Seats capacity = 0;
    std::vector<std::string> compatible;
  };
  std::vector<Agent> students;
  std::vector<Agent> projects;
  std::vector<Resource> resources;
};

struct ValidationReport {
  std::vector<std::string> issues;
};

struct Resource {
  std::string id;
  Seats capacity;
  /// Compatible projects in ascending index order.
  std::vector<ProjectIx> compatible;
};

/// A student-project-resource instance. Immutable once built.
///
/// Preferences are strict ranked lists; anything unlisted ranks below the
/// empty assignment. Contract (s, p) is in X iff s appears in p's list.
class SprInstance {
 public:
  std::size_t num_students() const noexcept { return student_ids_.size(); }
  std::size_t num_projects() const noexcept { return project_ids_.size(); }
  std::size_t num_resources() const noexcept { return resources_.size(); }

  const std::string& student_id(StudentIx s) const { return student_ids_.at(s); }
  const std::string& project_id(ProjectIx p) const { return project_ids_.at(p); }
  const std::string& resource_id(ResourceIx r) const { return resources_.at(r).id; }

  std::optional<StudentIx> find_student(const std::string& id) const;
  std::optional<ProjectIx> find_project(const std::string& id) const;
  std::optional<ResourceIx> find_resource(const std::string& id) const;

  Seats capacity(ResourceIx r) const { return resources_.at(r).capacity; }
  std::span<const ProjectIx> compatible(ResourceIx r) const { return resources_.at(r).compatible; }
  bool is_compatible(ResourceIx r, ProjectIx p) const;
  const std::vector<Resource>& resources() const noexcept { return resources_; }

  std::span<const ProjectIx> student_prefs(StudentIx s) const { return student_prefs_.at(s); }
  std::span<const StudentIx> project_prefs(ProjectIx p) const { return project_prefs_.at(p); }

  /// Position of p in s's list (0 = favourite), or nullopt when unacceptable.
  std::optional<std::size_t> student_rank(StudentIx s, ProjectIx p) const;
  /// Position of s in p's list, or nullopt when unacceptable.
  std::optional<std::size_t> project_rank(ProjectIx p, StudentIx s) const;

  /// (s, p) is in X: p lists s.
  bool in_contracts(StudentIx s, ProjectIx p) const { return project_rank(p, s).has_value(); }

  /// Projects on s's list that also list s, in s's preference order.
  std::vector<ProjectIx> options(StudentIx s) const;

  /// Sum of all resource capacities.
  Seats total_capacity() const noexcept { return total_capacity_; }

  RawInstance to_raw() const;

  friend std::variant<SprInstance, ValidationReport> validate_instance(const RawInstance& raw);

 private:
  SprInstance() = default;

  std::vector<std::string> student_ids_;
  std::vector<std::string> project_ids_;
  std::vector<Resource> resources_;
  std::vector<std::vector<ProjectIx>> student_prefs_;
  std::vector<std::vector<StudentIx>> project_prefs_;
  // rank tables, row-major; npos marks "unacceptable"
  std::vector<std::size_t> student_rank_;
  std::vector<std::size_t> project_rank_;
  std::unordered_map<std::string, StudentIx> student_lookup_;
  std::unordered_map<std::string, ProjectIx> project_lookup_;
  std::unordered_map<std::string, ResourceIx> resource_lookup_;
  Seats total_capacity_ = 0;
};

/// Every violated invariant is listed (unknown ids, non-positive capacities,
/// empty compatibility sets, duplicate ids or preference entries).
std::variant<SprInstance, ValidationReport> validate_instance(const RawInstance& raw);

/// Throwing form of validate_instance: InvalidInstance carries the report.
SprInstance make_instance(const RawInstance& raw);

struct Contract {
  StudentIx student;
  ProjectIx project;
  friend bool operator==(const Contract&, const Contract&) = default;
  friend auto operator<=>(const Contract&, const Contract&) = default;
};

/// The acceptable contracts X, sorted by (student, project).
class ContractSet {
 public:
  explicit ContractSet(std::vector<Contract> sorted) : contracts_(std::move(sorted)) {}
  std::size_t size() const noexcept { return contracts_.size(); }
  bool contains(StudentIx s, ProjectIx p) const;
  std::span<const Contract> contracts() const noexcept { return contracts_; }

 private:
  std::vector<Contract> contracts_;
};

ContractSet acceptable_contracts(const SprInstance& inst);

}  // namespace spr
