#include "spr/io.hpp"

#include <fstream>
#include <sstream>

#include "spr/errors.hpp"

namespace spr {
namespace {

const ordered_json& member(const ordered_json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError("expected an object", where);
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing key '") + key + "'", where);
  return *it;
}

std::string as_string(const ordered_json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError("expected a string", where);
  return v.get<std::string>();
}

std::vector<std::string> as_string_list(const ordered_json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError("expected an array", where);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_string(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<RawInstance::Agent> agents(const ordered_json& doc, const char* key) {
  const auto& list = member(doc, key, "/");
  if (!list.is_array()) throw ParseError("expected an array", key);
  std::vector<RawInstance::Agent> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    RawInstance::Agent a;
    a.id = as_string(member(list[i], "id", where), where + ".id");
    a.prefs = as_string_list(member(list[i], "prefs", where), where + ".prefs");
    out.push_back(std::move(a));
  }
  return out;
}

ordered_json agent_list(std::size_t n, auto&& id_of, auto&& prefs_of) {
  ordered_json list = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    ordered_json prefs = ordered_json::array();
    for (auto j : prefs_of(i)) prefs.push_back(j);
    list.push_back(ordered_json{{"id", id_of(i)}, {"prefs", std::move(prefs)}});
  }
  return list;
}

}  // namespace

ordered_json parse_json(std::string_view text) {
  try {
    return ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), "byte " + std::to_string(e.byte));
  }
}

std::string dump_json(const ordered_json& doc) { return doc.dump(2) + "\n"; }

RawInstance raw_instance_from_json(const ordered_json& doc) {
  RawInstance raw;
  raw.students = agents(doc, "students");
  raw.projects = agents(doc, "projects");
  const auto& list = member(doc, "resources", "/");
  if (!list.is_array()) throw ParseError("expected an array", "resources");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "resources[" + std::to_string(i) + "]";
    RawInstance::Resource r;
    r.id = as_string(member(list[i], "id", where), where + ".id");
    const auto& cap = member(list[i], "capacity", where);
    if (!cap.is_number_integer()) throw ParseError("expected an integer", where + ".capacity");
    r.capacity = cap.get<Seats>();
    r.compatible = as_string_list(member(list[i], "compatible", where), where + ".compatible");
    raw.resources.push_back(std::move(r));
  }
  return raw;
}

ordered_json instance_to_json(const SprInstance& inst) {
  ordered_json doc;
  doc["students"] = agent_list(
      inst.num_students(), [&](std::size_t s) { return inst.student_id(s); },
      [&](std::size_t s) {
        std::vector<std::string> v;
        for (ProjectIx p : inst.student_prefs(s)) v.push_back(inst.project_id(p));
        return v;
      });
  doc["projects"] = agent_list(
      inst.num_projects(), [&](std::size_t p) { return inst.project_id(p); },
      [&](std::size_t p) {
        std::vector<std::string> v;
        for (StudentIx s : inst.project_prefs(p)) v.push_back(inst.student_id(s));
        return v;
      });
  ordered_json resources = ordered_json::array();
  for (ResourceIx r = 0; r < inst.num_resources(); ++r) {
    ordered_json compat = ordered_json::array();
    for (ProjectIx p : inst.compatible(r)) compat.push_back(inst.project_id(p));
    resources.push_back(ordered_json{{"id", inst.resource_id(r)},
                                     {"capacity", inst.capacity(r)},
                                     {"compatible", std::move(compat)}});
  }
  doc["resources"] = std::move(resources);
  return doc;
}

SprInstance parse_instance(std::string_view text) {
  return make_instance(raw_instance_from_json(parse_json(text)));
}

std::string serialize_instance(const SprInstance& inst) { return dump_json(instance_to_json(inst)); }

Matching matching_from_json(const SprInstance& inst, const ordered_json& doc) {
  const auto& map = member(doc, "assignment", "/");
  if (!map.is_object()) throw ParseError("expected an object", "assignment");
  Matching y(inst.num_students());
  std::vector<std::string> issues;
  for (const auto& [sid, pid_json] : map.items()) {
    const std::string pid = as_string(pid_json, "assignment." + sid);
    auto s = inst.find_student(sid);
    auto p = inst.find_project(pid);
    if (!s) issues.push_back("matching: unknown student '" + sid + "'");
    if (!p) issues.push_back("matching: unknown project '" + pid + "'");
    if (s && p) y.assign(*s, *p);
  }
  if (!issues.empty()) throw InvalidInstance(std::move(issues));
  return y;
}

ordered_json matching_to_json(const SprInstance& inst, const Matching& y) {
  ordered_json map = ordered_json::object();
  for (StudentIx s = 0; s < y.num_students(); ++s) {
    if (auto p = y.project_of(s)) map[inst.student_id(s)] = inst.project_id(*p);
  }
  return ordered_json{{"assignment", std::move(map)}};
}

Matching parse_matching(const SprInstance& inst, std::string_view text) {
  return matching_from_json(inst, parse_json(text));
}

std::string serialize_matching(const SprInstance& inst, const Matching& y) {
  return dump_json(matching_to_json(inst, y));
}

Allocation allocation_from_json(const SprInstance& inst, const ordered_json& doc) {
  const auto& map = member(doc, "placement", "/");
  if (!map.is_object()) throw ParseError("expected an object", "placement");
  std::vector<std::optional<ProjectIx>> placed(inst.num_resources());
  std::vector<std::string> issues;
  for (const auto& [rid, pid_json] : map.items()) {
    const std::string pid = as_string(pid_json, "placement." + rid);
    auto r = inst.find_resource(rid);
    auto p = inst.find_project(pid);
    if (!r) issues.push_back("allocation: unknown resource '" + rid + "'");
    if (!p) issues.push_back("allocation: unknown project '" + pid + "'");
    if (r && p) placed[*r] = *p;
  }
  Allocation mu;
  for (ResourceIx r = 0; r < placed.size(); ++r) {
    if (!placed[r]) {
      issues.push_back("allocation: resource '" + inst.resource_id(r) + "' is not placed");
      continue;
    }
    mu.placement.push_back(*placed[r]);
  }
  if (!issues.empty()) throw InvalidInstance(std::move(issues));
  return mu;
}

ordered_json allocation_to_json(const SprInstance& inst, const Allocation& mu) {
  ordered_json map = ordered_json::object();
  for (ResourceIx r = 0; r < mu.placement.size(); ++r) {
    map[inst.resource_id(r)] = inst.project_id(mu.placement[r]);
  }
  return ordered_json{{"placement", std::move(map)}};
}

Allocation parse_allocation(const SprInstance& inst, std::string_view text) {
  return allocation_from_json(inst, parse_json(text));
}

std::string serialize_allocation(const SprInstance& inst, const Allocation& mu) {
  return dump_json(allocation_to_json(inst, mu));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

SprInstance load_instance(const std::filesystem::path& path) { return parse_instance(read_file(path)); }

}  // namespace spr
