#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "spr/instance.hpp"
#include "spr/matching.hpp"

namespace spr {

using ordered_json = nlohmann::ordered_json;

// Canonical instance format (UTF-8 JSON):
//   { "students":  [{"id": str, "prefs": [str, ...]}, ...],
//     "projects":  [{"id": str, "prefs": [str, ...]}, ...],
//     "resources": [{"id": str, "capacity": int, "compatible": [str, ...]}, ...] }
// Matching:   { "assignment": {student_id: project_id, ...} }
// Allocation: { "placement":  {resource_id: project_id, ...} }
//
// serialize_* always emits two-space indented JSON with a trailing newline and
// keys in declaration order, so parse followed by serialize reproduces a
// canonical file byte for byte.

RawInstance raw_instance_from_json(const ordered_json& doc);
ordered_json instance_to_json(const SprInstance& inst);

/// Throws ParseError (syntax, wrong types) or InvalidInstance (invariants).
SprInstance parse_instance(std::string_view text);
std::string serialize_instance(const SprInstance& inst);

/// Unknown ids raise InvalidInstance; validity against X is left to callers.
Matching matching_from_json(const SprInstance& inst, const ordered_json& doc);
ordered_json matching_to_json(const SprInstance& inst, const Matching& y);
Matching parse_matching(const SprInstance& inst, std::string_view text);
std::string serialize_matching(const SprInstance& inst, const Matching& y);

/// Unknown ids or unplaced resources raise InvalidInstance.
Allocation allocation_from_json(const SprInstance& inst, const ordered_json& doc);
ordered_json allocation_to_json(const SprInstance& inst, const Allocation& mu);
Allocation parse_allocation(const SprInstance& inst, std::string_view text);
std::string serialize_allocation(const SprInstance& inst, const Allocation& mu);

/// Parses JSON text, mapping syntax errors to ParseError with a byte offset.
ordered_json parse_json(std::string_view text);
/// Canonical rendering: indent 2, trailing newline.
std::string dump_json(const ordered_json& doc);

/// Reads a whole file; a missing or unreadable file is a ParseError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

SprInstance load_instance(const std::filesystem::path& path);

}  // namespace spr
