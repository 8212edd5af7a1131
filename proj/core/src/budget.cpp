#include "spr/budget.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace spr {
namespace {

std::uint64_t parse_count(std::string_view text) {
  // accepts plain integers and the 1e6 shorthand
  std::uint64_t mantissa = 0;
  auto e = text.find_first_of("eE");
  auto head = text.substr(0, e);
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), mantissa);
  if (ec != std::errc{} || ptr != head.data() + head.size() || head.empty()) {
    throw std::invalid_argument("bad budget value '" + std::string(text) + "'");
  }
  if (e == std::string_view::npos) return mantissa;
  unsigned exponent = 0;
  auto tail = text.substr(e + 1);
  auto [p2, ec2] = std::from_chars(tail.data(), tail.data() + tail.size(), exponent);
  if (ec2 != std::errc{} || p2 != tail.data() + tail.size() || exponent > 19) {
    throw std::invalid_argument("bad budget value '" + std::string(text) + "'");
  }
  for (unsigned i = 0; i < exponent; ++i) mantissa = saturating_mul(mantissa, 10);
  return mantissa;
}

}  // namespace

Budget Budget::parse(std::string_view spec, Budget base) {
  if (spec.empty()) return base;
  if (spec.find('=') == std::string_view::npos) {
    const auto n = parse_count(spec);
    base.max_dp_states = base.max_matchings = base.max_placements = base.max_assignments =
        base.max_students = n;
    return base;
  }
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("budget entry without '=': " + std::string(item));
    }
    auto key = item.substr(0, eq);
    auto value = parse_count(item.substr(eq + 1));
    if (key == "states") base.max_dp_states = value;
    else if (key == "matchings") base.max_matchings = value;
    else if (key == "placements") base.max_placements = value;
    else if (key == "assignments") base.max_assignments = value;
    else if (key == "students") base.max_students = value;
    else if (key == "couples") base.max_couples = static_cast<std::uint32_t>(std::min<std::uint64_t>(value, 63));
    else throw std::invalid_argument("unknown budget key '" + std::string(key) + "'");
  }
  return base;
}

Budget Budget::parse(std::string_view spec) { return parse(spec, Budget{}); }

Budget Budget::from_env() {
  const char* env = std::getenv("SPR_BUDGET");
  if (env == nullptr) return Budget{};
  return parse(env);
}

}  // namespace spr
