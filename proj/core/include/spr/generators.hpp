#pragma once

#include <cstdint>

#include "spr/instance.hpp"

namespace spr {

/// Ranges are inclusive; each instance draws its sizes from them.
struct RandomInstanceParams {
  std::size_t min_students = 1, max_students = 8;
  std::size_t min_projects = 1, max_projects = 3;
  std::size_t min_resources = 1, max_resources = 6;
  Seats min_capacity = 1, max_capacity = 3;
  /// Probability that a resource is compatible with a given project; every
  /// resource keeps at least one compatible project.
  double compat_density = 0.5;
  /// Students list between 0 and this many projects (capped at |P|).
  std::size_t max_pref_length = 3;
  /// Probability that a project lists a student who listed it.
  double accept_probability = 0.9;
};

/// Deterministic for a given (params, seed) on a given standard library.
SprInstance random_instance(const RandomInstanceParams& params, std::uint64_t seed);

/// Two students, two projects and one unit resource compatible with both:
/// s_a: p_a > p_b, s_b: p_b > p_a, p_a: s_b > s_a, p_b: s_a > s_b.
/// It has no stable matching.
SprInstance example1_instance();

}  // namespace spr
