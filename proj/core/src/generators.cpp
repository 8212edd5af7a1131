#include "spr/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace spr {
namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

SprInstance random_instance(const RandomInstanceParams& params, std::uint64_t seed) {
  if (params.min_students > params.max_students || params.min_projects > params.max_projects ||
      params.min_resources > params.max_resources || params.min_capacity > params.max_capacity ||
      params.min_projects == 0 || params.min_capacity < 1) {
    throw std::invalid_argument("inconsistent random instance parameters");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution compat(params.compat_density);
  std::bernoulli_distribution accept(params.accept_probability);

  const std::size_t ns = draw(rng, params.min_students, params.max_students);
  const std::size_t np = draw(rng, params.min_projects, params.max_projects);
  const std::size_t nr = draw(rng, params.min_resources, params.max_resources);

  RawInstance raw;
  for (std::size_t p = 0; p < np; ++p) raw.projects.push_back({"p" + std::to_string(p + 1), {}});

  std::vector<std::vector<std::size_t>> listed_by(np);
  std::vector<std::size_t> projects(np);
  std::iota(projects.begin(), projects.end(), 0);
  for (std::size_t s = 0; s < ns; ++s) {
    RawInstance::Agent student{"s" + std::to_string(s + 1), {}};
    std::shuffle(projects.begin(), projects.end(), rng);
    const std::size_t len = draw(rng, 0, std::min(params.max_pref_length, np));
    for (std::size_t k = 0; k < len; ++k) {
      student.prefs.push_back(raw.projects[projects[k]].id);
      listed_by[projects[k]].push_back(s);
    }
    raw.students.push_back(std::move(student));
  }
  for (std::size_t p = 0; p < np; ++p) {
    auto& pool = listed_by[p];
    std::shuffle(pool.begin(), pool.end(), rng);
    for (std::size_t s : pool) {
      if (accept(rng)) raw.projects[p].prefs.push_back(raw.students[s].id);
    }
  }
  for (std::size_t r = 0; r < nr; ++r) {
    RawInstance::Resource res;
    res.id = "r" + std::to_string(r + 1);
    res.capacity = std::uniform_int_distribution<Seats>(params.min_capacity, params.max_capacity)(rng);
    for (std::size_t p = 0; p < np; ++p) {
      if (compat(rng)) res.compatible.push_back(raw.projects[p].id);
    }
    if (res.compatible.empty()) res.compatible.push_back(raw.projects[draw(rng, 0, np - 1)].id);
    raw.resources.push_back(std::move(res));
  }
  return make_instance(raw);
}

SprInstance example1_instance() {
  RawInstance raw;
  raw.students = {{"s_a", {"p_a", "p_b"}}, {"s_b", {"p_b", "p_a"}}};
  raw.projects = {{"p_a", {"s_b", "s_a"}}, {"p_b", {"s_a", "s_b"}}};
  raw.resources = {{"r", 1, {"p_a", "p_b"}}};
  return make_instance(raw);
}

}  // namespace spr
