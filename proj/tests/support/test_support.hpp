#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "spr/io.hpp"
#include "spr/partition.hpp"
#include "spr/reductions.hpp"

namespace spr::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(SPR_TEST_DATA_DIR) / name;
}

inline SprInstance data_instance(const std::string& name) { return load_instance(data_path(name)); }

inline Matching matching_of(const SprInstance& inst,
                            std::initializer_list<std::pair<const char*, const char*>> pairs) {
  Matching y(inst.num_students());
  for (auto [s, p] : pairs) y.assign(*inst.find_student(s), *inst.find_project(p));
  return y;
}

inline Allocation allocation_of(const SprInstance& inst, std::initializer_list<const char*> projects) {
  Allocation mu;
  for (const char* p : projects) mu.placement.push_back(*inst.find_project(p));
  return mu;
}

// Calls visit on every nondecreasing sequence of `count` values drawn from [lo, hi].
inline void for_each_multiset(std::size_t count, Seats lo, Seats hi,
                              const std::function<void(const std::vector<Seats>&)>& visit) {
  std::vector<Seats> cur;
  std::function<void(Seats)> rec = [&](Seats from) {
    if (cur.size() == count) {
      visit(cur);
      return;
    }
    for (Seats w = from; w <= hi; ++w) {
      cur.push_back(w);
      rec(w);
      cur.pop_back();
    }
  };
  rec(lo);
}

// Multisets of 4m weights summing to m*theta with every weight strictly inside (theta/5, theta/3).
inline std::vector<FourPartitionInstance> windowed_four_partitions(std::size_t m, Seats theta_lo, Seats theta_hi) {
  std::vector<FourPartitionInstance> out;
  for (Seats theta = theta_lo; theta <= theta_hi; ++theta) {
    const Seats lo = theta / 5 + 1;
    const Seats hi = (theta - 1) / 3;
    if (lo > hi) continue;
    for_each_multiset(4 * m, lo, hi, [&](const std::vector<Seats>& w) {
      Seats sum = 0;
      for (Seats x : w) sum += x;
      if (sum == static_cast<Seats>(m) * theta) out.push_back({w, theta});
    });
  }
  return out;
}

inline std::vector<BigInt> to_big(const std::vector<Seats>& v) { return {v.begin(), v.end()}; }

}  // namespace spr::testing
