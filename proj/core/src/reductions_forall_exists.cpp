#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "spr/errors.hpp"
#include "spr/reductions.hpp"

namespace spr {

void validate(const ForallExists3dmInstance& src) {
  std::vector<std::string> issues;
  if (src.d == 0) issues.push_back("d must be at least 1");
  std::vector<Triplet> all = src.universal;
  all.insert(all.end(), src.existential.begin(), src.existential.end());
  for (std::size_t x = 0; x < all.size(); ++x) {
    const auto& t = all[x];
    if (t.a >= src.d || t.b >= src.d || t.c >= src.d) {
      issues.push_back("triplet " + std::to_string(x) + " references an element outside [0, d)");
    }
    for (std::size_t y = 0; y < x; ++y) {
      if (all[y] == t) issues.push_back("triplet " + std::to_string(x) + " is repeated");
    }
  }
  for (std::size_t x = 0; x < src.universal.size(); ++x) {
    for (std::size_t y = 0; y < x; ++y) {
      if (src.universal[x].a == src.universal[y].a) {
        issues.push_back("universal triplets " + std::to_string(y) + " and " + std::to_string(x) +
                         " share their A element");
      }
    }
  }
  std::vector<bool> a(src.d), b(src.d), c(src.d);
  for (const auto& t : all) {
    if (t.a < src.d) a[t.a] = true;
    if (t.b < src.d) b[t.b] = true;
    if (t.c < src.d) c[t.c] = true;
  }
  for (std::size_t e = 0; e < src.d; ++e) {
    if (!a[e] || !b[e] || !c[e]) {
      issues.push_back("element " + std::to_string(e + 1) + " of A, B or C is in no triplet");
    }
  }
  if (!issues.empty()) throw InvalidInstance(std::move(issues));
}

namespace {

bool window_holds(const std::vector<BigInt>& weights, const BigInt& theta) {
  return std::all_of(weights.begin(), weights.end(),
                     [&](const BigInt& w) { return 5 * w > theta && 3 * w < theta; });
}

}  // namespace

ForallExistsGadget reduce_fe3dm_to_fe4partition(const ForallExists3dmInstance& src) {
  validate(src);
  std::vector<Triplet> all = src.universal;
  all.insert(all.end(), src.existential.begin(), src.existential.end());
  const std::size_t total = all.size();
  const std::size_t d = src.d;

  DigitTable table;
  std::vector<std::size_t> actual_a(d, 0);
  // digits z_0 .. z_5
  auto add = [&](std::string label, std::vector<BigInt> digits) {
    table.labels.push_back(std::move(label));
    table.rows.push_back(std::move(digits));
  };
  for (std::size_t t = 0; t < total; ++t) {
    const auto& x = all[t];
    add((t < src.universal.size() ? "m" : "n") + std::to_string(t + 1),
        {0, -BigInt(x.c + 1), -BigInt(x.b + 1), -BigInt(x.a + 1), 1, 1});
  }
  std::vector<std::size_t> count_a(d, 0), count_b(d, 0), count_c(d, 0);
  for (const auto& x : all) {
    ++count_a[x.a];
    ++count_b[x.b];
    ++count_c[x.c];
  }
  auto elements = [&](char name, const std::vector<std::size_t>& count, std::size_t column, int z4,
                      int actual_z0) {
    for (std::size_t e = 0; e < d; ++e) {
      for (std::size_t copy = 0; copy < count[e]; ++copy) {
        if (name == 'a' && copy == 0) actual_a[e] = table.rows.size();
        std::vector<BigInt> digits(6, 0);
        digits[0] = copy == 0 ? actual_z0 : 0;
        digits[column] = e + 1;
        digits[4] = z4;
        digits[5] = 1;
        add(std::string(1, name) + std::to_string(e + 1) + (copy == 0 ? "" : "'" + std::to_string(copy)),
            std::move(digits));
      }
    }
  };
  elements('a', count_a, 3, 2, -2);
  elements('b', count_b, 2, 4, 1);
  elements('c', count_c, 1, 8, 1);
  table.target = {0, 0, 0, 0, 15, 4};

  ForallExistsGadget g;
  g.nominal_base = BigInt(4 * total * d + 1);
  // smallest base from the nominal one up that keeps every weight inside the
  // window and the column sums carry-free
  table.base = g.nominal_base;
  while (!window_holds(table.values(), table.target_value()) || !audit_no_carry(table)) ++table.base;

  g.instance.weights = table.values();
  g.instance.theta = table.target_value();
  for (std::size_t t = 0; t < src.universal.size(); ++t) {
    g.instance.couples.emplace_back(t, actual_a[src.universal[t].a]);
  }
  validate(g.instance);
  g.table = std::move(table);
  g.manifest = {{"reduction", "lemma3"},
                {"nominal_base", bigint_to_json(g.nominal_base)},
                {"base", bigint_to_json(g.table.base)},
                {"labels", g.table.labels},
                {"decode", "the forall-exists answers coincide"}};
  return g;
}

Verdict decode_fe4partition(const std::optional<ForallExistsAnswer>& answer) {
  if (!answer) return Verdict::undecided;
  return answer->holds ? Verdict::yes : Verdict::no;
}

Verdict solve_fe4partition(const ForallExistsGadget& gadget, const Budget& budget) {
  try {
    return decode_fe4partition(forall_exists_4partition(gadget.instance, budget));
  } catch (const BudgetExceeded&) {
    return Verdict::undecided;
  }
}

CoStableGadget reduce_fe4partition_to_costable(const ForallExistsInstance& src, const Budget& budget) {
  validate(src);
  const std::size_t m = src.subsets();
  const std::size_t l = src.couples.size();
  BigInt sum = 0;
  for (const BigInt& w : src.weights) sum += w;
  if (sum != src.theta * m) {
    throw InvalidInstance({"weights sum to " + sum.str() + ", expected m * theta = " + BigInt(src.theta * m).str()});
  }
  const BigInt students = sum - [&] {
    BigInt u = 0;
    for (const auto& c : src.couples) u += src.weights[c.first];
    return u;
  }() + 2;
  if (students > budget.max_students) {
    throw BudgetExceeded("reduction would emit " + students.str() + " students, budget is " +
                         std::to_string(budget.max_students));
  }
  auto seats = [](const BigInt& v) { return v.convert_to<Seats>(); };
  const Seats theta = seats(src.theta);

  auto p = [](std::size_t i) { return "p_" + std::to_string(i); };
  auto p_prime = [](std::size_t i) { return "p'_" + std::to_string(i); };
  auto block = [](const std::string& prefix, Seats count) {
    std::vector<std::string> ids;
    for (Seats k = 1; k <= count; ++k) ids.push_back(prefix + "_" + std::to_string(k));
    return ids;
  };

  RawInstance raw;
  std::vector<std::vector<std::string>> sv(l), s(m);
  for (std::size_t i = 1; i <= l; ++i) {
    sv[i - 1] = block("sv_" + std::to_string(i), seats(src.weights[src.couples[i - 1].second]));
    for (const auto& id : sv[i - 1]) raw.students.push_back({id, {p_prime(i), p(i)}});
  }
  for (std::size_t i = 1; i <= m; ++i) {
    Seats size = theta;
    if (i <= l) {
      size -= seats(src.weights[src.couples[i - 1].first]) + seats(src.weights[src.couples[i - 1].second]);
    }
    s[i - 1] = block("s_" + std::to_string(i), size);
    for (const auto& id : s[i - 1]) raw.students.push_back({id, {p(i)}});
  }
  raw.students.push_back({"s_a", {"p_a", "p_b"}});
  raw.students.push_back({"s_b", {"p_b", "p_a"}});

  for (std::size_t i = 1; i <= l; ++i) raw.projects.push_back({p_prime(i), sv[i - 1]});
  for (std::size_t i = 1; i <= m; ++i) {
    std::vector<std::string> prefs;
    if (i <= l) prefs = sv[i - 1];
    prefs.insert(prefs.end(), s[i - 1].begin(), s[i - 1].end());
    raw.projects.push_back({p(i), std::move(prefs)});
  }
  raw.projects.push_back({"p_a", {"s_b", "s_a"}});
  raw.projects.push_back({"p_b", {"s_a", "s_b"}});

  std::vector<bool> coupled(src.weights.size(), false);
  for (std::size_t i = 1; i <= l; ++i) {
    const auto [u, v] = src.couples[i - 1];
    coupled[u] = coupled[v] = true;
    std::vector<std::string> compat{p_prime(i)};
    for (std::size_t j = 1; j <= m; ++j) {
      if (j != i) compat.push_back(p(j));
    }
    raw.resources.push_back({"r_v" + std::to_string(i), seats(src.weights[v]), std::move(compat)});
  }
  std::vector<std::string> targets;
  for (std::size_t j = 1; j <= m; ++j) targets.push_back(p(j));
  for (std::size_t k = 0; k < src.weights.size(); ++k) {
    if (!coupled[k]) raw.resources.push_back({"r_w" + std::to_string(k + 1), seats(src.weights[k]), targets});
  }
  std::vector<std::string> r1_targets{"p_a", "p_b"};
  r1_targets.insert(r1_targets.end(), targets.begin(), targets.end());
  raw.resources.push_back({"r_1", 1, std::move(r1_targets)});

  CoStableGadget g{make_instance(raw), {}};
  g.manifest = {{"reduction", "lemma4"},
                {"source", forall_exists_to_json(src)},
                {"decode", "no stable matching iff every sigma has a sigma-satisfying partition"}};
  return g;
}

Verdict decode_costable(const std::optional<std::optional<FeasiblePair>>& stable) {
  if (!stable) return Verdict::undecided;
  return stable->has_value() ? Verdict::no : Verdict::yes;
}

Verdict solve_costable(const CoStableGadget& gadget, const SearchOptions& options) {
  try {
    return decode_costable(search_stable(gadget.instance, options));
  } catch (const BudgetExceeded&) {
    return Verdict::undecided;
  }
}

bool forall_exists_3dm_bruteforce(const ForallExists3dmInstance& src) {
  validate(src);
  const std::size_t nm = src.universal.size();
  const std::size_t nn = src.existential.size();
  if (nm + nn > 24) throw BudgetExceeded("forall-exists 3DM brute force limited to 24 triplets");
  auto perfect = [&](std::uint64_t mmask, std::uint64_t nmask) {
    std::vector<int> a(src.d), b(src.d), c(src.d);
    auto take = [&](const Triplet& t) { ++a[t.a], ++b[t.b], ++c[t.c]; };
    for (std::size_t t = 0; t < nm; ++t) {
      if (mmask >> t & 1) take(src.universal[t]);
    }
    for (std::size_t t = 0; t < nn; ++t) {
      if (nmask >> t & 1) take(src.existential[t]);
    }
    for (std::size_t e = 0; e < src.d; ++e) {
      if (a[e] != 1 || b[e] != 1 || c[e] != 1) return false;
    }
    return true;
  };
  for (std::uint64_t mmask = 0; mmask < (std::uint64_t{1} << nm); ++mmask) {
    bool found = false;
    for (std::uint64_t nmask = 0; nmask < (std::uint64_t{1} << nn) && !found; ++nmask) {
      found = perfect(mmask, nmask);
    }
    if (!found) return false;
  }
  return true;
}

bool forall_exists_4partition_bruteforce(const ForallExistsInstance& src) {
  validate(src);
  const std::size_t n = src.weights.size();
  const std::size_t m = src.subsets();
  const std::size_t l = src.couples.size();
  std::uint64_t per_sigma = 1;
  for (std::size_t k = 0; k < n; ++k) per_sigma = saturating_mul(per_sigma, m);
  if (per_sigma > 10'000'000) throw BudgetExceeded("forall-exists 4-partition brute force too large");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    Sigma sigma(l);
    // first couple most significant, matching the solver's order
    for (std::size_t i = 0; i < l; ++i) sigma[i] = mask >> (l - 1 - i) & 1;
    std::vector<std::size_t> digit(n, 0);
    bool found = false;
    for (;;) {
      Partition part(m);
      for (std::size_t k = 0; k < n; ++k) part[digit[k]].push_back(k);
      if (is_sigma_satisfying(src, sigma, part)) {
        found = true;
        break;
      }
      std::size_t k = n;
      bool done = true;
      while (k > 0) {
        --k;
        if (++digit[k] < m) {
          done = false;
          break;
        }
        digit[k] = 0;
      }
      if (done) break;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace spr
