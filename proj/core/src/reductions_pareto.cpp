#include <algorithm>
#include <limits>
#include <string>

#include "spr/errors.hpp"
#include "spr/mechanisms.hpp"
#include "spr/reductions.hpp"

namespace spr {

std::vector<BigInt> DigitTable::values() const {
  std::vector<BigInt> out;
  for (const auto& row : rows) {
    BigInt v = 0;
    for (std::size_t i = row.size(); i-- > 0;) v = v * base + row[i];
    out.push_back(v);
  }
  return out;
}

BigInt DigitTable::target_value() const {
  BigInt v = 0;
  for (std::size_t i = target.size(); i-- > 0;) v = v * base + target[i];
  return v;
}

std::vector<BigInt> DigitTable::column_totals() const {
  std::vector<BigInt> totals(target.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) totals.at(i) += row[i];
  }
  return totals;
}

bool audit_no_carry(const DigitTable& table) {
  const auto totals = table.column_totals();
  for (const BigInt& t : totals) {
    if (t < 0 || t >= table.base) return false;
  }
  BigInt sum = 0;
  for (const BigInt& v : table.values()) sum += v;
  auto digits = to_digits(sum, table.base);
  digits.resize(std::max(digits.size(), totals.size()), 0);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const BigInt expected = i < totals.size() ? totals[i] : BigInt(0);
    if (digits[i] != expected) return false;
  }
  return true;
}

bool audit_column_balance(const DigitTable& table, std::size_t subsets,
                          const std::vector<std::size_t>& skip) {
  const auto totals = table.column_totals();
  for (std::size_t i = 0; i < totals.size(); ++i) {
    if (std::find(skip.begin(), skip.end(), i) != skip.end()) continue;
    if (totals[i] != table.target[i] * subsets) return false;
  }
  return true;
}

namespace {

void check_triplets(std::size_t d, const std::vector<Triplet>& triplets, const char* what,
                    std::vector<std::string>& issues) {
  for (std::size_t t = 0; t < triplets.size(); ++t) {
    const auto& x = triplets[t];
    if (x.a >= d || x.b >= d || x.c >= d) {
      issues.push_back(std::string(what) + " triplet " + std::to_string(t) + " references an element outside [0, d)");
    }
  }
}

void check_coverage(std::size_t d, const std::vector<Triplet>& triplets, std::vector<std::string>& issues) {
  std::vector<int> a(d, 0), b(d, 0), c(d, 0);
  for (const auto& t : triplets) {
    if (t.a < d) a[t.a] = 1;
    if (t.b < d) b[t.b] = 1;
    if (t.c < d) c[t.c] = 1;
  }
  for (std::size_t e = 0; e < d; ++e) {
    if (!a[e]) issues.push_back("element a_" + std::to_string(e + 1) + " is in no triplet");
    if (!b[e]) issues.push_back("element b_" + std::to_string(e + 1) + " is in no triplet");
    if (!c[e]) issues.push_back("element c_" + std::to_string(e + 1) + " is in no triplet");
  }
}

}  // namespace

void validate(const Max3dmInstance& src) {
  std::vector<std::string> issues;
  if (src.d == 0) issues.push_back("d must be at least 1");
  if (src.triplets.empty()) issues.push_back("at least one triplet is required");
  if (src.payoffs.size() != src.triplets.size()) issues.push_back("one payoff per triplet is required");
  for (const BigInt& v : src.payoffs) {
    if (v < 0) issues.push_back("payoffs must be non-negative");
  }
  check_triplets(src.d, src.triplets, "N", issues);
  check_coverage(src.d, src.triplets, issues);
  if (!issues.empty()) throw InvalidInstance(std::move(issues));
}

ParetoGadget reduce_max3dm_to_pareto_partition(const Max3dmInstance& original) {
  validate(original);
  // With a single triplet the top digit of its integer is negative; a
  // zero-payoff copy changes no optimum and keeps every integer positive.
  Max3dmInstance src = original;
  const bool padded = src.triplets.size() == 1;
  if (padded) {
    src.triplets.push_back(src.triplets.front());
    src.payoffs.push_back(0);
  }
  const std::size_t n = src.triplets.size();
  const std::size_t d = src.d;
  BigInt total_payoff = 0;
  for (const BigInt& v : src.payoffs) total_payoff += v;

  const BigInt bn = n;
  const BigInt bd = d;
  const BigInt sigma_n = bn * (bn + 1) / 2;
  ParetoGadget g;
  g.total_payoff = total_payoff;
  g.table.base = std::max<BigInt>(30 * bn * bn * bn * bd, bn * total_payoff) + 1;
  // digits z_0 .. z_7
  auto add = [&](std::string label, std::vector<BigInt> digits) {
    g.table.labels.push_back(std::move(label));
    g.table.rows.push_back(std::move(digits));
  };
  for (std::size_t t = 0; t < n; ++t) {
    const auto& x = src.triplets[t];
    add("t" + std::to_string(t + 1),
        {total_payoff, 3 * bd + 3 * bn - 3, 3 * sigma_n - (t + 1), -BigInt(x.c + 1), -BigInt(x.b + 1),
         -BigInt(x.a + 1), 24 * bn - 15, 3 * bn - 4});
  }
  std::vector<std::size_t> count_a(d, 0), count_b(d, 0), count_c(d, 0);
  for (const auto& x : src.triplets) {
    ++count_a[x.a];
    ++count_b[x.b];
    ++count_c[x.c];
  }
  auto elements = [&](char name, const std::vector<std::size_t>& count, std::size_t column, int z6) {
    for (std::size_t e = 0; e < d; ++e) {
      for (std::size_t copy = 0; copy < count[e]; ++copy) {
        std::vector<BigInt> digits(8, 0);
        digits[1] = copy == 0 ? 1 : 0;
        digits[column] = e + 1;
        digits[6] = z6;
        digits[7] = 1;
        add(std::string(1, name) + std::to_string(e + 1) + (copy == 0 ? "" : "'" + std::to_string(copy)),
            std::move(digits));
      }
    }
  };
  elements('a', count_a, 5, 1);
  elements('b', count_b, 4, 2);
  elements('c', count_c, 3, 4);
  for (std::size_t t = 0; t < n; ++t) {
    for (int q = 0; q < 4; ++q) {
      add("v" + std::to_string(t + 1) + ":" + std::to_string(q),
          {q == 0 ? BigInt(-src.payoffs[t]) : BigInt(0), q, BigInt(t + 1), 0, 0, 0, 8, 1});
    }
  }
  g.table.target = {0, 3 * bd + 3 * bn, 3 * sigma_n, 0, 0, 0, 24 * bn, 3 * bn};

  g.instance.weights = g.table.values();
  g.instance.subsets = n + 1;
  g.instance.theta = g.table.target_value();
  validate(g.instance);

  g.manifest = {{"reduction", "lemma1"},
                {"base", bigint_to_json(g.table.base)},
                {"padded_with_zero_payoff_copy", padded},
                {"total_payoff", bigint_to_json(total_payoff)},
                {"labels", g.table.labels},
                {"decode", "optimum = total_payoff + the single nonzero deficit (0 if none)"}};
  return g;
}

std::optional<BigInt> decode_pareto_partition(const ParetoGadget& gadget, const DeficitVector& deficits) {
  if (deficits.size() != gadget.instance.subsets) return std::nullopt;
  std::optional<BigInt> star;
  for (const BigInt& d : deficits) {
    if (d == 0) continue;
    if (star) return std::nullopt;
    star = d;
  }
  const BigInt left_out = star ? BigInt(-*star) : BigInt(0);
  if (left_out < 0 || left_out > gadget.total_payoff) return std::nullopt;
  return gadget.total_payoff - left_out;
}

NwFindGadget reduce_pareto_partition_to_nw_find(const PartitionInstance& src, const Budget& budget) {
  validate(src);
  const BigInt students = src.theta * src.subsets;
  if (students > budget.max_students) {
    throw BudgetExceeded("reduction would emit " + students.str() + " students, budget is " +
                         std::to_string(budget.max_students));
  }
  for (const BigInt& w : src.weights) {
    if (w > std::numeric_limits<Seats>::max() / 2) throw BudgetExceeded("weight too large for a resource capacity");
  }
  const auto theta = src.theta.convert_to<Seats>();
  RawInstance raw;
  std::vector<std::string> all;
  for (std::size_t i = 1; i <= src.subsets; ++i) {
    const std::string p = "p_" + std::to_string(i);
    all.push_back(p);
    RawInstance::Agent project{p, {}};
    for (Seats k = 1; k <= theta; ++k) {
      project.prefs.push_back("s_" + std::to_string(i) + "_" + std::to_string(k));
      raw.students.push_back({project.prefs.back(), {p}});
    }
    raw.projects.push_back(std::move(project));
  }
  for (std::size_t k = 0; k < src.weights.size(); ++k) {
    raw.resources.push_back({"r_" + std::to_string(k + 1), src.weights[k].convert_to<Seats>(), all});
  }
  NwFindGadget g{make_instance(raw), src.subsets, {}};
  g.manifest = {{"reduction", "lemma2"},
                {"source", partition_instance_to_json(src)},
                {"decode", "V_i = weights whose resource r_k is placed on p_i"}};
  return g;
}

Partition decode_nw_find(const NwFindGadget& gadget, const FeasiblePair& pair) {
  require_valid_allocation(gadget.instance, pair.allocation);
  Partition out(gadget.subsets);
  for (ResourceIx r = 0; r < pair.allocation.placement.size(); ++r) {
    out[pair.allocation.placement[r]].push_back(r);
  }
  return out;
}

std::optional<Partition> solve_nw_find(const NwFindGadget& gadget, const Budget& budget) {
  try {
    return decode_nw_find(gadget, serial_dictatorship(gadget.instance, SdOptions{budget, {}}));
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

BigInt max3dm_bruteforce(const Max3dmInstance& src) {
  validate(src);
  const std::size_t n = src.triplets.size();
  if (n > 24) throw BudgetExceeded("max3dm brute force limited to 24 triplets");
  BigInt best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<bool> a(src.d), b(src.d), c(src.d);
    BigInt value = 0;
    bool ok = true;
    for (std::size_t t = 0; t < n && ok; ++t) {
      if (!(mask >> t & 1)) continue;
      const auto& x = src.triplets[t];
      ok = !a[x.a] && !b[x.b] && !c[x.c];
      a[x.a] = b[x.b] = c[x.c] = true;
      value += src.payoffs[t];
    }
    if (ok) best = std::max(best, value);
  }
  return best;
}

}  // namespace spr
