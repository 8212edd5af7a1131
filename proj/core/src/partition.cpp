#include "spr/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <type_traits>

#include "spr/errors.hpp"

namespace spr {
namespace {

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

// The searches only add and compare numbers bounded by sum(W) + theta, so
// they run on the narrowest machine integer that holds that bound.
template <class T>
T narrow(const BigInt& v) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return v;
  } else if constexpr (std::is_same_v<T, std::int64_t>) {
    return v.convert_to<std::int64_t>();
  } else {
    const BigInt mag = abs(v);
    const auto lo = static_cast<UInt128>((mag & UINT64_MAX).convert_to<std::uint64_t>());
    const auto hi = static_cast<UInt128>((mag >> 64).convert_to<std::uint64_t>());
    const auto m = static_cast<Int128>((hi << 64) | lo);
    return v < 0 ? -m : m;
  }
}

template <class T>
BigInt widen(const T& v) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return v;
  } else if constexpr (std::is_same_v<T, std::int64_t>) {
    return BigInt(v);
  } else {
    const bool negative = v < 0;
    const auto mag = static_cast<UInt128>(negative ? -v : v);
    BigInt out = BigInt(static_cast<std::uint64_t>(mag >> 64));
    out <<= 64;
    out += static_cast<std::uint64_t>(mag);
    return negative ? BigInt(-out) : out;
  }
}

template <class Fn>
decltype(auto) with_width(const BigInt& magnitude, Fn&& fn) {
  if (magnitude < (BigInt(1) << 62)) return fn(std::type_identity<std::int64_t>{});
  if (magnitude < (BigInt(1) << 125)) return fn(std::type_identity<Int128>{});
  return fn(std::type_identity<BigInt>{});
}

BigInt magnitude_of(const std::vector<BigInt>& weights, const BigInt& theta) {
  BigInt total = theta;
  for (const BigInt& w : weights) total += w;
  return total + 1;
}

template <class T>
std::vector<T> narrow_all(const std::vector<BigInt>& values) {
  std::vector<T> out;
  out.reserve(values.size());
  for (const BigInt& v : values) out.push_back(narrow<T>(v));
  return out;
}

// Positions sorted by weight, heaviest first, ties by position.
template <class T>
std::vector<std::size_t> heaviest_first(const std::vector<T>& w) {
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
  return order;
}

template <class T>
class BoundDecider {
 public:
  BoundDecider(const std::vector<T>& weights, std::size_t subsets)
      : w_(weights), m_(subsets), order_(heaviest_first(weights)), suffix_(weights.size() + 1, T(0)) {
    for (std::size_t k = order_.size(); k-- > 0;) suffix_[k] = suffix_[k + 1] + w_[order_[k]];
  }

  // need[i] = theta + bound_i, the least sum subset i must reach
  std::optional<Partition> solve(std::vector<T> need) {
    need_ = std::move(need);
    total_need_ = T(0);
    for (const T& n : need_) total_need_ += n;
    owner_.assign(w_.size(), 0);
    dead_.clear();
    if (!go(0)) return std::nullopt;
    Partition out(m_);
    for (std::size_t k = 0; k < owner_.size(); ++k) out[owner_[k]].push_back(order_[k]);
    for (auto& part : out) std::sort(part.begin(), part.end());
    return out;
  }

 private:
  bool go(std::size_t k) {
    if (total_need_ == 0) {
      // every bound met: the rest goes to the first subset
      for (std::size_t j = k; j < order_.size(); ++j) owner_[j] = 0;
      return true;
    }
    if (k == order_.size() || suffix_[k] < total_need_) return false;

    std::vector<T> key = need_;
    std::sort(key.begin(), key.end());
    auto memo = std::make_pair(k, std::move(key));
    if (dead_.count(memo)) return false;

    const T& weight = w_[order_[k]];
    bool dumped = false;
    for (std::size_t i = 0; i < m_; ++i) {
      const T before = need_[i];
      if (before == 0) {
        // satisfied subsets are interchangeable as a dump; use the first
        if (dumped) continue;
        dumped = true;
        owner_[k] = i;
        if (go(k + 1)) return true;
        continue;
      }
      bool seen = false;
      for (std::size_t j = 0; j < i && !seen; ++j) seen = need_[j] == before;
      if (seen) continue;
      const T after = before > weight ? T(before - weight) : T(0);
      need_[i] = after;
      total_need_ -= before - after;
      owner_[k] = i;
      const bool ok = go(k + 1);
      need_[i] = before;
      total_need_ += before - after;
      if (ok) return true;
    }
    dead_.insert(std::move(memo));
    return false;
  }

  const std::vector<T>& w_;
  std::size_t m_;
  std::vector<std::size_t> order_;
  std::vector<T> suffix_;
  std::vector<T> need_;
  T total_need_{0};
  std::vector<std::size_t> owner_;
  std::set<std::pair<std::size_t, std::vector<T>>> dead_;
};

template <class T>
std::vector<T> needs_from_bounds(const std::vector<T>& bounds, const T& theta) {
  std::vector<T> need;
  need.reserve(bounds.size());
  for (const T& b : bounds) need.push_back(theta + b);
  return need;
}

template <class T>
T deficit_of(const std::vector<T>& w, const std::vector<std::size_t>& part, const T& theta) {
  T sum{0};
  for (std::size_t k : part) sum += w[k];
  return sum >= theta ? T(0) : T(sum - theta);
}

void check_bounds(const PartitionInstance& inst, const std::vector<BigInt>& bounds) {
  if (bounds.size() != inst.subsets) {
    throw ContractViolation("expected " + std::to_string(inst.subsets) + " bounds, got " +
                            std::to_string(bounds.size()));
  }
  for (const BigInt& b : bounds) {
    if (b < -inst.theta || b > 0) throw ContractViolation("bound " + b.str() + " outside [-theta, 0]");
  }
}

void check_partition(std::size_t items, std::size_t subsets, const Partition& partition) {
  if (partition.size() != subsets) {
    throw ContractViolation("partition has " + std::to_string(partition.size()) +
                            " subsets, expected " + std::to_string(subsets));
  }
  std::vector<bool> seen(items, false);
  std::size_t count = 0;
  for (const auto& part : partition) {
    for (std::size_t k : part) {
      if (k >= items || seen[k]) throw ContractViolation("partition is not a disjoint cover of the weights");
      seen[k] = true;
      ++count;
    }
  }
  if (count != items) throw ContractViolation("partition is not a disjoint cover of the weights");
}

}  // namespace

void validate(const PartitionInstance& inst) {
  std::vector<std::string> issues;
  if (inst.subsets < 1) issues.push_back("m must be at least 1");
  if (inst.theta < 0) issues.push_back("theta must be non-negative");
  for (std::size_t k = 0; k < inst.weights.size(); ++k) {
    if (inst.weights[k] < 1) {
      issues.push_back("weight " + std::to_string(k) + " must be positive (got " + inst.weights[k].str() + ")");
    }
  }
  if (!issues.empty()) throw InvalidInstance(std::move(issues));
}

DeficitVector deficit_vector(const PartitionInstance& inst, const Partition& partition) {
  check_partition(inst.weights.size(), inst.subsets, partition);
  DeficitVector out;
  for (const auto& part : partition) out.push_back(deficit_of(inst.weights, part, inst.theta));
  return out;
}

bool deficits_dominate(const DeficitVector& a, const DeficitVector& b) {
  if (a.size() != b.size()) throw ContractViolation("deficit vectors differ in length");
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    strict = strict || a[i] > b[i];
  }
  return strict;
}

std::optional<Partition> lower_bound_decider(const PartitionInstance& inst,
                                             const std::vector<BigInt>& bounds) {
  validate(inst);
  check_bounds(inst, bounds);
  return with_width(magnitude_of(inst.weights, inst.theta), [&]<class T>(std::type_identity<T>) {
    const auto w = narrow_all<T>(inst.weights);
    BoundDecider<T> decider(w, inst.subsets);
    return decider.solve(needs_from_bounds(narrow_all<T>(bounds), narrow<T>(inst.theta)));
  });
}

PartitionResult leximax_pareto_partition(const PartitionInstance& inst) {
  validate(inst);
  Partition best = with_width(magnitude_of(inst.weights, inst.theta), [&]<class T>(std::type_identity<T>) {
    const auto w = narrow_all<T>(inst.weights);
    const T theta = narrow<T>(inst.theta);
    BoundDecider<T> decider(w, inst.subsets);
    std::vector<T> bounds(inst.subsets, T(-theta));
    Partition witness = *decider.solve(needs_from_bounds(bounds, theta));
    for (std::size_t i = 0; i < inst.subsets; ++i) {
      T lo = deficit_of(w, witness[i], theta);
      T hi{0};
      while (lo < hi) {
        const T mid = lo + (hi - lo + 1) / 2;
        bounds[i] = mid;
        if (auto found = decider.solve(needs_from_bounds(bounds, theta))) {
          witness = std::move(*found);
          lo = deficit_of(w, witness[i], theta);
        } else {
          hi = mid - 1;
        }
      }
      bounds[i] = lo;
    }
    return witness;
  });
  PartitionResult result{std::move(best), {}};
  result.deficits = deficit_vector(inst, result.partition);
  return result;
}

bool is_pareto_efficient_partition(const PartitionInstance& inst, const Partition& partition,
                                   const Budget& budget) {
  validate(inst);
  const DeficitVector current = deficit_vector(inst, partition);
  const std::size_t n = inst.weights.size();
  const std::size_t m = inst.subsets;
  if (m == 1) return true;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total = saturating_mul(total, m);
  if (total > budget.max_assignments) {
    throw BudgetExceeded("Pareto partition check needs " +
                         (total == UINT64_MAX ? std::string("more than 2^64") : std::to_string(total)) +
                         " assignments, budget is " + std::to_string(budget.max_assignments));
  }
  return with_width(magnitude_of(inst.weights, inst.theta), [&]<class T>(std::type_identity<T>) {
    const auto w = narrow_all<T>(inst.weights);
    const T theta = narrow<T>(inst.theta);
    const auto floor = narrow_all<T>(current);
    std::vector<std::size_t> digit(n, 0);
    std::vector<T> sum(m, T(0));
    for (const T& x : w) sum[0] += x;
    for (;;) {
      bool all = true;
      bool strict = false;
      for (std::size_t i = 0; i < m && all; ++i) {
        const T d = sum[i] >= theta ? T(0) : T(sum[i] - theta);
        all = d >= floor[i];
        strict = strict || d > floor[i];
      }
      if (all && strict) return false;
      std::size_t k = n;
      for (;;) {
        if (k == 0) return true;
        --k;
        sum[digit[k]] -= w[k];
        if (++digit[k] < m) {
          sum[digit[k]] += w[k];
          break;
        }
        digit[k] = 0;
        sum[0] += w[k];
      }
    }
  });
}

void validate(const ForallExistsInstance& inst) {
  std::vector<std::string> issues;
  const std::size_t n = inst.weights.size();
  if (n == 0 || n % 4 != 0) {
    issues.push_back("weight count must be a positive multiple of 4 (got " + std::to_string(n) + ")");
  }
  for (std::size_t k = 0; k < n; ++k) {
    const BigInt& w = inst.weights[k];
    if (!(5 * w > inst.theta && 3 * w < inst.theta)) {
      issues.push_back("weight " + std::to_string(k) + " = " + w.str() +
                       " is outside the open window (theta/5, theta/3)");
    }
  }
  if (inst.couples.size() > inst.subsets()) {
    issues.push_back("more couples than subsets");
  }
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < inst.couples.size(); ++i) {
    for (std::size_t pos : {inst.couples[i].first, inst.couples[i].second}) {
      if (pos >= n) {
        issues.push_back("couple " + std::to_string(i) + " references position " + std::to_string(pos) +
                         " out of range");
      } else if (used[pos]) {
        issues.push_back("position " + std::to_string(pos) + " appears in more than one couple slot");
      } else {
        used[pos] = true;
      }
    }
  }
  if (!issues.empty()) throw InvalidInstance(std::move(issues));
}

bool is_sigma_satisfying(const ForallExistsInstance& inst, const Sigma& sigma,
                         const Partition& partition) {
  const std::size_t m = inst.subsets();
  if (sigma.size() != inst.couples.size()) throw ContractViolation("sigma length differs from couple count");
  check_partition(inst.weights.size(), m, partition);
  for (const auto& part : partition) {
    if (part.size() != 4) return false;
    BigInt sum = 0;
    for (std::size_t k : part) sum += inst.weights[k];
    if (sum != inst.theta) return false;
  }
  auto in = [&](std::size_t pos, std::size_t i) {
    return std::find(partition[i].begin(), partition[i].end(), pos) != partition[i].end();
  };
  for (std::size_t i = 0; i < inst.couples.size(); ++i) {
    if (!in(inst.couples[i].first, i)) return false;
    if (in(inst.couples[i].second, i) != sigma[i]) return false;
  }
  return true;
}

namespace {

template <class T>
class SigmaSearch {
 public:
  SigmaSearch(const ForallExistsInstance& inst, const Sigma& sigma)
      : m_(inst.subsets()),
        labeled_(inst.couples.size()),
        theta_(narrow<T>(inst.theta)),
        w_(narrow_all<T>(inst.weights)),
        owner_(w_.size(), kNone),
        avoid_(w_.size(), kNone),
        count_(m_, 0),
        sum_(m_, T(0)) {
    for (std::size_t i = 0; i < labeled_; ++i) {
      const auto [u, v] = inst.couples[i];
      place(u, i);
      if (sigma[i]) place(v, i);
      else avoid_[v] = i;
    }
    for (std::size_t k : heaviest_first(w_)) {
      if (owner_[k] == kNone) free_.push_back(k);
    }
  }

  std::optional<Partition> run() {
    T total{0};
    for (const T& x : w_) total += x;
    if (total != theta_ * static_cast<T>(static_cast<std::int64_t>(m_))) return std::nullopt;
    for (std::size_t i = 0; i < m_; ++i) {
      if (count_[i] > 4 || sum_[i] > theta_) return std::nullopt;
    }
    if (!go(0)) return std::nullopt;
    Partition out(m_);
    for (std::size_t k = 0; k < w_.size(); ++k) out[owner_[k]].push_back(k);
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void place(std::size_t k, std::size_t i) {
    owner_[k] = i;
    ++count_[i];
    sum_[i] += w_[k];
  }
  void lift(std::size_t k) {
    const std::size_t i = owner_[k];
    owner_[k] = kNone;
    --count_[i];
    sum_[i] -= w_[k];
  }

  bool go(std::size_t idx) {
    if (idx == free_.size()) {
      for (std::size_t i = 0; i < m_; ++i) {
        if (count_[i] != 4 || sum_[i] != theta_) return false;
      }
      return true;
    }
    std::pair<std::size_t, std::vector<std::pair<std::size_t, T>>> key{idx, {}};
    for (std::size_t i = 0; i < m_; ++i) key.second.emplace_back(count_[i], sum_[i]);
    std::sort(key.second.begin() + static_cast<std::ptrdiff_t>(labeled_), key.second.end());
    if (dead_.count(key)) return false;

    const std::size_t k = free_[idx];
    bool opened = false;
    for (std::size_t i = 0; i < m_; ++i) {
      if (count_[i] == 4 || sum_[i] + w_[k] > theta_ || avoid_[k] == i) continue;
      if (i >= labeled_ && count_[i] == 0) {
        // empty unlabeled subsets are interchangeable
        if (opened) continue;
        opened = true;
      }
      place(k, i);
      if (go(idx + 1)) return true;
      lift(k);
    }
    dead_.insert(std::move(key));
    return false;
  }

  std::size_t m_;
  std::size_t labeled_;
  T theta_;
  std::vector<T> w_;
  std::vector<std::size_t> owner_;
  std::vector<std::size_t> avoid_;
  std::vector<std::size_t> count_;
  std::vector<T> sum_;
  std::vector<std::size_t> free_;
  std::set<std::pair<std::size_t, std::vector<std::pair<std::size_t, T>>>> dead_;
};

}  // namespace

std::optional<Partition> sigma_satisfying_search(const ForallExistsInstance& inst,
                                                 const Sigma& sigma) {
  validate(inst);
  if (sigma.size() != inst.couples.size()) throw ContractViolation("sigma length differs from couple count");
  BigInt bound = magnitude_of(inst.weights, inst.theta) * 2;
  return with_width(bound, [&]<class T>(std::type_identity<T>) {
    return SigmaSearch<T>(inst, sigma).run();
  });
}

ForallExistsAnswer forall_exists_4partition(const ForallExistsInstance& inst, const Budget& budget) {
  validate(inst);
  const std::size_t l = inst.couples.size();
  if (l > budget.max_couples) {
    throw BudgetExceeded(std::to_string(l) + " couples exceed the budget of " +
                         std::to_string(budget.max_couples));
  }
  Sigma sigma(l, false);
  for (;;) {
    if (!sigma_satisfying_search(inst, sigma)) return {false, sigma};
    std::size_t i = l;
    for (;;) {
      if (i == 0) return {true, std::nullopt};
      --i;
      if (!sigma[i]) {
        sigma[i] = true;
        break;
      }
      sigma[i] = false;
    }
  }
}

nlohmann::ordered_json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

BigInt bigint_from_json(const nlohmann::ordered_json& v, const char* where) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? BigInt(v.get<std::uint64_t>()) : BigInt(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    try {
      return parse_bigint(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), where);
    }
  }
  throw ParseError("expected an integer", where);
}

namespace {

const nlohmann::ordered_json& field(const nlohmann::ordered_json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("expected an object", "/");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing key '") + key + "'", "/");
  return *it;
}

std::vector<BigInt> bigint_list(const nlohmann::ordered_json& v, const char* where) {
  if (!v.is_array()) throw ParseError("expected an array", where);
  std::vector<BigInt> out;
  for (const auto& x : v) out.push_back(bigint_from_json(x, where));
  return out;
}

nlohmann::ordered_json bigint_array(const std::vector<BigInt>& values) {
  auto out = nlohmann::ordered_json::array();
  for (const BigInt& v : values) out.push_back(bigint_to_json(v));
  return out;
}

std::size_t index_from_json(const nlohmann::ordered_json& v, const char* where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ParseError("expected a non-negative integer", where);
  }
  return v.get<std::size_t>();
}

}  // namespace

PartitionInstance partition_instance_from_json(const nlohmann::ordered_json& doc) {
  PartitionInstance inst;
  inst.weights = bigint_list(field(doc, "weights"), "weights");
  inst.subsets = index_from_json(field(doc, "m"), "m");
  inst.theta = bigint_from_json(field(doc, "theta"), "theta");
  validate(inst);
  return inst;
}

nlohmann::ordered_json partition_instance_to_json(const PartitionInstance& inst) {
  nlohmann::ordered_json doc;
  doc["weights"] = bigint_array(inst.weights);
  doc["m"] = inst.subsets;
  doc["theta"] = bigint_to_json(inst.theta);
  return doc;
}

ForallExistsInstance forall_exists_from_json(const nlohmann::ordered_json& doc) {
  ForallExistsInstance inst;
  inst.theta = bigint_from_json(field(doc, "theta"), "theta");
  inst.weights = bigint_list(field(doc, "weights"), "weights");
  const auto& couples = field(doc, "couples");
  if (!couples.is_array()) throw ParseError("expected an array", "couples");
  for (const auto& c : couples) {
    if (!c.is_array() || c.size() != 2) throw ParseError("couple must be a pair", "couples");
    inst.couples.emplace_back(index_from_json(c[0], "couples"), index_from_json(c[1], "couples"));
  }
  validate(inst);
  return inst;
}

nlohmann::ordered_json forall_exists_to_json(const ForallExistsInstance& inst) {
  nlohmann::ordered_json doc;
  doc["theta"] = bigint_to_json(inst.theta);
  doc["weights"] = bigint_array(inst.weights);
  auto couples = nlohmann::ordered_json::array();
  for (const auto& [u, v] : inst.couples) couples.push_back({u, v});
  doc["couples"] = std::move(couples);
  return doc;
}

}  // namespace spr
