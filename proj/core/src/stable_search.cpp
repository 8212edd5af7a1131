#include "spr/stable_search.hpp"

#include <string>

#include "spr/errors.hpp"
#include "spr/feasibility.hpp"
#include "spr/verify.hpp"

namespace spr {
namespace {

class Search {
 public:
  Search(const SprInstance& inst, const SearchOptions& options, bool want_stable,
         const std::function<bool(const FeasiblePair&)>& visit)
      : inst_(inst),
        options_(options),
        want_stable_(want_stable),
        visit_(visit),
        y_(inst.num_students()),
        demand_(inst.num_projects(), 0) {
    for (StudentIx s = 0; s < inst.num_students(); ++s) options_of_.push_back(inst.options(s));
  }

  void run(SearchStats& stats) {
    stats_ = &stats;
    descend(0);
  }

 private:
  // false stops the whole search
  bool descend(StudentIx s) {
    if (++stats_->nodes > options_.budget.max_matchings) {
      throw BudgetExceeded("stable search exceeded " + std::to_string(options_.budget.max_matchings) +
                           " nodes");
    }
    if (s == inst_.num_students()) return leaf();
    for (ProjectIx p : options_of_[s]) {
      y_.assign(s, p);
      ++demand_[p];
      bool keep_going = true;
      if (admissible(s)) keep_going = descend(s + 1);
      --demand_[p];
      y_.unassign(s);
      if (!keep_going) return false;
    }
    if (!admissible(s)) return true;
    return descend(s + 1);
  }

  bool admissible(StudentIx s) const {
    if (options_.prune_envy && envy_among_decided(s)) return false;
    if (options_.prune_infeasible && y_.is_matched(s) &&
        !feasible_allocation_dp(inst_, demand_, options_.budget)) {
      return false;
    }
    return true;
  }

  // Does student `last` take part in an envious pair with students 0..last-1?
  bool envy_among_decided(StudentIx last) const {
    auto envies = [&](StudentIx a, StudentIx b) {
      const auto pb = y_.project_of(b);
      if (!pb || !inst_.in_contracts(a, *pb)) return false;
      if (!student_prefers(inst_, a, pb, y_.project_of(a))) return false;
      return *inst_.project_rank(*pb, a) < *inst_.project_rank(*pb, b);
    };
    for (StudentIx other = 0; other < last; ++other) {
      if (envies(last, other) || envies(other, last)) return true;
    }
    return false;
  }

  bool leaf() {
    ++stats_->leaves;
    auto mu = feasible_allocation_dp(inst_, demand_, options_.budget);
    if (!mu) return true;
    FeasiblePair pair{y_, std::move(*mu)};
    if (want_stable_ && !is_stable(inst_, pair, options_.budget)) return true;
    return visit_(pair);
  }

  const SprInstance& inst_;
  const SearchOptions& options_;
  bool want_stable_;
  const std::function<bool(const FeasiblePair&)>& visit_;
  std::vector<std::vector<ProjectIx>> options_of_;
  Matching y_;
  SeatVector demand_;
  SearchStats* stats_ = nullptr;
};

}  // namespace

std::optional<FeasiblePair> search_stable(const SprInstance& inst, const SearchOptions& options,
                                          SearchStats* stats) {
  std::optional<FeasiblePair> found;
  const std::function<bool(const FeasiblePair&)> visit = [&](const FeasiblePair& pair) {
    found = pair;
    return false;
  };
  SearchStats local;
  Search(inst, options, true, visit).run(stats ? *stats : local);
  return found;
}

void for_each_feasible_matching(const SprInstance& inst,
                                const std::function<bool(const FeasiblePair&)>& visit,
                                const Budget& budget) {
  SearchOptions options{budget, true, false};
  SearchStats stats;
  Search(inst, options, false, visit).run(stats);
}

std::vector<FeasiblePair> enumerate_feasible_matchings(const SprInstance& inst,
                                                       const Budget& budget) {
  std::vector<FeasiblePair> out;
  for_each_feasible_matching(
      inst,
      [&](const FeasiblePair& pair) {
        out.push_back(pair);
        return true;
      },
      budget);
  return out;
}

}  // namespace spr
