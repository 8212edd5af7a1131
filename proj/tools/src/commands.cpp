#include "spr/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "spr/errors.hpp"
#include "spr/feasibility.hpp"
#include "spr/io.hpp"
#include "spr/mechanisms.hpp"
#include "spr/partition.hpp"
#include "spr/reductions.hpp"
#include "spr/stable_search.hpp"
#include "spr/verify.hpp"

namespace spr::cli {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidInstance& e) {
    err << "error: invalid instance\n";
    for (const auto& issue : e.issues()) err << "  " << issue << "\n";
    return kExitInvariant;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

void emit(const std::optional<std::filesystem::path>& path, const std::string& text, std::ostream& out) {
  if (path) write_file(*path, text);
  else out << text;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  if (text.empty()) return parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

std::int64_t to_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw std::invalid_argument(std::string("bad ") + what + " '" + text + "'");
  }
}

std::vector<std::int64_t> int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  for (const auto& part : split(text, ',')) out.push_back(to_int(part, what));
  return out;
}

// Accepts a bare {"assignment": ...} document or the output of `spr solve`.
const ordered_json& section(const ordered_json& doc, const char* key, const char* wrapper) {
  if (doc.is_object() && !doc.contains(key) && doc.contains(wrapper)) return doc[wrapper];
  return doc;
}

ordered_json pair_json(const SprInstance& inst, const FeasiblePair& pair) {
  return {{"matching", matching_to_json(inst, pair.matching)},
          {"allocation", allocation_to_json(inst, pair.allocation)}};
}

std::vector<StudentIx> parse_order(const SprInstance& inst, const std::string& text) {
  std::vector<StudentIx> order;
  for (const auto& id : split(text, ',')) {
    auto s = inst.find_student(id);
    if (!s) throw std::invalid_argument("unknown student '" + id + "' in --order");
    order.push_back(*s);
  }
  return order;
}

Allocation parse_alloc(const SprInstance& inst, const std::string& text) {
  Allocation mu = first_compatible_allocation(inst);
  for (const auto& item : split(text, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--alloc entries look like resource:project");
    auto r = inst.find_resource(item.substr(0, colon));
    auto p = inst.find_project(item.substr(colon + 1));
    if (!r || !p) throw std::invalid_argument("unknown id in --alloc entry '" + item + "'");
    mu.placement[*r] = *p;
  }
  require_valid_allocation(inst, mu);
  return mu;
}

struct Outcome {
  FeasiblePair pair;
  std::uint64_t feasibility_calls = 0;
  double ms = 0;
};

Outcome run_mechanism(const SprInstance& inst, const std::string& mechanism,
                      const std::optional<std::string>& order, const std::optional<std::string>& alloc,
                      std::optional<std::uint64_t> seed, const Budget& budget) {
  const auto calls = dp_invocation_count();
  const auto start = Clock::now();
  Outcome o;
  if (mechanism == "sd") {
    std::vector<StudentIx> seq;
    if (order) seq = parse_order(inst, *order);
    else if (seed) seq = random_order(inst, *seed);
    else for (StudentIx s = 0; s < inst.num_students(); ++s) seq.push_back(s);
    o.pair = serial_dictatorship(inst, seq, SdOptions{budget, {}});
  } else if (mechanism == "acda") {
    Allocation mu = alloc ? parse_alloc(inst, *alloc)
                    : seed ? random_allocation(inst, *seed)
                           : first_compatible_allocation(inst);
    o.pair = acda(inst, mu);
  } else {
    throw std::invalid_argument("unknown mechanism '" + mechanism + "'");
  }
  o.ms = ms_since(start);
  o.feasibility_calls = dp_invocation_count() - calls;
  return o;
}

std::optional<double> mean_rank(const SprInstance& inst, const Matching& y) {
  double total = 0;
  std::size_t n = 0;
  for (StudentIx s = 0; s < inst.num_students(); ++s) {
    if (auto p = y.project_of(s)) {
      total += static_cast<double>(*inst.student_rank(s, *p) + 1);
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return total / static_cast<double>(n);
}

}  // namespace

int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SprInstance inst = load_instance(options.instance);
    const Outcome o = run_mechanism(inst, options.mechanism, options.order, options.alloc, options.seed,
                                    options.budget);
    std::size_t longest = 0;
    for (StudentIx s = 0; s < inst.num_students(); ++s) longest = std::max(longest, inst.student_prefs(s).size());
    std::vector<std::size_t> by_rank(longest, 0);
    for (StudentIx s = 0; s < inst.num_students(); ++s) {
      if (auto p = o.pair.matching.project_of(s)) ++by_rank[*inst.student_rank(s, *p)];
    }
    const std::size_t matched = o.pair.matching.matched_count();
    ordered_json doc = pair_json(inst, o.pair);
    ordered_json metrics{{"mechanism", options.mechanism},
                         {"students", inst.num_students()},
                         {"matched", matched},
                         {"match_rate", inst.num_students() == 0
                                            ? 0.0
                                            : static_cast<double>(matched) / static_cast<double>(inst.num_students())},
                         {"rank_distribution", by_rank},
                         {"feasibility_calls", o.feasibility_calls}};
    const auto mr = mean_rank(inst, o.pair.matching);
    metrics["mean_rank"] = mr ? ordered_json(*mr) : ordered_json(nullptr);
    doc["metrics"] = std::move(metrics);
    emit(options.out, dump_json(doc), out);
    err << "solve_ms=" << std::fixed << std::setprecision(3) << o.ms << "\n";
    return kExitOk;
  });
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    static const std::vector<std::string> properties = {"feasible", "nonwasteful", "fair", "stable", "pareto"};
    if (std::find(properties.begin(), properties.end(), options.property) == properties.end()) {
      throw std::invalid_argument("unknown property '" + options.property + "'");
    }
    const SprInstance inst = load_instance(options.instance);
    const Matching y =
        matching_from_json(inst, section(parse_json(read_file(options.matching)), "assignment", "matching"));
    require_valid_matching(inst, y);
    std::optional<Allocation> mu;
    if (options.allocation) {
      mu = allocation_from_json(inst, section(parse_json(read_file(*options.allocation)), "placement", "allocation"));
      require_valid_allocation(inst, *mu);
    } else if (options.property != "feasible") {
      throw std::invalid_argument("--allocation is required for property " + options.property);
    }

    ordered_json doc{{"property", options.property}};
    bool holds = true;
    if (options.property == "feasible") {
      if (mu) {
        holds = is_feasible_pair(inst, y, *mu);
        if (!holds) {
          auto other = is_feasible(inst, y, options.budget);
          doc["feasible_under_other_allocation"] =
              other ? allocation_to_json(inst, *other) : ordered_json(nullptr);
        }
      } else {
        auto witness = is_feasible(inst, y, options.budget);
        holds = witness.has_value();
        if (witness) doc["witness"] = allocation_to_json(inst, *witness);
      }
    } else {
      const FeasiblePair pair{y, *mu};
      require_feasible_pair(inst, pair);
      auto claim_json = [&](const ClaimingPair& c) {
        return ordered_json{{"student", inst.student_id(c.student)},
                            {"project", inst.project_id(c.project)},
                            {"allocation", allocation_to_json(inst, c.witness)}};
      };
      auto envy_json = [&](const EnviousPair& e) {
        return ordered_json{{"student", inst.student_id(e.student)},
                            {"project", inst.project_id(e.project)},
                            {"displaced", inst.student_id(e.displaced)}};
      };
      if (options.property == "nonwasteful") {
        auto c = find_claiming_pair(inst, pair, options.budget);
        holds = !c;
        if (c) doc["claiming_pair"] = claim_json(*c);
      } else if (options.property == "fair") {
        auto e = find_envious_pair(inst, pair);
        holds = !e;
        if (e) doc["envious_pair"] = envy_json(*e);
      } else if (options.property == "stable") {
        auto e = find_envious_pair(inst, pair);
        auto c = find_claiming_pair(inst, pair, options.budget);
        holds = !e && !c;
        doc["envious_pair"] = e ? envy_json(*e) : ordered_json(nullptr);
        doc["claiming_pair"] = c ? claim_json(*c) : ordered_json(nullptr);
      } else {
        holds = is_pareto_efficient_bruteforce(inst, pair, options.budget);
      }
    }
    doc["holds"] = holds;
    out << dump_json(doc);
    return holds ? kExitOk : kExitPropertyFails;
  });
}

int cmd_exists_stable(const ExistsStableOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SprInstance inst = load_instance(options.instance);
    SearchOptions search;
    search.budget = options.budget;
    SearchStats stats;
    auto found = search_stable(inst, search, &stats);
    ordered_json doc{{"verdict", found ? "yes" : "no"}};
    if (found) {
      doc["matching"] = matching_to_json(inst, found->matching);
      doc["allocation"] = allocation_to_json(inst, found->allocation);
    }
    doc["search_nodes"] = stats.nodes;
    out << dump_json(doc);
    return found ? kExitOk : kExitPropertyFails;
  });
}

namespace {

FourPartitionInstance four_partition_from_options(const GenerateOptions& o) {
  if (o.weights.empty() || !o.theta) throw std::invalid_argument("--weights and --theta are required");
  return {int_list(o.weights, "weight"), *o.theta};
}

std::vector<std::pair<std::size_t, std::size_t>> parse_couples(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& item : split(text, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("couples look like u:v,u:v");
    const auto u = to_int(item.substr(0, colon), "couple position");
    const auto v = to_int(item.substr(colon + 1), "couple position");
    if (u < 0 || v < 0) throw std::invalid_argument("couple positions are zero-based and non-negative");
    out.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<BigInt> big_list(const std::vector<std::int64_t>& values) {
  return {values.begin(), values.end()};
}

}  // namespace

int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    try {
      if (options.kind == "random") {
        emit(options.out, serialize_instance(random_instance(options.random, options.seed)), out);
      } else if (options.kind == "example1") {
        emit(options.out, serialize_instance(example1_instance()), out);
      } else if (options.kind == "fig1") {
        auto g = reduce_4partition_to_nw_verif(four_partition_from_options(options), options.stable_verif_order,
                                               options.budget);
        emit(options.out, serialize_instance(g.instance), out);
        if (options.matching_out) write_file(*options.matching_out, serialize_matching(g.instance, g.pair.matching));
        if (options.allocation_out) {
          write_file(*options.allocation_out, serialize_allocation(g.instance, g.pair.allocation));
        }
      } else if (options.kind == "lemma2") {
        if (options.weights.empty() || !options.theta || !options.subsets) {
          throw std::invalid_argument("--weights, --m and --theta are required");
        }
        PartitionInstance src{big_list(int_list(options.weights, "weight")), *options.subsets, *options.theta};
        emit(options.out, serialize_instance(reduce_pareto_partition_to_nw_find(src, options.budget).instance), out);
      } else if (options.kind == "fig2") {
        if (options.weights.empty() || !options.theta) throw std::invalid_argument("--weights and --theta are required");
        ForallExistsInstance src{*options.theta, big_list(int_list(options.weights, "weight")),
                                 parse_couples(options.couples)};
        emit(options.out, serialize_instance(reduce_fe4partition_to_costable(src, options.budget).instance), out);
      } else {
        throw std::invalid_argument("unknown kind '" + options.kind + "'");
      }
    } catch (const InvalidInstance& e) {
      // bad generator parameters are usage errors
      std::string msg = "invalid parameters:";
      for (const auto& issue : e.issues()) msg += " " + issue + ";";
      throw std::invalid_argument(msg);
    }
    return kExitOk;
  });
}

namespace {

const ordered_json& key(const ordered_json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) throw ParseError(std::string("missing key '") + name + "'", "/");
  return doc[name];
}

std::vector<Triplet> triplets_from_json(const ordered_json& v, const char* where) {
  if (!v.is_array()) throw ParseError("expected an array of [a, b, c]", where);
  std::vector<Triplet> out;
  for (const auto& t : v) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned() ||
        !t[2].is_number_unsigned()) {
      throw ParseError("triplets are [a, b, c] with zero-based elements", where);
    }
    out.push_back({t[0].get<std::size_t>(), t[1].get<std::size_t>(), t[2].get<std::size_t>()});
  }
  return out;
}

FourPartitionInstance four_partition_from_json(const ordered_json& doc) {
  FourPartitionInstance src;
  const auto& w = key(doc, "weights");
  if (!w.is_array()) throw ParseError("expected an array", "weights");
  for (const auto& x : w) {
    if (!x.is_number_integer()) throw ParseError("expected an integer", "weights");
    src.weights.push_back(x.get<Seats>());
  }
  if (!key(doc, "theta").is_number_integer()) throw ParseError("expected an integer", "theta");
  src.theta = doc["theta"].get<Seats>();
  return src;
}

std::size_t size_from_json(const ordered_json& doc, const char* name) {
  const auto& v = key(doc, name);
  if (!v.is_number_unsigned()) throw ParseError("expected a non-negative integer", name);
  return v.get<std::size_t>();
}

}  // namespace

int cmd_reduce(const ReduceOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ordered_json source = parse_json(read_file(options.source));
    std::string target;
    ordered_json manifest;
    if (options.kind == "thm1") {
      auto g = reduce_4partition_to_fa(four_partition_from_json(source), options.budget);
      target = serialize_instance(g.instance);
      manifest = std::move(g.manifest);
      manifest["matching"] = matching_to_json(g.instance, g.matching);
    } else if (options.kind == "fig1") {
      auto g = reduce_4partition_to_nw_verif(four_partition_from_json(source), options.stable_verif_order,
                                             options.budget);
      target = serialize_instance(g.instance);
      manifest = std::move(g.manifest);
      manifest["matching"] = matching_to_json(g.instance, g.pair.matching);
      manifest["allocation"] = allocation_to_json(g.instance, g.pair.allocation);
    } else if (options.kind == "lemma1") {
      Max3dmInstance src;
      src.d = size_from_json(source, "d");
      src.triplets = triplets_from_json(key(source, "triplets"), "triplets");
      for (const auto& v : key(source, "payoffs")) src.payoffs.push_back(bigint_from_json(v, "payoffs"));
      auto g = reduce_max3dm_to_pareto_partition(src);
      target = dump_json(partition_instance_to_json(g.instance));
      manifest = std::move(g.manifest);
    } else if (options.kind == "lemma2") {
      auto g = reduce_pareto_partition_to_nw_find(partition_instance_from_json(source), options.budget);
      target = serialize_instance(g.instance);
      manifest = std::move(g.manifest);
    } else if (options.kind == "lemma3") {
      ForallExists3dmInstance src;
      src.d = size_from_json(source, "d");
      src.universal = triplets_from_json(key(source, "universal"), "universal");
      src.existential = triplets_from_json(key(source, "existential"), "existential");
      auto g = reduce_fe3dm_to_fe4partition(src);
      target = dump_json(forall_exists_to_json(g.instance));
      manifest = std::move(g.manifest);
    } else if (options.kind == "lemma4") {
      auto g = reduce_fe4partition_to_costable(forall_exists_from_json(source), options.budget);
      target = serialize_instance(g.instance);
      manifest = std::move(g.manifest);
    } else {
      throw std::invalid_argument("unknown reduction '" + options.kind + "'");
    }
    emit(options.out, target, out);
    if (options.manifest) {
      write_file(*options.manifest, dump_json(manifest));
    } else if (options.out) {
      write_file(options.out->string() + ".manifest.json", dump_json(manifest));
    } else {
      err << dump_json(manifest);
    }
    return kExitOk;
  });
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c == '\n' ? ' ' : c;
  }
  return quoted + "\"";
}

std::string fixed3(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << v;
  return s.str();
}

void write_row(std::ostream& csv, std::map<std::string, std::string> row) {
  for (std::size_t i = 0; i < kBenchColumns.size(); ++i) {
    if (i) csv << ',';
    csv << csv_field(row[kBenchColumns[i]]);
  }
  csv << '\n';
}

void bench_corpus(const BenchOptions& options, std::ostream& csv) {
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(options.corpus)) {
    throw ParseError("corpus is not a directory", options.corpus.string());
  }
  for (const auto& entry : std::filesystem::directory_iterator(options.corpus)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  for (std::size_t i = 0; i < kBenchColumns.size(); ++i) csv << (i ? "," : "") << kBenchColumns[i];
  csv << '\n';
  for (const auto& file : files) {
    const std::string name = file.filename().string();
    std::optional<SprInstance> inst;
    try {
      inst = load_instance(file);
    } catch (const std::exception& e) {
      write_row(csv, {{"file", name}, {"status", "parse_error"}, {"error", e.what()}});
      continue;
    }
    std::string stable = "budget";
    std::string stable_error;
    const auto stable_start = Clock::now();
    try {
      SearchOptions search;
      search.budget = options.budget;
      stable = search_stable(*inst, search) ? "yes" : "no";
    } catch (const std::exception& e) {
      stable_error = e.what();
    }
    const double stable_ms = ms_since(stable_start);

    for (const std::string mechanism : {"sd", "acda"}) {
      std::map<std::string, std::string> row{{"file", name},
                                             {"mechanism", mechanism},
                                             {"students", std::to_string(inst->num_students())},
                                             {"projects", std::to_string(inst->num_projects())},
                                             {"resources", std::to_string(inst->num_resources())},
                                             {"stable_exists", stable},
                                             {"stable_ms", fixed3(stable_ms)},
                                             {"error", stable_error}};
      try {
        const Outcome o = run_mechanism(*inst, mechanism, std::nullopt, std::nullopt, options.seed, options.budget);
        row["matched"] = std::to_string(o.pair.matching.matched_count());
        if (auto mr = mean_rank(*inst, o.pair.matching)) row["mean_rank"] = fixed3(*mr);
        row["feasibility_calls"] = std::to_string(o.feasibility_calls);
        row["solve_ms"] = fixed3(o.ms);
        const auto verify_start = Clock::now();
        row["envious_pairs"] = std::to_string(count_envious_pairs(*inst, o.pair));
        row["claiming_pairs"] = std::to_string(count_claiming_pairs(*inst, o.pair, options.budget));
        row["verify_ms"] = fixed3(ms_since(verify_start));
        row["status"] = "ok";
      } catch (const BudgetExceeded& e) {
        row["status"] = "budget";
        row["error"] = e.what();
      } catch (const std::exception& e) {
        row["status"] = "error";
        row["error"] = e.what();
      }
      write_row(csv, std::move(row));
    }
  }
}

}  // namespace

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::ostringstream csv;
    if (options.scaling) {
      const auto rungs = scaling_ladder(kDefaultLadder);
      csv << "students,projects,resources,work,seconds_per_call,normalized_ratio,within_band\n";
      bool all = true;
      for (const auto& r : rungs) {
        csv << r.students << ",2,8," << r.work << ',' << std::scientific << std::setprecision(4) << r.seconds
            << ',' << std::fixed << std::setprecision(3) << r.normalized_ratio << ','
            << (r.within_band ? "true" : "false") << '\n';
        all = all && r.within_band;
      }
      err << "scaling ladder " << (all ? "within" : "outside") << " the " << kScalingBand << "x band\n";
    } else {
      bench_corpus(options, csv);
    }
    emit(options.out, csv.str(), out);
    return kExitOk;
  });
}

std::vector<ScalingRung> scaling_ladder(const std::vector<std::size_t>& students, int trials,
                                        double min_seconds) {
  std::vector<ScalingRung> rungs;
  for (std::size_t n : students) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("ladder sizes must be even and at least 4");
    RawInstance raw;
    raw.projects = {{"p1", {}}, {"p2", {}}};
    for (std::size_t s = 0; s < n; ++s) {
      const std::string id = "s" + std::to_string(s + 1);
      const std::size_t p = s < n / 2 ? 0 : 1;
      raw.students.push_back({id, {raw.projects[p].id}});
      raw.projects[p].prefs.push_back(id);
    }
    for (int r = 1; r <= 8; ++r) {
      raw.resources.push_back({"r" + std::to_string(r), static_cast<Seats>(std::max<std::size_t>(n / 4, 1)), {"p1", "p2"}});
    }
    const SprInstance inst = make_instance(raw);
    const auto half = static_cast<Seats>(n / 2);
    const SeatVector demand{half, half};
    Budget budget;
    budget.max_dp_states = UINT64_MAX;

    ScalingRung rung;
    rung.students = n;
    rung.work = static_cast<std::uint64_t>(half + 1) * static_cast<std::uint64_t>(half + 1) * 8;
    rung.seconds = INFINITY;
    for (int t = 0; t < trials; ++t) {
      std::size_t calls = 0;
      const auto start = Clock::now();
      double elapsed = 0;
      do {
        if (!feasible_allocation_dp(inst, demand, budget)) throw Error("ladder instance must be feasible");
        ++calls;
        elapsed = std::chrono::duration<double>(Clock::now() - start).count();
      } while (elapsed < min_seconds);
      rung.seconds = std::min(rung.seconds, elapsed / static_cast<double>(calls));
    }
    if (!rungs.empty()) {
      const auto& prev = rungs.back();
      rung.normalized_ratio = (rung.seconds / prev.seconds) /
                              (static_cast<double>(rung.work) / static_cast<double>(prev.work));
      rung.within_band = rung.normalized_ratio <= kScalingBand && rung.normalized_ratio >= 1 / kScalingBand;
    }
    rungs.push_back(rung);
  }
  return rungs;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Student-project-resource matching: solve, verify, search, generate, reduce, bench"};
  app.require_subcommand(1);
  std::string budget_text;
  app.add_option("--budget", budget_text,
                 "work limits: a number for all, or states=,matchings=,placements=,assignments=,couples=,students=");

  SolveOptions solve;
  std::string out_path;
  auto* solve_cmd = app.add_subcommand("solve", "run SD or ACDA on an instance");
  solve_cmd->add_option("instance", solve.instance, "instance JSON")->required();
  solve_cmd->add_option("--mechanism", solve.mechanism, "sd or acda")->check(CLI::IsMember({"sd", "acda"}));
  solve_cmd->add_option("--order", solve.order, "SD order, comma separated student ids");
  solve_cmd->add_option("--alloc", solve.alloc, "ACDA allocation, resource:project pairs");
  solve_cmd->add_option("--seed", solve.seed, "random SD order / ACDA allocation");
  solve_cmd->add_option("--out", out_path, "output file (default stdout)");

  VerifyOptions verify;
  std::string alloc_path;
  auto* verify_cmd = app.add_subcommand("verify", "check a property of a matching");
  verify_cmd->add_option("instance", verify.instance)->required();
  verify_cmd->add_option("matching", verify.matching)->required();
  verify_cmd->add_option("allocation", alloc_path);
  verify_cmd->add_option("--property", verify.property)
      ->check(CLI::IsMember({"feasible", "nonwasteful", "fair", "stable", "pareto"}));

  ExistsStableOptions exists;
  auto* exists_cmd = app.add_subcommand("exists-stable", "search for a stable matching");
  exists_cmd->add_option("instance", exists.instance)->required();

  GenerateOptions gen;
  std::string gen_out, gen_matching, gen_alloc;
  std::size_t students = 0, projects = 0, resources = 0;
  std::int64_t theta = 0;
  std::size_t subsets = 0;
  auto* gen_cmd = app.add_subcommand("generate", "write an instance");
  gen_cmd->add_option("kind", gen.kind)->required()->check(CLI::IsMember({"random", "example1", "fig1", "lemma2", "fig2"}));
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--students", students, "random: number of students");
  gen_cmd->add_option("--projects", projects, "random: number of projects");
  gen_cmd->add_option("--resources", resources, "random: number of resources");
  gen_cmd->add_option("--max-capacity", gen.random.max_capacity);
  gen_cmd->add_option("--density", gen.random.compat_density, "random: compatibility density")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--pref-length", gen.random.max_pref_length, "random: longest student list");
  gen_cmd->add_option("--accept", gen.random.accept_probability)->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--weights", gen.weights, "comma separated weights");
  auto* theta_opt = gen_cmd->add_option("--theta", theta);
  auto* m_opt = gen_cmd->add_option("--m", subsets, "lemma2: number of subsets");
  gen_cmd->add_option("--couples", gen.couples, "fig2: u:v pairs of zero-based positions");
  gen_cmd->add_flag("--stable-verif", gen.stable_verif_order, "fig1: rank s* last");
  gen_cmd->add_option("--out", gen_out);
  gen_cmd->add_option("--matching-out", gen_matching);
  gen_cmd->add_option("--allocation-out", gen_alloc);

  ReduceOptions red;
  std::string red_out, red_manifest;
  auto* red_cmd = app.add_subcommand("reduce", "encode a source instance with one of the reductions");
  red_cmd->add_option("kind", red.kind)->required()->check(
      CLI::IsMember({"thm1", "fig1", "lemma1", "lemma2", "lemma3", "lemma4"}));
  red_cmd->add_option("source", red.source)->required();
  red_cmd->add_option("--out", red_out);
  red_cmd->add_option("--manifest", red_manifest);
  red_cmd->add_flag("--stable-verif", red.stable_verif_order, "fig1: rank s* last");

  BenchOptions bench;
  std::string bench_corpus_dir, bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "per-instance metrics as CSV");
  bench_cmd->add_option("corpus", bench_corpus_dir, "directory of instance JSON files");
  bench_cmd->add_option("--out", bench_out);
  bench_cmd->add_option("--seed", bench.seed, "ACDA allocation seed");
  bench_cmd->add_flag("--scaling", bench.scaling, "run the DP scaling ladder");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  Budget budget;
  try {
    budget = Budget::parse(budget_text, Budget::from_env());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  auto opt_path = [](const std::string& s) -> std::optional<std::filesystem::path> {
    if (s.empty()) return std::nullopt;
    return s;
  };

  if (*solve_cmd) {
    solve.out = opt_path(out_path);
    solve.budget = budget;
    return cmd_solve(solve, out, err);
  }
  if (*verify_cmd) {
    verify.allocation = opt_path(alloc_path);
    verify.budget = budget;
    return cmd_verify(verify, out, err);
  }
  if (*exists_cmd) {
    exists.budget = budget;
    return cmd_exists_stable(exists, out, err);
  }
  if (*gen_cmd) {
    if (students) gen.random.min_students = gen.random.max_students = students;
    if (projects) gen.random.min_projects = gen.random.max_projects = projects;
    if (resources) gen.random.min_resources = gen.random.max_resources = resources;
    if (gen.random.max_capacity < gen.random.min_capacity) gen.random.min_capacity = gen.random.max_capacity;
    if (theta_opt->count()) gen.theta = theta;
    if (m_opt->count()) gen.subsets = subsets;
    gen.out = opt_path(gen_out);
    gen.matching_out = opt_path(gen_matching);
    gen.allocation_out = opt_path(gen_alloc);
    gen.budget = budget;
    return cmd_generate(gen, out, err);
  }
  if (*red_cmd) {
    red.out = opt_path(red_out);
    red.manifest = opt_path(red_manifest);
    red.budget = budget;
    return cmd_reduce(red, out, err);
  }
  bench.budget = budget;
  bench.out = opt_path(bench_out);
  if (!bench.scaling) {
    if (bench_corpus_dir.empty()) {
      err << "error: bench needs a corpus directory or --scaling\n";
      return kExitUsage;
    }
    bench.corpus = bench_corpus_dir;
  }
  return cmd_bench(bench, out, err);
}

}  // namespace spr::cli
