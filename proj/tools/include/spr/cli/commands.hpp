#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spr/budget.hpp"
#include "spr/generators.hpp"

namespace spr::cli {

// Exit codes. Property failures (10) are answers, not errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInvariant = 3;
inline constexpr int kExitBudget = 4;
inline constexpr int kExitPropertyFails = 10;

/// Parses argv (argv[0] is the program name) and runs the subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct SolveOptions {
  std::filesystem::path instance;
  std::string mechanism = "sd";  // sd | acda
  /// SD: comma separated student ids; defaults to declaration order.
  std::optional<std::string> order;
  /// ACDA: "resource:project,..."; defaults to each resource on its first
  /// compatible project.
  std::optional<std::string> alloc;
  /// SD: random order; ACDA: random allocation. Ignored when order/alloc given.
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> out;
  Budget budget{};
};
int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::filesystem::path instance;
  std::filesystem::path matching;
  /// Optional only for the feasible property.
  std::optional<std::filesystem::path> allocation;
  std::string property = "stable";  // feasible | nonwasteful | fair | stable | pareto
  Budget budget{};
};
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

struct ExistsStableOptions {
  std::filesystem::path instance;
  Budget budget{};
};
/// Exit 0 when a stable matching exists, 10 when none does.
int cmd_exists_stable(const ExistsStableOptions& options, std::ostream& out, std::ostream& err);

struct GenerateOptions {
  std::string kind;  // random | example1 | fig1 | lemma2 | fig2
  std::uint64_t seed = 0;
  RandomInstanceParams random{};
  std::string weights;  // comma separated
  std::optional<std::int64_t> theta;
  std::optional<std::size_t> subsets;
  std::string couples;  // "u:v,u:v", zero-based positions
  bool stable_verif_order = false;
  std::optional<std::filesystem::path> out;
  /// fig1 only: where to write the given matching and allocation.
  std::optional<std::filesystem::path> matching_out;
  std::optional<std::filesystem::path> allocation_out;
  Budget budget{};
};
int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err);

struct ReduceOptions {
  std::string kind;  // thm1 | fig1 | lemma1 | lemma2 | lemma3 | lemma4
  std::filesystem::path source;
  std::optional<std::filesystem::path> out;
  /// Defaults to <out>.manifest.json, or stderr when writing to stdout.
  std::optional<std::filesystem::path> manifest;
  bool stable_verif_order = false;
  Budget budget{};
};
int cmd_reduce(const ReduceOptions& options, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::filesystem::path corpus;
  std::optional<std::filesystem::path> out;
  /// ACDA allocation seed; without it each resource goes to its first
  /// compatible project.
  std::optional<std::uint64_t> seed;
  Budget budget{};
  /// Run the DP scaling ladder instead of a corpus.
  bool scaling = false;
};
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

inline const std::vector<std::string> kBenchColumns = {
    "file",        "mechanism",      "status",          "students",         "projects",
    "resources",   "matched",        "mean_rank",       "envious_pairs",    "claiming_pairs",
    "stable_exists", "feasibility_calls", "solve_ms",   "verify_ms",        "stable_ms",
    "error"};

/// One rung of the DP scaling ladder: 2 projects, 8 resources, |S| students
/// split evenly, so the table has (|S|/2+1)^2 states per layer.
struct ScalingRung {
  std::size_t students = 0;
  std::uint64_t work = 0;  // prod_p (kappa_p + 1) * |R|
  double seconds = 0;      // per feasibility call
  /// (time ratio) / (work ratio) against the previous rung; 1 for the first.
  double normalized_ratio = 1;
  bool within_band = true;
};

/// Rungs for the given student counts. Each timing is the best of `trials`
/// means, each mean taken over enough calls to last at least `min_seconds`.
std::vector<ScalingRung> scaling_ladder(const std::vector<std::size_t>& students, int trials = 3,
                                        double min_seconds = 0.05);
inline const std::vector<std::size_t> kDefaultLadder = {64, 128, 256, 512, 1024};
/// Normalized ratio band for a pass.
inline constexpr double kScalingBand = 3.0;

}  // namespace spr::cli
