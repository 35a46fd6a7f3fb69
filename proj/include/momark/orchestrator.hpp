#ifndef MOMARK_ORCHESTRATOR_HPP
#define MOMARK_ORCHESTRATOR_HPP

#include "momark/indicators.hpp"
#include "momark/problems.hpp"
#include "momark/profiles.hpp"
#include "momark/runtime.hpp"
#include "momark/solvers.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace momark {

inline constexpr std::string_view tool_version = "momark 0.1.0";

struct ExperimentConfig {
    /// Problem names, or the selectors "core" and "all".
    std::vector<std::string> problems{"core"};
    std::vector<SolverDescriptor> solvers;
    int budget_factor = 100;
    int runs_stochastic = 10;
    std::uint64_t base_seed = 1;
    std::filesystem::path output_dir = "momark-out";
    std::filesystem::path refset_dir = "refsets";
    int jobs = 1;

    /// Throws ConfigError on non-positive budgets/runs/jobs, no solvers or
    /// duplicate solver names.
    void validate() const;
    bool operator==(const ExperimentConfig&) const = default;
};

/// Flat `key = value` text. `solver` and `problem` may repeat; `problems` takes
/// a comma list. '#' starts a comment. Unknown keys are a ConfigError.
ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = {});
ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base = {});
std::string format_config(const ExperimentConfig& config);

/// Expands "core"/"all" and checks every name against the registry. Sorted,
/// without duplicates.
std::vector<std::string> resolve_problems(const std::vector<std::string>& selection);

// ---------------------------------------------------------------------------
// Reference sets

struct RefsetGenerator {
    int budget_factor = 100;
    /// Multiplies each builtin's standard per-run budget.
    int budget_multiplier = 10;
    int runs_stochastic = 10;
    std::uint64_t seed = 1000003;
};

struct StoredRefset {
    ReferenceSet set;
    NormalizationFrame frame;
    RefsetGenerator generator;
};

/// Union of all builtin solvers' archives, non-dominated filtered. Throws
/// ValueError naming the problem when the frame is degenerate.
StoredRefset generate_refset(const ProblemInstance& problem, const RefsetGenerator& generator);

std::filesystem::path refset_path(const std::filesystem::path& dir, const std::string& problem);
std::string format_refset(const StoredRefset& refset);
StoredRefset parse_refset(std::string_view text, const std::string& origin);
void write_refset(const std::filesystem::path& path, const StoredRefset& refset);
StoredRefset read_refset(const std::filesystem::path& path);

struct RefsetOptions {
    std::vector<std::string> problems{"core"};
    RefsetGenerator generator;
    std::filesystem::path dir = "refsets";
    bool force = false;
    int jobs = 1;
};

/// Writes one refset file per problem; refuses to overwrite unless forced.
std::vector<std::filesystem::path> cmd_refset(const RefsetOptions& options);

// ---------------------------------------------------------------------------
// Runs

struct RunRecord {
    std::string solver;
    std::string problem;
    int run = 0;
    std::uint64_t seed = 0;
    FeCount fe_budget = 0;
    FeCount fe_consumed = 0;
    std::size_t archive_size = 0;
    /// False when an external solver stopped before its budget.
    bool complete = true;
    /// True when the run ended on a protocol, domain or I/O error.
    bool failed = false;
    std::string message;

    bool operator==(const RunRecord&) const = default;
};

struct RunManifest {
    ExperimentConfig config;
    std::vector<RunRecord> runs;
    std::map<std::string, NormalizationFrame> frames;
    std::string version{tool_version};
    std::string timestamp;
};

std::string format_manifest(const RunManifest& manifest);
RunManifest parse_manifest(std::string_view text);
RunManifest read_manifest(const std::filesystem::path& run_dir);

/// Accepted archive insertions of one run as `fe,f1,...,fm`. Replaying the
/// rows through an Archive reproduces the run's archive trajectory.
std::string format_archive_trace(const std::vector<std::pair<FeCount, ObjectiveVector>>& trace, int m);
std::vector<std::pair<FeCount, ObjectiveVector>> parse_archive_trace(std::string_view text, const std::string& origin);

std::filesystem::path first_hits_path(const std::filesystem::path& run_dir, const std::string& solver);
std::filesystem::path archive_path(const std::filesystem::path& run_dir, const std::string& solver,
                                   const std::string& problem, int run);

/// Executes every (solver, problem, run) cell and writes the run directory:
/// manifest.json, firsthits_<solver>.csv, cells/ and archives/.
RunManifest cmd_run(const ExperimentConfig& config);

// ---------------------------------------------------------------------------
// Profiles

struct ProfileOptions {
    std::vector<std::filesystem::path> run_dirs;
    std::vector<std::string> panels{"all"};
    std::filesystem::path out_dir;
    std::vector<double> alphas = log_alphas();
};

/// Merges best-of-runs and writes profile_<panel>_<indicator>.{csv,svg} plus
/// a "combined" pair per panel. Panels with no problems are skipped.
std::vector<std::filesystem::path> cmd_profile(const ProfileOptions& options);

/// Profiles of every solver in `first_hits` over `key`.
std::vector<DataProfile> solver_profiles(const std::vector<FirstHitRecord>& merged, const ProfileKey& key,
                                         const std::map<std::string, int>& multipliers, int budget_factor,
                                         const std::vector<double>& alphas);

// ---------------------------------------------------------------------------
// Timing

struct TimingOptions {
    std::vector<std::string> problems;
    std::vector<FeCount> budgets{10, 100, 1000};
    SolverDescriptor solver{"random_search", SolverKind::Stochastic, ""};
    std::uint64_t seed = 1;
    int repeats = 5;
};

struct TimingRow {
    FeCount budget = 0;
    std::string problem;
    double seconds = 0.0;
    double seconds_per_fe = 0.0;
};

/// BK1, DPAM1, DTLZ3, FES3, plus L3ZDT1 when registered.
std::vector<std::string> default_timing_problems();

/// Runs serially; each row is the fastest of `repeats` whole runs.
std::vector<TimingRow> cmd_timing(const TimingOptions& options);
std::string format_timing_csv(const std::vector<TimingRow>& rows, const TimingOptions& options);
std::vector<TimingRow> parse_timing_csv(std::string_view text);

// ---------------------------------------------------------------------------

/// One line per problem: name, n, m, D, S, M (tab-separated).
std::string list_problems(const CategoryFilter& filter);

} // namespace momark

#endif
