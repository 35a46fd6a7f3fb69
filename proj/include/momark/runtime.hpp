#ifndef MOMARK_RUNTIME_HPP
#define MOMARK_RUNTIME_HPP

#include "momark/core.hpp"
#include "momark/indicators.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace momark {

inline constexpr int targets_per_indicator = 70;

/// Indicator targets, loosest first.
struct TargetLadder {
    IndicatorKind indicator = IndicatorKind::HvDiff;
    std::array<double, targets_per_indicator> values{};
};

/// 10^e for e evenly spaced over [-0.8, -3] (hv_diff, gd, igd) or [-0.1, -2] (eps_plus).
TargetLadder make_targets(IndicatorKind kind);

/// Ladders for all four indicators, indexed like all_indicators.
const std::array<TargetLadder, 4>& standard_ladders();

enum class SolverKind { Deterministic, Stochastic };

std::string_view to_string(SolverKind kind);
SolverKind parse_solver_kind(std::string_view token);

/// Per-solver evaluation budget on one problem. Deterministic solvers get a
/// single run holding the budget of all stochastic runs.
struct RunBudget {
    FeCount v = 0;
    int runs = 0;
    FeCount per_run_budget = 0;
    int multiplier = 1;

    FeCount total() const { return per_run_budget * runs; }
};

RunBudget make_budget(SolverKind kind, int n, int budget_factor = 100, int runs_stochastic = 10);

/// One evaluation emitted by a solver, stamped by the harness.
struct Evaluation {
    FeCount fe = 0;
    DecisionVector x;
    ObjectiveVector f;
};

using EvaluationStream = std::vector<Evaluation>;

struct FirstHitRecord {
    std::string problem;
    std::string solver;
    int run = 0;
    IndicatorKind indicator = IndicatorKind::HvDiff;
    int target_index = 0;
    double target_value = 0.0;
    /// Empty when the target was never reached.
    std::optional<FeCount> fe;

    bool operator==(const FirstHitRecord&) const = default;
};

/// Maintains hv_diff, eps_plus, gd and igd of a normalized archive under
/// insertions and removals. Per-reference-point minima are cached so a change
/// costs O(|R|) unless it removes a cached minimizer.
class IndicatorTracker {
public:
    explicit IndicatorTracker(PointSet reference);

    /// Mirrors one accepted archive insertion. `point` is already normalized.
    void apply(const InsertionReport& report, const ObjectiveVector& point);

    /// Current values in all_indicators order; unreached while empty.
    std::array<double, 4> values() const;

    PointSet archive_points() const;

private:
    struct Tracked {
        std::uint64_t id;
        ObjectiveVector point;
        double nearest_reference;
    };
    struct Best {
        double value;
        std::uint64_t id;
    };

    void recompute_reference(Eigen::Index r);

    PointSet reference_;
    ObjectiveVector ref_point_;
    double reference_hv_ = 0.0;
    std::vector<Tracked> tracked_;
    std::vector<Best> igd_best_;
    std::vector<Best> eps_best_;
};

/// Streams evaluations of one run into an archive and first-hit table.
/// Indicators are recomputed only when the archive changes.
class RunRecorder {
public:
    RunRecorder(const ReferenceSet& refset, const NormalizationFrame& frame);

    /// Returns true when the archive changed. Throws ProtocolError unless fe
    /// strictly increases.
    bool observe(FeCount fe, const ObjectiveVector& f);

    const Archive& archive() const { return archive_; }
    std::array<double, 4> current_values() const { return tracker_.values(); }

    /// First-hit fe per indicator (all_indicators order) and target index.
    const std::array<std::array<std::optional<FeCount>, targets_per_indicator>, 4>& first_hits() const
    {
        return hits_;
    }

    std::vector<FirstHitRecord> records(const std::string& problem, const std::string& solver, int run) const;

private:
    NormalizationFrame frame_;
    Archive archive_;
    IndicatorTracker tracker_;
    std::array<std::array<std::optional<FeCount>, targets_per_indicator>, 4> hits_{};
    std::array<int, 4> hit_count_{};
    FeCount last_fe_ = 0;
};

std::vector<FirstHitRecord> record_run(const std::string& problem, const std::string& solver, int run,
                                       const EvaluationStream& stream, const ReferenceSet& refset,
                                       const NormalizationFrame& frame);

/// Fills one record per (indicator, target) from per-indicator first-hit fes.
std::vector<FirstHitRecord> make_records(
    const std::string& problem, const std::string& solver, int run,
    const std::array<std::array<std::optional<FeCount>, targets_per_indicator>, 4>& hits);

/// Best (smallest) fe over runs sharing one (problem, solver, indicator, target).
/// The result carries run = 0. Throws ValueError on mixed keys.
FirstHitRecord best_of_runs(const std::vector<FirstHitRecord>& records);

/// Groups by key and applies best_of_runs; output sorted by key.
std::vector<FirstHitRecord> merge_best_of_runs(const std::vector<FirstHitRecord>& records);

void write_first_hits(const std::filesystem::path& path, const std::vector<FirstHitRecord>& records);
std::vector<FirstHitRecord> read_first_hits(const std::filesystem::path& path);
std::string format_first_hits(const std::vector<FirstHitRecord>& records);

} // namespace momark

#endif
