#include "momark/runtime.hpp"

#include "momark/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

namespace momark {

TargetLadder make_targets(IndicatorKind kind)
{
    const bool eps = kind == IndicatorKind::EpsPlus;
    const double first = eps ? -0.1 : -0.8;
    const double last = eps ? -2.0 : -3.0;
    TargetLadder ladder;
    ladder.indicator = kind;
    for (int k = 0; k < targets_per_indicator; ++k) {
        const double t = static_cast<double>(k) / (targets_per_indicator - 1);
        ladder.values[static_cast<std::size_t>(k)] = std::pow(10.0, std::lerp(first, last, t));
    }
    return ladder;
}

const std::array<TargetLadder, 4>& standard_ladders()
{
    static const std::array<TargetLadder, 4> ladders{make_targets(all_indicators[0]), make_targets(all_indicators[1]),
                                                     make_targets(all_indicators[2]), make_targets(all_indicators[3])};
    return ladders;
}

std::string_view to_string(SolverKind kind)
{
    return kind == SolverKind::Deterministic ? "deterministic" : "stochastic";
}

SolverKind parse_solver_kind(std::string_view token)
{
    if (token == "deterministic" || token == "det" || token == "d")
        return SolverKind::Deterministic;
    if (token == "stochastic" || token == "sto" || token == "s")
        return SolverKind::Stochastic;
    throw ConfigError("unknown solver kind '" + std::string(token) + "' (expected deterministic or stochastic)");
}

RunBudget make_budget(SolverKind kind, int n, int budget_factor, int runs_stochastic)
{
    if (n < 1 || budget_factor < 1 || runs_stochastic < 1)
        throw ConfigError("budget: n, budget_factor and runs must be positive");
    RunBudget b;
    b.v = static_cast<FeCount>(budget_factor) * n;
    if (kind == SolverKind::Stochastic) {
        b.runs = runs_stochastic;
        b.per_run_budget = b.v;
        b.multiplier = 1;
    } else {
        b.runs = 1;
        b.per_run_budget = b.v * runs_stochastic;
        b.multiplier = runs_stochastic;
    }
    return b;
}

// ---------------------------------------------------------------------------

IndicatorTracker::IndicatorTracker(PointSet reference)
    : reference_(std::move(reference)), ref_point_(ObjectiveVector::Ones(reference_.cols()))
{
    if (reference_.rows() == 0)
        throw ConfigError("indicator tracker: empty reference set");
    reference_hv_ = hypervolume(reference_, ref_point_);
    const Best none{std::numeric_limits<double>::infinity(), 0};
    igd_best_.assign(static_cast<std::size_t>(reference_.rows()), none);
    eps_best_.assign(static_cast<std::size_t>(reference_.rows()), none);
}

void IndicatorTracker::recompute_reference(Eigen::Index r)
{
    Best igd{std::numeric_limits<double>::infinity(), 0};
    Best eps{std::numeric_limits<double>::infinity(), 0};
    for (const Tracked& t : tracked_) {
        const double d = detail::euclidean(reference_.row(r), t.point);
        if (d < igd.value)
            igd = {d, t.id};
        const double e = detail::eps_shift(t.point, reference_.row(r));
        if (e < eps.value)
            eps = {e, t.id};
    }
    igd_best_[static_cast<std::size_t>(r)] = igd;
    eps_best_[static_cast<std::size_t>(r)] = eps;
}

void IndicatorTracker::apply(const InsertionReport& report, const ObjectiveVector& point)
{
    if (!report.accepted)
        return;
    if (point.size() != reference_.cols())
        throw DimensionError("indicator tracker: objective count mismatch");

    std::erase_if(tracked_, [&](const Tracked& t) {
        return std::find(report.removed.begin(), report.removed.end(), t.id) != report.removed.end();
    });

    double nearest = std::numeric_limits<double>::infinity();
    for (Eigen::Index r = 0; r < reference_.rows(); ++r)
        nearest = std::min(nearest, detail::euclidean(point, reference_.row(r)));
    tracked_.push_back({report.id, point, nearest});

    auto was_removed = [&](std::uint64_t id) {
        return std::find(report.removed.begin(), report.removed.end(), id) != report.removed.end();
    };
    for (Eigen::Index r = 0; r < reference_.rows(); ++r) {
        const std::size_t ri = static_cast<std::size_t>(r);
        if (!report.removed.empty() && (was_removed(igd_best_[ri].id) || was_removed(eps_best_[ri].id))) {
            recompute_reference(r);
            continue;
        }
        const double d = detail::euclidean(reference_.row(r), point);
        if (d < igd_best_[ri].value)
            igd_best_[ri] = {d, report.id};
        const double e = detail::eps_shift(point, reference_.row(r));
        if (e < eps_best_[ri].value)
            eps_best_[ri] = {e, report.id};
    }
}

PointSet IndicatorTracker::archive_points() const
{
    PointSet out(static_cast<Eigen::Index>(tracked_.size()), reference_.cols());
    for (std::size_t i = 0; i < tracked_.size(); ++i)
        out.row(static_cast<Eigen::Index>(i)) = tracked_[i].point.transpose();
    return out;
}

std::array<double, 4> IndicatorTracker::values() const
{
    if (tracked_.empty())
        return {unreached, unreached, unreached, unreached};

    const double hv = reference_hv_ - hypervolume(archive_points(), ref_point_);

    double eps = -std::numeric_limits<double>::infinity();
    double igd_sum = 0.0;
    for (std::size_t r = 0; r < igd_best_.size(); ++r) {
        eps = std::max(eps, eps_best_[r].value);
        igd_sum += igd_best_[r].value;
    }
    double gd_sum = 0.0;
    for (const Tracked& t : tracked_)
        gd_sum += t.nearest_reference;

    std::array<double, 4> out{};
    for (std::size_t i = 0; i < all_indicators.size(); ++i) {
        switch (all_indicators[i]) {
        case IndicatorKind::HvDiff:
            out[i] = hv;
            break;
        case IndicatorKind::EpsPlus:
            out[i] = eps;
            break;
        case IndicatorKind::GD:
            out[i] = gd_sum / static_cast<double>(tracked_.size());
            break;
        case IndicatorKind::IGD:
            out[i] = igd_sum / static_cast<double>(igd_best_.size());
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

RunRecorder::RunRecorder(const ReferenceSet& refset, const NormalizationFrame& frame)
    : frame_(frame), archive_(refset.points.cols()), tracker_(normalize(refset.points, frame))
{
}

bool RunRecorder::observe(FeCount fe, const ObjectiveVector& f)
{
    if (fe <= last_fe_)
        throw ProtocolError("evaluation stream out of order: fe " + std::to_string(fe) + " after "
                            + std::to_string(last_fe_));
    last_fe_ = fe;
    const InsertionReport report = archive_.insert(f, fe);
    if (!report.accepted)
        return false;
    tracker_.apply(report, normalize(f, frame_));

    const std::array<double, 4> current = tracker_.values();
    const auto& ladders = standard_ladders();
    for (std::size_t i = 0; i < current.size(); ++i) {
        int& count = hit_count_[i];
        while (count < targets_per_indicator && current[i] <= ladders[i].values[static_cast<std::size_t>(count)]) {
            hits_[i][static_cast<std::size_t>(count)] = fe;
            ++count;
        }
    }
    return true;
}

std::vector<FirstHitRecord> RunRecorder::records(const std::string& problem, const std::string& solver,
                                                 int run) const
{
    return make_records(problem, solver, run, hits_);
}

std::vector<FirstHitRecord> make_records(
    const std::string& problem, const std::string& solver, int run,
    const std::array<std::array<std::optional<FeCount>, targets_per_indicator>, 4>& hits)
{
    std::vector<FirstHitRecord> out;
    out.reserve(4 * targets_per_indicator);
    const auto& ladders = standard_ladders();
    for (std::size_t i = 0; i < all_indicators.size(); ++i) {
        for (int k = 0; k < targets_per_indicator; ++k) {
            FirstHitRecord rec;
            rec.problem = problem;
            rec.solver = solver;
            rec.run = run;
            rec.indicator = all_indicators[i];
            rec.target_index = k;
            rec.target_value = ladders[i].values[static_cast<std::size_t>(k)];
            rec.fe = hits[i][static_cast<std::size_t>(k)];
            out.push_back(std::move(rec));
        }
    }
    return out;
}

std::vector<FirstHitRecord> record_run(const std::string& problem, const std::string& solver, int run,
                                       const EvaluationStream& stream, const ReferenceSet& refset,
                                       const NormalizationFrame& frame)
{
    RunRecorder recorder(refset, frame);
    for (const Evaluation& e : stream)
        recorder.observe(e.fe, e.f);
    return recorder.records(problem, solver, run);
}

// ---------------------------------------------------------------------------

namespace {

auto key_of(const FirstHitRecord& r)
{
    return std::make_tuple(std::cref(r.problem), std::cref(r.solver), r.indicator, r.target_index);
}

} // namespace

FirstHitRecord best_of_runs(const std::vector<FirstHitRecord>& records)
{
    if (records.empty())
        throw ValueError("best_of_runs: no records");
    FirstHitRecord best = records.front();
    for (const FirstHitRecord& r : records) {
        if (key_of(r) != key_of(records.front()))
            throw ValueError("best_of_runs: mixed keys (" + r.problem + "/" + r.solver + " vs "
                             + records.front().problem + "/" + records.front().solver + ")");
        if (r.fe && (!best.fe || *r.fe < *best.fe))
            best.fe = r.fe;
    }
    best.run = 0;
    return best;
}

std::vector<FirstHitRecord> merge_best_of_runs(const std::vector<FirstHitRecord>& records)
{
    using Key = std::tuple<std::string, std::string, int, int>;
    std::map<Key, std::vector<FirstHitRecord>> groups;
    for (const FirstHitRecord& r : records)
        groups[{r.problem, r.solver, static_cast<int>(r.indicator), r.target_index}].push_back(r);
    std::vector<FirstHitRecord> out;
    out.reserve(groups.size());
    for (const auto& [key, group] : groups)
        out.push_back(best_of_runs(group));
    return out;
}

// ---------------------------------------------------------------------------

namespace {
constexpr std::string_view first_hit_header = "problem,solver,run,indicator,target_index,target_value,fe";
}

std::string format_first_hits(const std::vector<FirstHitRecord>& records)
{
    std::string out;
    out.reserve(records.size() * 48 + 64);
    out += first_hit_header;
    out += '\n';
    for (const FirstHitRecord& r : records) {
        out += r.problem;
        out += ',';
        out += r.solver;
        out += ',';
        out += std::to_string(r.run);
        out += ',';
        out += to_string(r.indicator);
        out += ',';
        out += std::to_string(r.target_index);
        out += ',';
        out += io::format_double(r.target_value);
        out += ',';
        if (r.fe)
            out += std::to_string(*r.fe);
        out += '\n';
    }
    return out;
}

void write_first_hits(const std::filesystem::path& path, const std::vector<FirstHitRecord>& records)
{
    io::write_file_atomic(path, format_first_hits(records));
}

std::vector<FirstHitRecord> read_first_hits(const std::filesystem::path& path)
{
    const std::string text = io::read_file(path);
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || io::chomp(line) != first_hit_header)
        throw IoError(path.string() + ": missing first-hit header");
    std::vector<FirstHitRecord> out;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view row = io::chomp(line);
        if (row.empty())
            continue;
        const auto fields = io::split(row, ',');
        if (fields.size() != 7)
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": expected 7 fields");
        FirstHitRecord r;
        r.problem = std::string(fields[0]);
        r.solver = std::string(fields[1]);
        r.run = static_cast<int>(io::parse_int(fields[2]));
        r.indicator = parse_indicator(fields[3]);
        r.target_index = static_cast<int>(io::parse_int(fields[4]));
        r.target_value = io::parse_double(fields[5]);
        if (!fields[6].empty())
            r.fe = io::parse_int(fields[6]);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace momark
