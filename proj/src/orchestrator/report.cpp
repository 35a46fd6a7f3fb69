#include "momark/orchestrator.hpp"

#include "momark/io.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>

namespace momark {

std::vector<DataProfile> solver_profiles(const std::vector<FirstHitRecord>& merged, const ProfileKey& key,
                                         const std::map<std::string, int>& multipliers, int budget_factor,
                                         const std::vector<double>& alphas)
{
    std::set<std::string> problems;
    for (const ProfileTriple& t : key.triples)
        problems.insert(t.problem);
    const std::map<std::string, int> dims = registry_dims(problems);

    std::vector<DataProfile> out;
    for (const auto& [solver, multiplier] : multipliers) {
        // Per-run budget / (multiplier * n) is the same for both solver kinds.
        out.push_back(data_profile(merged, key, {solver, multiplier}, alphas, dims,
                                   static_cast<double>(budget_factor)));
    }
    return out;
}

std::vector<std::filesystem::path> cmd_profile(const ProfileOptions& options)
{
    if (options.run_dirs.empty())
        throw ConfigError("profile: no run directories given");
    std::vector<Panel> panels;
    for (const std::string& name : options.panels)
        panels.push_back(parse_panel(name));

    std::optional<int> budget_factor;
    std::optional<int> runs_stochastic;
    std::map<std::string, int> multipliers;
    std::map<std::string, SolverKind> kinds;
    std::vector<FirstHitRecord> all;
    for (const std::filesystem::path& dir : options.run_dirs) {
        const RunManifest m = read_manifest(dir);
        if (budget_factor && *budget_factor != m.config.budget_factor)
            throw ConfigError("run directories disagree on budget_factor (" + std::to_string(*budget_factor) + " vs "
                              + std::to_string(m.config.budget_factor) + " in " + dir.string() + ")");
        if (runs_stochastic && *runs_stochastic != m.config.runs_stochastic)
            throw ConfigError("run directories disagree on runs_stochastic (" + dir.string() + ")");
        budget_factor = m.config.budget_factor;
        runs_stochastic = m.config.runs_stochastic;
        for (const SolverDescriptor& s : m.config.solvers) {
            const auto [it, fresh] = kinds.emplace(s.name, s.kind);
            if (!fresh && it->second != s.kind)
                throw ConfigError("solver " + s.name + " appears with different kinds across run directories");
            multipliers[s.name] = make_budget(s.kind, 1, m.config.budget_factor, m.config.runs_stochastic).multiplier;
            const std::vector<FirstHitRecord> hits = read_first_hits(first_hits_path(dir, s.name));
            all.insert(all.end(), hits.begin(), hits.end());
        }
    }
    const std::vector<FirstHitRecord> merged = merge_best_of_runs(all);

    const std::filesystem::path out_dir = options.out_dir.empty() ? options.run_dirs.front() : options.out_dir;
    std::vector<std::filesystem::path> written;
    for (const Panel& panel : panels) {
        std::vector<std::pair<std::string, std::vector<IndicatorKind>>> groups;
        for (IndicatorKind k : all_indicators)
            groups.emplace_back(std::string(to_string(k)), std::vector<IndicatorKind>{k});
        groups.emplace_back("combined", std::vector<IndicatorKind>(all_indicators.begin(), all_indicators.end()));

        for (const auto& [label, indicators] : groups) {
            const ProfileKey key = aggregate_keys(merged, panel.filter, indicators);
            if (key.triples.empty())
                break;
            const std::vector<DataProfile> profiles =
                solver_profiles(merged, key, multipliers, *budget_factor, options.alphas);
            const std::string stem = "profile_" + panel.name + "_" + label;
            emit_csv(profiles, out_dir / (stem + ".csv"));
            emit_svg(profiles, panel.name + " / " + label, out_dir / (stem + ".svg"));
            written.push_back(out_dir / (stem + ".csv"));
            written.push_back(out_dir / (stem + ".svg"));
        }
    }
    return written;
}

// ---------------------------------------------------------------------------

std::vector<std::string> default_timing_problems()
{
    std::vector<std::string> out{"BK1", "DPAM1", "DTLZ3", "FES3"};
    try {
        registry_lookup("L3ZDT1");
        out.insert(out.begin() + 2, "L3ZDT1");
    } catch (const NotFoundError&) {
    }
    return out;
}

std::vector<TimingRow> cmd_timing(const TimingOptions& options)
{
    if (options.budgets.empty())
        throw ConfigError("timing: no budgets");
    for (FeCount b : options.budgets) {
        if (b < 1)
            throw ConfigError("timing: budgets must be positive");
    }
    if (options.repeats < 1)
        throw ConfigError("timing: repeats must be positive");
    const std::vector<std::string> names = options.problems.empty() ? default_timing_problems() : options.problems;
    std::vector<const ProblemInstance*> problems;
    for (const std::string& name : names)
        problems.push_back(&registry_lookup(name));

    std::vector<TimingRow> rows;
    for (FeCount budget : options.budgets) {
        for (const ProblemInstance* p : problems) {
            double best = std::numeric_limits<double>::infinity();
            for (int rep = 0; rep < options.repeats; ++rep) {
                const auto start = std::chrono::steady_clock::now();
                if (options.solver.external()) {
                    ExternalSolver s(options.solver.command, p->meta(), budget, options.seed);
                    run_solver(s, *p, budget, nullptr);
                } else {
                    const auto s = make_builtin_solver(options.solver.name, p->meta(), options.seed);
                    run_solver(*s, *p, budget, nullptr);
                }
                const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
                best = std::min(best, elapsed.count());
            }
            rows.push_back({budget, p->name(), best, best / static_cast<double>(budget)});
        }
    }
    return rows;
}

std::string format_timing_csv(const std::vector<TimingRow>& rows, const TimingOptions& options)
{
    std::string out = "# solver=" + format_solver_descriptor(options.solver) + "\n";
    out += "# repeats=" + std::to_string(options.repeats) + " (fastest whole run reported)\n";
    if (options.problems.empty()) {
        std::string list;
        for (const std::string& p : default_timing_problems())
            list += (list.empty() ? "" : ",") + p;
        out += "# problems=" + list + "\n";
        if (list.find("L3ZDT1") == std::string::npos)
            out += "# note: L3ZDT1 is not registered; the default list runs without it\n";
    }
    out += "budget,problem,seconds,seconds_per_fe\n";
    for (const TimingRow& r : rows)
        out += std::to_string(r.budget) + "," + r.problem + "," + io::format_double(r.seconds) + ","
               + io::format_double(r.seconds_per_fe) + "\n";
    return out;
}

std::vector<TimingRow> parse_timing_csv(std::string_view text)
{
    std::vector<TimingRow> rows;
    bool header = false;
    for (std::string_view raw : io::split(text, '\n')) {
        const std::string_view line = io::chomp(raw);
        if (line.empty() || line.front() == '#')
            continue;
        if (!header) {
            if (line != "budget,problem,seconds,seconds_per_fe")
                throw IoError("timing csv: unexpected header '" + std::string(line) + "'");
            header = true;
            continue;
        }
        const auto f = io::split(line, ',');
        if (f.size() != 4)
            throw IoError("timing csv: expected 4 fields");
        rows.push_back({io::parse_int(f[0]), std::string(f[1]), io::parse_double(f[2]), io::parse_double(f[3])});
    }
    if (!header)
        throw IoError("timing csv: missing header");
    return rows;
}

} // namespace momark
