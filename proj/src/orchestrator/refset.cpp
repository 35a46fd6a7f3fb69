#include "momark/orchestrator.hpp"

#include "momark/io.hpp"

#include <atomic>
#include <exception>
#include <iostream>
#include <sstream>
#include <thread>

namespace momark {

namespace {

std::string join_vector(const ObjectiveVector& v)
{
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + io::format_double(v(i));
    return out;
}

ObjectiveVector parse_vector(std::string_view text, const std::string& origin)
{
    const auto fields = io::split(text, ',');
    ObjectiveVector v(static_cast<Eigen::Index>(fields.size()));
    for (std::size_t i = 0; i < fields.size(); ++i) {
        try {
            v(static_cast<Eigen::Index>(i)) = io::parse_double(fields[i]);
        } catch (const IoError& e) {
            throw IoError(origin + ": " + e.what());
        }
    }
    return v;
}

std::string objective_header(Eigen::Index m)
{
    std::string out;
    for (Eigen::Index i = 1; i <= m; ++i)
        out += (i > 1 ? ",f" : "f") + std::to_string(i);
    return out;
}

} // namespace

StoredRefset generate_refset(const ProblemInstance& problem, const RefsetGenerator& g)
{
    if (g.budget_factor < 1 || g.budget_multiplier < 1 || g.runs_stochastic < 1)
        throw ConfigError("refset generator: budgets and runs must be positive");
    Archive pool(problem.m());
    FeCount stamp = 0;
    const auto sink = [&](const Evaluation& e) { pool.insert(e.f, ++stamp); };
    for (std::string_view name : builtin_names) {
        const RunBudget budget = make_budget(builtin_kind(name), problem.n(),
                                             g.budget_factor * g.budget_multiplier, g.runs_stochastic);
        for (int run = 0; run < budget.runs; ++run) {
            const auto solver = make_builtin_solver(name, problem.meta(), g.seed + static_cast<std::uint64_t>(run));
            run_solver(*solver, problem, budget.per_run_budget, sink);
        }
    }

    StoredRefset out;
    out.generator = g;
    out.set.problem = problem.name();
    out.set.points = pool.points();
    out.frame = NormalizationFrame::from_points(out.set.points);
    const Eigen::Index k = out.frame.degenerate_coordinate();
    if (k >= 0)
        throw ValueError("reference set for " + problem.name() + " is degenerate: objective f" + std::to_string(k + 1)
                         + " has ideal == nadir");
    out.set.validate();
    return out;
}

std::filesystem::path refset_path(const std::filesystem::path& dir, const std::string& problem)
{
    return dir / (problem + ".csv");
}

std::string format_refset(const StoredRefset& r)
{
    std::string out = "# momark reference set\n";
    out += "# problem=" + r.set.problem + "\n";
    out += "# generators=random_search,grid_sweep,dominance_hillclimber\n";
    out += "# budget_factor=" + std::to_string(r.generator.budget_factor) + "\n";
    out += "# budget_multiplier=" + std::to_string(r.generator.budget_multiplier) + "\n";
    out += "# runs_stochastic=" + std::to_string(r.generator.runs_stochastic) + "\n";
    out += "# seed=" + std::to_string(r.generator.seed) + "\n";
    out += "# ideal=" + join_vector(r.frame.ideal) + "\n";
    out += "# nadir=" + join_vector(r.frame.nadir) + "\n";
    out += objective_header(r.set.points.cols()) + "\n";
    for (Eigen::Index i = 0; i < r.set.points.rows(); ++i)
        out += join_vector(r.set.points.row(i).transpose()) + "\n";
    return out;
}

StoredRefset parse_refset(std::string_view text, const std::string& origin)
{
    StoredRefset r;
    std::optional<ObjectiveVector> ideal;
    std::optional<ObjectiveVector> nadir;
    std::vector<ObjectiveVector> rows;
    bool header = false;
    Eigen::Index m = 0;
    for (std::string_view raw : io::split(text, '\n')) {
        const std::string_view line = io::chomp(raw);
        if (line.empty())
            continue;
        if (line.front() == '#') {
            const std::string_view body = line.substr(line.find_first_not_of("# "));
            const std::size_t eq = body.find('=');
            if (eq == std::string_view::npos)
                continue;
            const std::string_view key = body.substr(0, eq);
            const std::string_view value = body.substr(eq + 1);
            try {
                if (key == "problem")
                    r.set.problem = std::string(value);
                else if (key == "budget_factor")
                    r.generator.budget_factor = static_cast<int>(io::parse_int(value));
                else if (key == "budget_multiplier")
                    r.generator.budget_multiplier = static_cast<int>(io::parse_int(value));
                else if (key == "runs_stochastic")
                    r.generator.runs_stochastic = static_cast<int>(io::parse_int(value));
                else if (key == "seed")
                    r.generator.seed = static_cast<std::uint64_t>(io::parse_int(value));
                else if (key == "ideal")
                    ideal = parse_vector(value, origin);
                else if (key == "nadir")
                    nadir = parse_vector(value, origin);
            } catch (const IoError& e) {
                throw IoError(origin + ": bad metadata '" + std::string(key) + "': " + e.what());
            }
            continue;
        }
        if (!header) {
            m = static_cast<Eigen::Index>(io::split(line, ',').size());
            if (line != objective_header(m))
                throw IoError(origin + ": expected objective header f1,...,fm");
            header = true;
            continue;
        }
        ObjectiveVector v = parse_vector(line, origin);
        if (v.size() != m)
            throw IoError(origin + ": row with " + std::to_string(v.size()) + " values, expected " + std::to_string(m));
        rows.push_back(std::move(v));
    }
    if (r.set.problem.empty())
        throw IoError(origin + ": missing '# problem=' line");
    if (!header || rows.empty())
        throw IoError(origin + ": no reference points");
    r.set.points = stack_rows(rows);
    r.frame = NormalizationFrame::from_points(r.set.points);
    if ((ideal && *ideal != r.frame.ideal) || (nadir && *nadir != r.frame.nadir))
        throw IoError(origin + ": stored ideal/nadir do not match the points");
    return r;
}

void write_refset(const std::filesystem::path& path, const StoredRefset& refset)
{
    io::write_file_atomic(path, format_refset(refset));
}

StoredRefset read_refset(const std::filesystem::path& path)
{
    return parse_refset(io::read_file(path), path.string());
}

std::vector<std::filesystem::path> cmd_refset(const RefsetOptions& options)
{
    if (options.jobs < 1)
        throw ConfigError("jobs must be >= 1");
    const std::vector<std::string> problems = resolve_problems(options.problems);
    std::vector<std::filesystem::path> paths;
    for (const std::string& name : problems) {
        paths.push_back(refset_path(options.dir, name));
        if (!options.force && std::filesystem::exists(paths.back()))
            throw ConfigError("reference set " + paths.back().string() + " exists (use --force to overwrite)");
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(problems.size());
    const auto worker = [&] {
        for (std::size_t i = next++; i < problems.size(); i = next++) {
            try {
                write_refset(paths[i], generate_refset(registry_lookup(problems[i]), options.generator));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const int threads = std::min<int>(options.jobs, static_cast<int>(problems.size()));
    for (int t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool)
        t.join();
    std::vector<std::exception_ptr> failed;
    std::string summary;
    for (const std::exception_ptr& e : errors) {
        if (!e)
            continue;
        failed.push_back(e);
        try {
            std::rethrow_exception(e);
        } catch (const std::exception& ex) {
            summary += std::string(summary.empty() ? "" : "; ") + ex.what();
        }
    }
    if (failed.size() == 1)
        std::rethrow_exception(failed.front());
    if (!failed.empty())
        throw ValueError(std::to_string(failed.size()) + " reference sets failed: " + summary);
    return paths;
}

} // namespace momark
