#include "momark/orchestrator.hpp"

#include "momark/io.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <iostream>
#include <thread>

namespace momark {

using nlohmann::json;

namespace {

json vector_json(const ObjectiveVector& v)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(v(i));
    return out;
}

ObjectiveVector vector_from_json(const json& j)
{
    ObjectiveVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = j.at(i).get<double>();
    return v;
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Cell {
    const SolverDescriptor* solver = nullptr;
    const ProblemInstance* problem = nullptr;
    const StoredRefset* refset = nullptr;
    int run = 0;
    std::uint64_t seed = 0;
    FeCount budget = 0;
};

struct CellResult {
    RunRecord record;
    std::vector<FirstHitRecord> hits;
};

std::filesystem::path cell_hits_path(const std::filesystem::path& dir, const Cell& c)
{
    return dir / "cells" / c.solver->name / c.problem->name() / ("run" + std::to_string(c.run) + ".csv");
}

CellResult execute_cell(const Cell& c, const std::filesystem::path& out_dir)
{
    RunRecorder recorder(c.refset->set, c.refset->frame);
    std::vector<std::pair<FeCount, ObjectiveVector>> trace;
    const auto sink = [&](const Evaluation& e) {
        if (recorder.observe(e.fe, e.f))
            trace.emplace_back(e.fe, e.f);
    };

    CellResult out;
    RunRecord& rec = out.record;
    rec.solver = c.solver->name;
    rec.problem = c.problem->name();
    rec.run = c.run;
    rec.seed = c.seed;
    rec.fe_budget = c.budget;

    FeCount consumed = 0;
    const auto counting_sink = [&](const Evaluation& e) {
        consumed = e.fe;
        sink(e);
    };
    if (c.solver->external()) {
        try {
            ExternalSolver session(c.solver->command, c.problem->meta(), c.budget, c.seed);
            run_solver(session, *c.problem, c.budget, counting_sink);
            if (session.truncated()) {
                rec.complete = false;
                rec.message = "solver closed its output after " + std::to_string(consumed) + " evaluations";
            }
        } catch (const ProtocolError& e) {
            rec.failed = true;
            rec.message = e.what();
        } catch (const DomainError& e) {
            rec.failed = true;
            rec.message = e.what();
        } catch (const IoError& e) {
            rec.failed = true;
            rec.message = e.what();
        }
        if (rec.failed)
            rec.complete = false;
        if (!rec.message.empty())
            std::cerr << "warning: " << rec.solver << " on " << rec.problem << " run " << rec.run << ": "
                      << rec.message << "\n";
    } else {
        const auto solver = make_builtin_solver(c.solver->name, c.problem->meta(), c.seed);
        run_solver(*solver, *c.problem, c.budget, counting_sink);
    }
    rec.fe_consumed = consumed;
    rec.archive_size = recorder.archive().size();
    out.hits = recorder.records(rec.problem, rec.solver, rec.run);

    write_first_hits(cell_hits_path(out_dir, c), out.hits);
    io::write_file_atomic(archive_path(out_dir, rec.solver, rec.problem, rec.run),
                          format_archive_trace(trace, c.problem->m()));
    return out;
}

} // namespace

std::string format_manifest(const RunManifest& m)
{
    json j;
    j["version"] = m.version;
    j["timestamp"] = m.timestamp;

    json cfg;
    cfg["problems"] = m.config.problems;
    json solvers = json::array();
    for (const SolverDescriptor& s : m.config.solvers)
        solvers.push_back(format_solver_descriptor(s));
    cfg["solvers"] = solvers;
    cfg["budget_factor"] = m.config.budget_factor;
    cfg["runs_stochastic"] = m.config.runs_stochastic;
    cfg["base_seed"] = m.config.base_seed;
    cfg["output_dir"] = m.config.output_dir.string();
    cfg["refset_dir"] = m.config.refset_dir.string();
    cfg["jobs"] = m.config.jobs;
    j["config"] = cfg;

    json conventions;
    conventions["targets_per_indicator"] = targets_per_indicator;
    conventions["indicators"] = json::array();
    for (IndicatorKind k : all_indicators)
        conventions["indicators"].push_back(std::string(to_string(k)));
    conventions["hv_reference_point"] = "(1,...,1) after normalization";
    conventions["seed_rule"] = "base_seed + run";
    j["conventions"] = conventions;

    json frames = json::object();
    for (const auto& [problem, frame] : m.frames)
        frames[problem] = {{"ideal", vector_json(frame.ideal)}, {"nadir", vector_json(frame.nadir)}};
    j["frames"] = frames;

    json runs = json::array();
    for (const RunRecord& r : m.runs) {
        runs.push_back({{"solver", r.solver},
                        {"problem", r.problem},
                        {"run", r.run},
                        {"seed", r.seed},
                        {"fe_budget", r.fe_budget},
                        {"fe_consumed", r.fe_consumed},
                        {"archive_size", r.archive_size},
                        {"complete", r.complete},
                        {"failed", r.failed},
                        {"message", r.message}});
    }
    j["runs"] = runs;
    return j.dump(2) + "\n";
}

RunManifest parse_manifest(std::string_view text)
{
    try {
        const json j = json::parse(text);
        RunManifest m;
        m.version = j.at("version").get<std::string>();
        m.timestamp = j.at("timestamp").get<std::string>();
        const json& cfg = j.at("config");
        m.config.problems = cfg.at("problems").get<std::vector<std::string>>();
        m.config.solvers.clear();
        for (const json& s : cfg.at("solvers"))
            m.config.solvers.push_back(parse_solver_descriptor(s.get<std::string>()));
        m.config.budget_factor = cfg.at("budget_factor").get<int>();
        m.config.runs_stochastic = cfg.at("runs_stochastic").get<int>();
        m.config.base_seed = cfg.at("base_seed").get<std::uint64_t>();
        m.config.output_dir = cfg.at("output_dir").get<std::string>();
        m.config.refset_dir = cfg.at("refset_dir").get<std::string>();
        m.config.jobs = cfg.at("jobs").get<int>();
        for (const auto& [problem, frame] : j.at("frames").items())
            m.frames[problem] = {vector_from_json(frame.at("ideal")), vector_from_json(frame.at("nadir"))};
        for (const json& r : j.at("runs")) {
            RunRecord rec;
            rec.solver = r.at("solver").get<std::string>();
            rec.problem = r.at("problem").get<std::string>();
            rec.run = r.at("run").get<int>();
            rec.seed = r.at("seed").get<std::uint64_t>();
            rec.fe_budget = r.at("fe_budget").get<FeCount>();
            rec.fe_consumed = r.at("fe_consumed").get<FeCount>();
            rec.archive_size = r.at("archive_size").get<std::size_t>();
            rec.complete = r.at("complete").get<bool>();
            rec.failed = r.at("failed").get<bool>();
            rec.message = r.at("message").get<std::string>();
            m.runs.push_back(std::move(rec));
        }
        return m;
    } catch (const json::exception& e) {
        throw IoError(std::string("manifest: ") + e.what());
    }
}

RunManifest read_manifest(const std::filesystem::path& run_dir)
{
    const std::filesystem::path path = run_dir / "manifest.json";
    if (!std::filesystem::exists(path))
        throw ConfigError(run_dir.string() + " is not a run directory (no manifest.json)");
    return parse_manifest(io::read_file(path));
}

std::string format_archive_trace(const std::vector<std::pair<FeCount, ObjectiveVector>>& trace, int m)
{
    std::string out = "fe";
    for (int i = 1; i <= m; ++i)
        out += ",f" + std::to_string(i);
    out += '\n';
    for (const auto& [fe, f] : trace) {
        if (f.size() != m)
            throw DimensionError("archive trace: point with " + std::to_string(f.size()) + " objectives");
        out += std::to_string(fe);
        for (Eigen::Index i = 0; i < f.size(); ++i)
            out += "," + io::format_double(f(i));
        out += '\n';
    }
    return out;
}

std::vector<std::pair<FeCount, ObjectiveVector>> parse_archive_trace(std::string_view text, const std::string& origin)
{
    std::vector<std::pair<FeCount, ObjectiveVector>> out;
    bool header = false;
    std::size_t width = 0;
    std::size_t line_no = 0;
    for (std::string_view raw : io::split(text, '\n')) {
        ++line_no;
        const std::string_view line = io::chomp(raw);
        if (line.empty())
            continue;
        const auto fields = io::split(line, ',');
        if (!header) {
            if (fields.size() < 2 || fields[0] != "fe")
                throw IoError(origin + ": expected header fe,f1,...");
            width = fields.size();
            header = true;
            continue;
        }
        if (fields.size() != width)
            throw IoError(origin + ":" + std::to_string(line_no) + ": wrong field count");
        ObjectiveVector f(static_cast<Eigen::Index>(width - 1));
        for (std::size_t i = 1; i < width; ++i)
            f(static_cast<Eigen::Index>(i - 1)) = io::parse_double(fields[i]);
        out.emplace_back(io::parse_int(fields[0]), std::move(f));
    }
    if (!header)
        throw IoError(origin + ": empty archive trace");
    return out;
}

std::filesystem::path first_hits_path(const std::filesystem::path& run_dir, const std::string& solver)
{
    return run_dir / ("firsthits_" + solver + ".csv");
}

std::filesystem::path archive_path(const std::filesystem::path& run_dir, const std::string& solver,
                                   const std::string& problem, int run)
{
    return run_dir / "archives" / solver / problem / ("run" + std::to_string(run) + ".csv");
}

RunManifest cmd_run(const ExperimentConfig& config)
{
    config.validate();
    const std::vector<std::string> problems = resolve_problems(config.problems);

    std::map<std::string, StoredRefset> refsets;
    for (const std::string& name : problems) {
        const std::filesystem::path path = refset_path(config.refset_dir, name);
        if (!std::filesystem::exists(path))
            throw ConfigError("no reference set for " + name + " at " + path.string()
                              + "; generate it with `momark refset --problems " + name + " --refsets "
                              + config.refset_dir.string() + "`");
        StoredRefset r = read_refset(path);
        if (r.set.problem != name)
            throw ConfigError(path.string() + " holds the reference set of " + r.set.problem);
        if (r.set.points.cols() != registry_lookup(name).m())
            throw ConfigError(path.string() + ": objective count does not match " + name);
        refsets.emplace(name, std::move(r));
    }

    std::vector<Cell> cells;
    for (const SolverDescriptor& s : config.solvers) {
        for (const std::string& name : problems) {
            const ProblemInstance& p = registry_lookup(name);
            const RunBudget b = make_budget(s.kind, p.n(), config.budget_factor, config.runs_stochastic);
            for (int run = 0; run < b.runs; ++run)
                cells.push_back({&s, &p, &refsets.at(name), run, config.base_seed + static_cast<std::uint64_t>(run),
                                 b.per_run_budget});
        }
    }

    std::vector<CellResult> results(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                results[i] = execute_cell(cells[i], config.output_dir);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const int threads = std::min<int>(config.jobs, static_cast<int>(cells.size()));
    for (int t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool)
        t.join();
    for (const std::exception_ptr& e : errors) {
        if (e)
            std::rethrow_exception(e);
    }

    RunManifest manifest;
    manifest.config = config;
    manifest.timestamp = utc_timestamp();
    for (const auto& [name, r] : refsets)
        manifest.frames[name] = r.frame;
    for (const SolverDescriptor& s : config.solvers) {
        std::vector<FirstHitRecord> hits;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].solver != &s)
                continue;
            hits.insert(hits.end(), results[i].hits.begin(), results[i].hits.end());
        }
        write_first_hits(first_hits_path(config.output_dir, s.name), hits);
    }
    for (CellResult& r : results)
        manifest.runs.push_back(std::move(r.record));
    io::write_file_atomic(config.output_dir / "manifest.json", format_manifest(manifest));
    return manifest;
}

} // namespace momark
