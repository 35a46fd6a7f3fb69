#include "momark/orchestrator.hpp"

#include "momark/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace momark {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

int parse_positive(std::string_view key, std::string_view value)
{
    std::int64_t v = 0;
    try {
        v = io::parse_int(value);
    } catch (const IoError&) {
        throw ConfigError(std::string(key) + ": expected an integer, got '" + std::string(value) + "'");
    }
    if (v < 1 || v > 1'000'000'000)
        throw ConfigError(std::string(key) + " must be a positive integer");
    return static_cast<int>(v);
}

void append_problem_list(std::vector<std::string>& out, std::string_view list)
{
    for (std::string_view item : io::split(list, ',')) {
        item = trim(item);
        if (!item.empty())
            out.emplace_back(item);
    }
}

} // namespace

void ExperimentConfig::validate() const
{
    if (budget_factor < 1)
        throw ConfigError("budget_factor must be >= 1");
    if (runs_stochastic < 1)
        throw ConfigError("runs_stochastic must be >= 1");
    if (jobs < 1)
        throw ConfigError("jobs must be >= 1");
    if (problems.empty())
        throw ConfigError("no problems selected");
    if (solvers.empty())
        throw ConfigError("no solvers configured (use --solver name:kind[:cmd])");
    std::set<std::string> names;
    for (const SolverDescriptor& s : solvers) {
        if (!names.insert(s.name).second)
            throw ConfigError("solver name '" + s.name + "' given twice");
    }
}

ExperimentConfig parse_config(std::string_view text, ExperimentConfig base)
{
    ExperimentConfig c = std::move(base);
    bool problems_seen = false;
    std::size_t line_no = 0;
    for (std::string_view raw : io::split(text, '\n')) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        const std::string_view line = trim(hash == std::string_view::npos ? raw : raw.substr(0, hash));
        if (line.empty())
            continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        const std::string where = "config line " + std::to_string(line_no) + ": ";
        try {
            if (key == "problems" || key == "problem") {
                if (!problems_seen)
                    c.problems.clear();
                problems_seen = true;
                append_problem_list(c.problems, value);
            } else if (key == "solver") {
                c.solvers.push_back(parse_solver_descriptor(value));
            } else if (key == "budget_factor") {
                c.budget_factor = parse_positive(key, value);
            } else if (key == "runs_stochastic" || key == "runs") {
                c.runs_stochastic = parse_positive(key, value);
            } else if (key == "base_seed" || key == "seed") {
                try {
                    c.base_seed = static_cast<std::uint64_t>(io::parse_int(value));
                } catch (const IoError&) {
                    throw ConfigError("seed: expected an integer");
                }
            } else if (key == "output_dir" || key == "out") {
                c.output_dir = std::string(value);
            } else if (key == "refset_dir" || key == "refsets") {
                c.refset_dir = std::string(value);
            } else if (key == "jobs") {
                c.jobs = parse_positive(key, value);
            } else {
                throw ConfigError("unknown key '" + key + "'");
            }
        } catch (const ConfigError& e) {
            throw ConfigError(where + e.what());
        }
    }
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base)
{
    if (!std::filesystem::exists(path))
        throw ConfigError("config file not found: " + path.string());
    return parse_config(io::read_file(path), std::move(base));
}

std::string format_config(const ExperimentConfig& c)
{
    std::string out;
    out += "problems = ";
    for (std::size_t i = 0; i < c.problems.size(); ++i)
        out += (i ? "," : "") + c.problems[i];
    out += "\n";
    for (const SolverDescriptor& s : c.solvers)
        out += "solver = " + format_solver_descriptor(s) + "\n";
    out += "budget_factor = " + std::to_string(c.budget_factor) + "\n";
    out += "runs_stochastic = " + std::to_string(c.runs_stochastic) + "\n";
    out += "base_seed = " + std::to_string(c.base_seed) + "\n";
    out += "output_dir = " + c.output_dir.string() + "\n";
    out += "refset_dir = " + c.refset_dir.string() + "\n";
    out += "jobs = " + std::to_string(c.jobs) + "\n";
    return out;
}

std::vector<std::string> resolve_problems(const std::vector<std::string>& selection)
{
    std::set<std::string> names;
    for (const std::string& s : selection) {
        if (s == "core" || s == "all") {
            CategoryFilter f;
            f.core_only = s == "core";
            for (const ProblemMeta& meta : registry_list(f))
                names.insert(meta.name);
        } else {
            names.insert(registry_lookup(s).name());
        }
    }
    if (names.empty())
        throw ConfigError("no problems selected");
    return {names.begin(), names.end()};
}

std::string list_problems(const CategoryFilter& filter)
{
    std::ostringstream out;
    for (const ProblemMeta& p : registry_list(filter)) {
        out << p.name << '\t' << p.n << '\t' << p.m << '\t' << to_tag(p.dim_class) << '\t' << to_tag(p.separability)
            << '\t' << to_tag(p.modality) << '\n';
    }
    return out.str();
}

} // namespace momark
