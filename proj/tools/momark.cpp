// Command-line front end: run, refset, profile, timing, list-problems.

#include "momark/io.hpp"
#include "momark/orchestrator.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace momark;

namespace {

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    for (std::string_view s : io::split(text, ',')) {
        if (!s.empty())
            out.emplace_back(s);
    }
    return out;
}

std::filesystem::path default_out()
{
    const char* env = std::getenv("MOMARK_OUT");
    return env && *env ? std::filesystem::path(env) : std::filesystem::path("momark-out");
}

int run_main(int argc, char** argv)
{
    CLI::App app{"Benchmarking harness for multi-objective black-box solvers"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version));

    // run
    auto* run = app.add_subcommand("run", "Run solvers on problems and record first hits");
    std::string config_path;
    std::string problems;
    std::vector<std::string> solvers;
    int budget_factor = 0;
    int runs = 0;
    std::int64_t seed = -1;
    std::string out;
    std::string refsets;
    int jobs = 0;
    run->add_option("--config", config_path, "Key = value config file");
    run->add_option("--problems", problems, "Comma list of problem names, or core/all");
    run->add_option("--solver", solvers, "name:kind[:cmd] (repeatable)");
    run->add_option("--budget-factor", budget_factor, "Evaluations per decision variable")->check(CLI::PositiveNumber);
    run->add_option("--runs", runs, "Runs per stochastic solver")->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "Base seed")->check(CLI::NonNegativeNumber);
    run->add_option("--out", out, "Run directory (default $MOMARK_OUT or momark-out)");
    run->add_option("--refsets", refsets, "Reference-set directory");
    run->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    // refset
    auto* refset = app.add_subcommand("refset", "Generate reference sets from the builtin solvers");
    std::string ref_problems = "core";
    int ref_budget_factor = 100;
    std::int64_t ref_seed = static_cast<std::int64_t>(RefsetGenerator{}.seed);
    std::string ref_dir = "refsets";
    bool force = false;
    int ref_jobs = 1;
    refset->add_option("--problems", ref_problems, "Comma list of problem names, or core/all");
    refset->add_option("--budget-factor", ref_budget_factor, "Standard evaluations per variable")
        ->check(CLI::PositiveNumber);
    refset->add_option("--seed", ref_seed, "Generator seed")->check(CLI::NonNegativeNumber);
    refset->add_option("--refsets,--out", ref_dir, "Output directory");
    refset->add_flag("--force", force, "Overwrite existing files");
    refset->add_option("--jobs", ref_jobs, "Worker threads")->check(CLI::PositiveNumber);

    // profile
    auto* profile = app.add_subcommand("profile", "Data profiles from one or more run directories");
    std::vector<std::string> run_dirs;
    std::string panels = "all";
    std::string profile_out;
    profile->add_option("run_dirs", run_dirs, "Run directories")->required();
    profile->add_option("--panels", panels, "Comma list of panels or 'default'");
    profile->add_option("--out", profile_out, "Output directory (default: first run directory)");

    // timing
    auto* timing = app.add_subcommand("timing", "Wall-clock time per whole run");
    std::string timing_problems;
    std::string timing_budgets = "10,100,1000";
    std::string timing_solver = "random_search:stochastic";
    std::int64_t timing_seed = 1;
    int repeats = 5;
    std::string timing_out;
    timing->add_option("--problems", timing_problems, "Comma list (default BK1,DPAM1,DTLZ3,FES3)");
    timing->add_option("--budgets", timing_budgets, "Comma list of evaluation budgets");
    timing->add_option("--solver", timing_solver, "name:kind[:cmd]");
    timing->add_option("--seed", timing_seed, "Seed")->check(CLI::NonNegativeNumber);
    timing->add_option("--repeats", repeats, "Repeats per cell (fastest kept)")->check(CLI::PositiveNumber);
    timing->add_option("--out", timing_out, "CSV path (default: stdout)");

    // list-problems
    auto* list = app.add_subcommand("list-problems", "Registered problems: name n m D S M");
    std::string dim;
    std::string sep;
    std::string mod;
    int m = 0;
    bool core_only = false;
    list->add_option("--dim", dim, "L or H")->check(CLI::IsMember({"L", "H"}));
    list->add_option("--sep", sep, "S or NS")->check(CLI::IsMember({"S", "NS"}));
    list->add_option("--mod", mod, "U or M")->check(CLI::IsMember({"U", "M"}));
    list->add_option("--m", m, "Number of objectives")->check(CLI::Range(2, 4));
    list->add_flag("--core", core_only, "Core set only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (*run) {
        ExperimentConfig cfg;
        cfg.output_dir = default_out();
        if (!config_path.empty())
            cfg = load_config(config_path, cfg);
        if (!problems.empty())
            cfg.problems = split_list(problems);
        if (!solvers.empty()) {
            cfg.solvers.clear();
            for (const std::string& s : solvers)
                cfg.solvers.push_back(parse_solver_descriptor(s));
        }
        if (budget_factor > 0)
            cfg.budget_factor = budget_factor;
        if (runs > 0)
            cfg.runs_stochastic = runs;
        if (seed >= 0)
            cfg.base_seed = static_cast<std::uint64_t>(seed);
        if (!out.empty())
            cfg.output_dir = out;
        if (!refsets.empty())
            cfg.refset_dir = refsets;
        if (jobs > 0)
            cfg.jobs = jobs;
        const RunManifest manifest = cmd_run(cfg);
        FeCount total = 0;
        bool failed = false;
        for (const RunRecord& r : manifest.runs) {
            total += r.fe_consumed;
            failed = failed || r.failed;
        }
        std::cout << manifest.runs.size() << " runs, " << total << " evaluations -> " << cfg.output_dir.string()
                  << "\n";
        return failed ? 2 : 0;
    }
    if (*refset) {
        RefsetOptions opt;
        opt.problems = split_list(ref_problems);
        opt.generator.budget_factor = ref_budget_factor;
        opt.generator.seed = static_cast<std::uint64_t>(ref_seed);
        opt.dir = ref_dir;
        opt.force = force;
        opt.jobs = ref_jobs;
        const auto paths = cmd_refset(opt);
        std::cout << paths.size() << " reference sets -> " << ref_dir << "\n";
        return 0;
    }
    if (*profile) {
        ProfileOptions opt;
        for (const std::string& d : run_dirs)
            opt.run_dirs.emplace_back(d);
        if (panels == "default") {
            opt.panels.clear();
            for (const Panel& p : default_panels())
                opt.panels.push_back(p.name);
        } else {
            opt.panels = split_list(panels);
        }
        opt.out_dir = profile_out;
        const auto paths = cmd_profile(opt);
        for (const auto& p : paths)
            std::cout << p.string() << "\n";
        return 0;
    }
    if (*timing) {
        TimingOptions opt;
        if (!timing_problems.empty())
            opt.problems = split_list(timing_problems);
        opt.budgets.clear();
        for (const std::string& b : split_list(timing_budgets)) {
            try {
                opt.budgets.push_back(io::parse_int(b));
            } catch (const IoError&) {
                throw ConfigError("--budgets: '" + b + "' is not an integer");
            }
        }
        opt.solver = parse_solver_descriptor(timing_solver);
        opt.seed = static_cast<std::uint64_t>(timing_seed);
        opt.repeats = repeats;
        const std::string csv = format_timing_csv(cmd_timing(opt), opt);
        if (timing_out.empty())
            std::cout << csv;
        else
            io::write_file_atomic(timing_out, csv);
        return 0;
    }
    if (*list) {
        CategoryFilter f;
        if (!dim.empty())
            f.dim_class = dim == "L" ? DimClass::Low : DimClass::High;
        if (!sep.empty())
            f.separability = sep == "S" ? Separability::Separable : Separability::NonSeparable;
        if (!mod.empty())
            f.modality = mod == "U" ? Modality::Unimodal : Modality::Multimodal;
        if (m > 0)
            f.m = m;
        f.core_only = core_only;
        std::cout << list_problems(f);
        return 0;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run_main(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
