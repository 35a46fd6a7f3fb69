#include "momark/io.hpp"
#include "momark/orchestrator.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace momark;

namespace {

int shell(const std::string& command)
{
    const int status = std::system((command + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

ExperimentConfig small_config(const std::filesystem::path& root)
{
    ExperimentConfig c;
    c.problems = {"BK1", "Sch1"};
    c.solvers = {parse_solver_descriptor("random_search:stochastic"),
                 parse_solver_descriptor("grid_sweep:deterministic")};
    c.output_dir = root / "run";
    c.refset_dir = root / "refsets";
    c.jobs = 2;
    return c;
}

void make_refsets(const ExperimentConfig& c)
{
    RefsetOptions opt;
    opt.problems = c.problems;
    opt.generator.budget_factor = 20;
    opt.dir = c.refset_dir;
    opt.jobs = 2;
    cmd_refset(opt);
}

} // namespace

TEST_CASE("config parse and format")
{
    const ExperimentConfig c = parse_config("# comment\n"
                                            "problems = BK1, DTLZ2\n"
                                            "problem = FES3\n"
                                            "solver = random_search:stochastic\n"
                                            "solver = ext:deterministic:./my solver --flag\n"
                                            "budget_factor = 50   # trailing\n"
                                            "runs = 3\n"
                                            "seed = 9\n"
                                            "out = o\n"
                                            "refsets = r\n"
                                            "jobs = 4\n");
    CHECK(c.problems == std::vector<std::string>{"BK1", "DTLZ2", "FES3"});
    REQUIRE(c.solvers.size() == 2);
    CHECK(c.solvers[1].command == "./my solver --flag");
    CHECK(c.solvers[1].kind == SolverKind::Deterministic);
    CHECK(c.budget_factor == 50);
    CHECK(c.runs_stochastic == 3);
    CHECK(c.base_seed == 9);
    CHECK(c.jobs == 4);
    CHECK(parse_config(format_config(c)) == c);
    CHECK_NOTHROW(c.validate());

    CHECK_THROWS_AS(parse_config("colour = blue\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("budget_factor = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("runs = many\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("just words\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("solver = x:sometimes\n"), ConfigError);
    try {
        parse_config("\n\nbogus = 1\n");
        FAIL("expected an error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    ExperimentConfig dup = c;
    dup.solvers.push_back(dup.solvers.front());
    CHECK_THROWS_AS(dup.validate(), ConfigError);
    CHECK_THROWS_AS(ExperimentConfig{}.validate(), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/momark.cfg"), ConfigError);
}

TEST_CASE("problem selection")
{
    CHECK(resolve_problems({"core"}).size() == 55);
    CHECK(resolve_problems({"all"}).size() == registry_list({}).size());
    CHECK(resolve_problems({"BK1", "BK1", "FES3"}) == std::vector<std::string>{"BK1", "FES3"});
    CHECK_THROWS_AS(resolve_problems({"NoSuchProblem"}), NotFoundError);
    CHECK_THROWS_AS(resolve_problems({}), ConfigError);
    const std::string listing = list_problems({});
    CHECK(listing.find("BK1\t2\t2\tL\tS\tU") != std::string::npos);
}

TEST_CASE("reference sets")
{
    RefsetGenerator g;
    g.budget_factor = 20;
    const StoredRefset r = generate_refset(registry_lookup("Sch1"), g);
    CHECK(r.set.points.rows() > 1);
    CHECK(r.set.points.cols() == 2);
    CHECK(r.frame.degenerate_coordinate() == -1);
    CHECK(r.frame.ideal.allFinite());
    CHECK(r.frame.nadir.allFinite());

    const StoredRefset back = parse_refset(format_refset(r), "memory");
    CHECK(back.set.problem == "Sch1");
    CHECK(back.set.points == r.set.points);
    CHECK(back.frame.ideal == r.frame.ideal);
    CHECK(back.frame.nadir == r.frame.nadir);
    CHECK(back.generator.budget_factor == 20);
    CHECK(back.generator.seed == g.seed);

    // Same generator, same set.
    CHECK(generate_refset(registry_lookup("Sch1"), g).set.points == r.set.points);

    CHECK_THROWS_AS(generate_refset(registry_lookup("MOP1"), g), ValueError);
    CHECK_THROWS_AS(parse_refset("f1,f2\n0,1\n", "x"), IoError);
    CHECK_THROWS_AS(parse_refset("# problem=A\nf1,f2\n", "x"), IoError);
    CHECK_THROWS_AS(parse_refset("# problem=A\nf1,f2\n0,1,2\n", "x"), IoError);
    CHECK_THROWS_AS(parse_refset("# problem=A\n# ideal=0,0.5\nf1,f2\n0,1\n1,0\n0.5,0.5\n", "x"), IoError);
    CHECK_NOTHROW(parse_refset("# problem=A\n# ideal=0,0\n# nadir=1,1\nf1,f2\n0,1\n1,0\n", "x"));

    const auto dir = testing::scratch_dir("refset-cmd");
    RefsetOptions opt;
    opt.problems = {"BK1"};
    opt.generator = g;
    opt.dir = dir;
    CHECK(cmd_refset(opt) == std::vector<std::filesystem::path>{dir / "BK1.csv"});
    CHECK_THROWS_AS(cmd_refset(opt), ConfigError);
    opt.force = true;
    CHECK_NOTHROW(cmd_refset(opt));
    std::filesystem::remove_all(dir);
}

TEST_CASE("archive trace round trip")
{
    testing::Gen g(71);
    std::vector<std::pair<FeCount, ObjectiveVector>> trace;
    for (FeCount fe = 1; fe <= 40; fe += g.integer(1, 5)) {
        ObjectiveVector v(3);
        v << g.uniform(-1e3, 1e3), g.uniform(0, 1) * 1e-200, 1.0 / 3.0;
        trace.emplace_back(fe, v);
    }
    const auto back = parse_archive_trace(format_archive_trace(trace, 3), "memory");
    REQUIRE(back.size() == trace.size());
    for (std::size_t i = 0; i < trace.size(); ++i) {
        CHECK(back[i].first == trace[i].first);
        CHECK(back[i].second == trace[i].second);
    }
}

TEST_CASE("run, manifest and profiles")
{
    const auto root = testing::scratch_dir("orchestrator-run");
    ExperimentConfig cfg = small_config(root);

    // No reference sets yet: the error names the command that makes them.
    try {
        cmd_run(cfg);
        FAIL("expected a ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("momark refset") != std::string::npos);
    }

    make_refsets(cfg);
    const RunManifest m = cmd_run(cfg);
    REQUIRE(m.runs.size() == 2 * (10 + 1));
    std::map<std::string, FeCount> total;
    for (const RunRecord& r : m.runs) {
        total[r.solver + "/" + r.problem] += r.fe_consumed;
        CHECK(r.complete);
        CHECK_FALSE(r.failed);
        CHECK(r.archive_size > 0);
        CHECK(std::filesystem::exists(archive_path(cfg.output_dir, r.solver, r.problem, r.run)));
    }
    // BK1 and Sch1 have n = 2 and n = 1.
    CHECK(total["random_search/BK1"] == 2000);
    CHECK(total["grid_sweep/BK1"] == 2000);
    CHECK(total["random_search/Sch1"] == 1000);
    CHECK(total["grid_sweep/Sch1"] == 1000);

    const RunManifest back = read_manifest(cfg.output_dir);
    CHECK(back.config == m.config);
    CHECK(back.runs == m.runs);
    CHECK(back.version == tool_version);
    CHECK(back.frames.size() == 2);
    CHECK(back.frames.at("BK1").ideal == m.frames.at("BK1").ideal);
    CHECK(parse_manifest(format_manifest(m)).runs == m.runs);
    CHECK_THROWS_AS(parse_manifest("{ not json"), IoError);
    CHECK_THROWS_AS(read_manifest(root), ConfigError);

    const auto hits = read_first_hits(first_hits_path(cfg.output_dir, "random_search"));
    CHECK(hits.size() == 2u * 10 * 4 * 70);

    // A rerun with the same seeds writes byte-identical first hits.
    const std::string before = io::read_file(first_hits_path(cfg.output_dir, "random_search"));
    const std::string before_det = io::read_file(first_hits_path(cfg.output_dir, "grid_sweep"));
    ExperimentConfig again = cfg;
    again.output_dir = root / "rerun";
    again.jobs = 1;
    cmd_run(again);
    CHECK(io::read_file(first_hits_path(again.output_dir, "random_search")) == before);
    CHECK(io::read_file(first_hits_path(again.output_dir, "grid_sweep")) == before_det);

    ProfileOptions popt;
    popt.run_dirs = {cfg.output_dir};
    popt.out_dir = root / "profiles";
    const auto written = cmd_profile(popt);
    CHECK(written.size() == 10);
    for (const auto& p : written) {
        CHECK(std::filesystem::exists(p));
        if (p.extension() == ".svg")
            CHECK(testing::xml_problem(io::read_file(p)).empty());
    }
    const auto profiles = read_profiles_csv(root / "profiles" / "profile_all_combined.csv");
    REQUIRE(profiles.size() == 2);
    for (const DataProfile& d : profiles)
        CHECK(d.alphas.size() == 200);

    // Panels with no problems produce nothing.
    popt.panels = {"m4"};
    CHECK(cmd_profile(popt).empty());

    ExperimentConfig other = cfg;
    other.output_dir = root / "other";
    other.budget_factor = 50;
    cmd_run(other);
    popt.panels = {"all"};
    popt.run_dirs = {cfg.output_dir, other.output_dir};
    CHECK_THROWS_AS(cmd_profile(popt), ConfigError);

    std::filesystem::remove_all(root);
}

TEST_CASE("timing")
{
    TimingOptions opt;
    opt.repeats = 1;
    opt.budgets = {10, 100};
    const auto rows = cmd_timing(opt);
    const auto names = default_timing_problems();
    CHECK(rows.size() == 2 * names.size());
    for (const TimingRow& r : rows) {
        CHECK(r.seconds >= 0.0);
        CHECK(r.seconds_per_fe == r.seconds / static_cast<double>(r.budget));
    }
    const std::string csv = format_timing_csv(rows, opt);
    const auto back = parse_timing_csv(csv);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].budget == rows[i].budget);
        CHECK(back[i].problem == rows[i].problem);
        CHECK(back[i].seconds == rows[i].seconds);
    }
    opt.budgets = {0};
    CHECK_THROWS_AS(cmd_timing(opt), ConfigError);
}

TEST_CASE("command line exit codes")
{
    const std::string cli = MOMARK_CLI_PATH;
    const auto root = testing::scratch_dir("cli");
    const std::string refsets = (root / "refsets").string();
    CHECK(shell(cli + " --version") == 0);
    CHECK(shell(cli + " list-problems --m 4") == 0);
    CHECK(shell(cli + " no-such-command") == 1);
    CHECK(shell(cli + " run --budget-factor zero") == 1);
    CHECK(shell(cli + " run --problems NoSuch --solver random_search:stochastic --refsets " + refsets) == 1);
    CHECK(shell(cli + " run --problems BK1 --solver random_search:stochastic --refsets " + refsets) == 1);
    CHECK(shell(cli + " refset --problems BK1 --budget-factor 10 --refsets " + refsets) == 0);
    CHECK(shell(cli + " refset --problems MOP1 --budget-factor 10 --refsets " + refsets) == 2);
    const std::string run = cli + " run --problems BK1 --runs 2 --budget-factor 20 --refsets " + refsets + " --out "
                            + (root / "run").string();
    CHECK(shell(run + " --solver random_search:stochastic") == 0);
    CHECK(shell(run + " --solver mock:stochastic:'" MOCK_SOLVER_PATH " outside'") == 2);
    CHECK(shell(cli + " profile " + (root / "run").string()) == 0);
    CHECK(shell(cli + " profile " + (root / "nothing").string()) == 1);
    std::filesystem::remove_all(root);
}
