#include "momark/orchestrator.hpp"
#include "momark/solvers.hpp"

#include "support.hpp"

#include <doctest.h>

#include <fstream>

using namespace momark;

namespace {

const std::string mock = MOCK_SOLVER_PATH;

bool same_stream(const EvaluationStream& a, const EvaluationStream& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].fe != b[i].fe || a[i].x != b[i].x || a[i].f != b[i].f)
            return false;
    return true;
}

void check_in_bounds(const EvaluationStream& s, const ProblemInstance& p)
{
    for (const Evaluation& e : s)
        CHECK(p.contains(e.x));
}

SolverDescriptor external(const std::string& args)
{
    return parse_solver_descriptor("mock:stochastic:" + mock + " " + args);
}

} // namespace

TEST_CASE("radical inverse and primes")
{
    CHECK(radical_inverse(1, 2) == 0.5);
    CHECK(radical_inverse(3, 2) == 0.75);
    CHECK(radical_inverse(1, 3) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(radical_inverse(5, 3) == doctest::Approx(2.0 / 3 + 1.0 / 9).epsilon(1e-15));
    CHECK(first_primes(6) == std::vector<int>{2, 3, 5, 7, 11, 13});
}

TEST_CASE("reflection stays in the box")
{
    CHECK(reflect_into(1.2, 0, 1) == doctest::Approx(0.8));
    CHECK(reflect_into(-0.3, 0, 1) == doctest::Approx(0.3));
    CHECK(reflect_into(2.5, 0, 1) == doctest::Approx(0.5));
    CHECK(reflect_into(0.4, 0, 1) == 0.4);
    testing::Gen g(51);
    for (int i = 0; i < 1000; ++i) {
        const double v = reflect_into(g.uniform(-100, 100), -1.5, 2.0);
        CHECK(v >= -1.5);
        CHECK(v <= 2.0);
    }
}

TEST_CASE("builtin solvers are reproducible and stay in bounds")
{
    for (const ProblemInstance& p : registry_all()) {
        CAPTURE(p.name());
        const auto a = random_search(p, 50, 7);
        CHECK(same_stream(a, random_search(p, 50, 7)));
        CHECK(a.size() == 50);
        check_in_bounds(a, p);
        const auto gs = grid_sweep(p, 50);
        CHECK(same_stream(gs, grid_sweep(p, 50)));
        check_in_bounds(gs, p);
        const auto h = dominance_hillclimber(p, 50, 7);
        CHECK(same_stream(h, dominance_hillclimber(p, 50, 7)));
        check_in_bounds(h, p);
        for (std::size_t i = 0; i < h.size(); ++i)
            CHECK(h[i].fe == static_cast<FeCount>(i + 1));
    }
    CHECK(random_search(registry_lookup("BK1"), 0, 7).empty());
    CHECK_FALSE(same_stream(random_search(registry_lookup("BK1"), 20, 7), random_search(registry_lookup("BK1"), 20, 8)));
}

TEST_CASE("grid sweep first point")
{
    const auto s = grid_sweep(registry_lookup("VU1"), 1);
    const ProblemMeta& m = registry_lookup("VU1").meta();
    const DecisionVector t = ((s[0].x - m.lower).array() / (m.upper - m.lower).array()).matrix();
    CHECK(t(0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(t(1) == doctest::Approx(1.0 / 3).epsilon(1e-15));
}

TEST_CASE("hillclimber step validation")
{
    CHECK_THROWS_AS(DominanceHillclimber(registry_lookup("BK1").meta(), 1, 0.0), ConfigError);
    CHECK_THROWS_AS(DominanceHillclimber(registry_lookup("BK1").meta(), 1, 1.5), ConfigError);
}

TEST_CASE("solver descriptors")
{
    const SolverDescriptor d = parse_solver_descriptor("rs:stochastic:python3 -c 'a:b'");
    CHECK(d.name == "rs");
    CHECK(d.command == "python3 -c 'a:b'");
    CHECK(parse_solver_descriptor(format_solver_descriptor(d)) == d);
    CHECK_FALSE(parse_solver_descriptor("grid_sweep:deterministic").external());
    CHECK_THROWS_AS(parse_solver_descriptor("grid_sweep:stochastic"), ConfigError);
    CHECK_THROWS_AS(parse_solver_descriptor("unknown:stochastic"), ConfigError);
    CHECK_THROWS_AS(parse_solver_descriptor("nokind"), ConfigError);
    CHECK_THROWS_AS(parse_solver_descriptor("a,b:stochastic:cmd"), ConfigError);
}

TEST_CASE("protocol line formatting round-trips")
{
    Eigen::VectorXd v(3);
    v << 0.1, -1e-300, 12345.678;
    CHECK(protocol_line('F', v) == "F 0.1 -1e-300 12345.678");
}

TEST_CASE("external solver: midpoint child")
{
    const ProblemInstance& p = registry_lookup("BK1");
    const auto s = external_solver_session(external("midpoint"), p, 10, 3);
    REQUIRE(s.size() == 10);
    const DecisionVector mid = (p.meta().lower + p.meta().upper) / 2;
    for (const Evaluation& e : s)
        CHECK(e.x == mid);
}

TEST_CASE("external solver: wrong arity is a protocol error")
{
    CHECK_THROWS_AS(external_solver_session(external("arity"), registry_lookup("BK1"), 10, 3), ProtocolError);
    try {
        external_solver_session(external("arity"), registry_lookup("BK1"), 10, 3);
    } catch (const ProtocolError& e) {
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
}

TEST_CASE("external solver: early close truncates with a warning")
{
    const ProblemInstance& p = registry_lookup("BK1");
    ExternalSolver session(mock + " close3", p.meta(), 10, 3);
    const auto s = drive(session, p, 10);
    CHECK(s.size() == 3);
    CHECK(session.truncated());
    CHECK(session.warnings().size() == 1);
}

TEST_CASE("external solver: out-of-bounds request is relayed and raised")
{
    CHECK_THROWS_AS(external_solver_session(external("outside"), registry_lookup("BK1"), 10, 3), DomainError);
}

TEST_CASE("external solver: lingering child is killed after the grace period")
{
    const ProblemInstance& p = registry_lookup("BK1");
    ExternalOptions opt;
    opt.exit_grace = std::chrono::milliseconds(200);
    ExternalSolver session(mock + " linger", p.meta(), 4, 3, opt);
    const auto start = std::chrono::steady_clock::now();
    CHECK(drive(session, p, 4).size() == 4);
    CHECK(session.killed());
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(5));
}

TEST_CASE("external solver: replaying a stream reproduces it")
{
    testing::Gen g(52);
    const auto dir = testing::scratch_dir("replay");
    for (const char* name : {"BK1", "DTLZ2", "FES3", "ZDT4"}) {
        const ProblemInstance& p = registry_lookup(name);
        const auto original = random_search(p, 40, g.next() >> 1);
        std::ofstream out(dir / "points.txt");
        for (const Evaluation& e : original)
            out << protocol_line('X', e.x) << "\n";
        out.close();
        const auto replayed = external_solver_session(external("replay " + (dir / "points.txt").string()), p,
                                                      static_cast<FeCount>(original.size()), 1);
        CHECK(same_stream(original, replayed));
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("hillclimber beats random search on MOP2 for most seeds")
{
    const ProblemInstance& p = registry_lookup("MOP2");
    RefsetGenerator gen;
    gen.seed = 77;
    const StoredRefset r = generate_refset(p, gen);
    const PointSet ref = normalize(r.set.points, r.frame);
    const auto final_hv_diff = [&](const EvaluationStream& s) {
        Archive a(2);
        for (const Evaluation& e : s)
            a.insert(normalize(e.f, r.frame), e.fe);
        return hv_diff(a.points(), ref);
    };
    int wins = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const double h = final_hv_diff(dominance_hillclimber(p, 400, seed));
        const double rs = final_hv_diff(random_search(p, 400, seed));
        wins += h <= rs;
    }
    MESSAGE("hillclimber wins on MOP2: " << wins << "/10");
    CHECK(wins >= 7);
}
