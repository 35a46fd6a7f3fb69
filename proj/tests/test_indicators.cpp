#include "momark/indicators.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace momark;

namespace {

PointSet rows(std::initializer_list<std::initializer_list<double>> list)
{
    PointSet p(static_cast<Eigen::Index>(list.size()), static_cast<Eigen::Index>(list.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& r : list) {
        Eigen::Index j = 0;
        for (double v : r)
            p(i, j++) = v;
        ++i;
    }
    return p;
}

ObjectiveVector ones(int m) { return ObjectiveVector::Ones(m); }

} // namespace

TEST_CASE("hypervolume examples")
{
    CHECK(hypervolume(rows({{0, 0}}), ones(2)) == 1.0);
    const PointSet stair = rows({{0.25, 0.75}, {0.5, 0.5}, {0.75, 0.25}});
    CHECK(hypervolume(stair, ones(2)) == 0.375);
    CHECK(hypervolume(PointSet(0, 2), ones(2)) == 0.0);
    CHECK(hypervolume(rows({{0, 0, 0}}), ones(3)) == 1.0);
    CHECK(hypervolume(rows({{0.5, 0.5, 0.5, 0.5}}), ones(4)) == 0.0625);
    CHECK(hypervolume(rows({{1.5, 0}}), ones(2)) == 0.0);
    CHECK_THROWS_AS(hypervolume(rows({{0, 0, 0, 0, 0}}), ones(5)), DimensionError);
    CHECK_THROWS_AS(hypervolume(rows({{0, 0}}), ones(3)), DimensionError);
}

TEST_CASE("grid oracle examples")
{
    CHECK(hv_oracle(rows({{0, 0}}), ones(2), 128) == doctest::Approx(1.0).epsilon(0.02));
    CHECK(hv_oracle(rows({{0.5, 0.5}}), ones(2), 128) == doctest::Approx(0.25).epsilon(0.02));
    CHECK(std::abs(hv_oracle(rows({{0.25, 0.75}, {0.5, 0.5}, {0.75, 0.25}}), ones(2), 256) - 0.375) <= 0.02);
}

TEST_CASE("hypervolume agrees with inclusion-exclusion")
{
    testing::Gen g(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = g.integer(2, 4);
        const int count = g.integer(0, 10);
        const PointSet p = testing::random_points(g, count, m, -0.1, 1.1);
        CAPTURE(m);
        CAPTURE(count);
        CHECK(hypervolume(p, ones(m)) == doctest::Approx(oracle::hv_inclusion_exclusion(p, ones(m))).epsilon(1e-12));
    }
}

TEST_CASE("2-d hypervolume equals the strip sum exactly on dyadic inputs")
{
    testing::Gen g(32);
    for (int trial = 0; trial < 100; ++trial) {
        PointSet p(g.integer(1, 30), 2);
        for (Eigen::Index i = 0; i < p.rows(); ++i) {
            p(i, 0) = g.dyadic(10);
            p(i, 1) = g.dyadic(10);
        }
        CHECK(hypervolume(p, ones(2)) == oracle::hv2_strips(p, ones(2)));
    }
}

TEST_CASE("hypervolume properties")
{
    testing::Gen g(33);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = g.integer(2, 4);
        const PointSet p = testing::random_points(g, g.integer(1, 25), m);
        const double hv = hypervolume(p, ones(m));
        // Invariant under duplication, dominated additions and row order.
        PointSet doubled(p.rows() * 2, m);
        doubled << p, p;
        CHECK(hypervolume(doubled, ones(m)) == doctest::Approx(hv).epsilon(1e-12));
        PointSet reversed = p.colwise().reverse();
        CHECK(hypervolume(reversed, ones(m)) == doctest::Approx(hv).epsilon(1e-12));
        // Adding a point never decreases it.
        PointSet more(p.rows() + 1, m);
        more << p, testing::random_points(g, 1, m);
        CHECK(hypervolume(more, ones(m)) >= hv - 1e-12);
        CHECK(hv <= 1.0 + 1e-12);
    }
}

TEST_CASE("normalization")
{
    const NormalizationFrame f{ObjectiveVector::Zero(2), ObjectiveVector::Constant(2, 4.0)};
    ObjectiveVector v(2);
    v << 2, 4;
    const ObjectiveVector n = normalize(v, f);
    CHECK(n(0) == 0.5);
    CHECK(n(1) == 1.0);
    CHECK(normalize(f.ideal, f).isZero());
    CHECK(normalize(f.nadir, f) == ones(2));

    const NormalizationFrame from = NormalizationFrame::from_points(rows({{1, 5}, {3, 2}}));
    CHECK(from.ideal == (ObjectiveVector(2) << 1, 2).finished());
    CHECK(from.nadir == (ObjectiveVector(2) << 3, 5).finished());
    CHECK(from.degenerate_coordinate() == -1);

    const NormalizationFrame flat = NormalizationFrame::from_points(rows({{1, 5}, {1, 2}}));
    CHECK(flat.degenerate_coordinate() == 0);
    CHECK(normalize((ObjectiveVector(2) << 1, 3).finished(), flat)(0) == 0.0);
    CHECK_THROWS_AS(normalize((ObjectiveVector(2) << 2, 3).finished(), flat), ValueError);
}

TEST_CASE("hv_diff examples")
{
    const PointSet r = rows({{0.25, 0.75}, {0.5, 0.5}, {0.75, 0.25}});
    CHECK(hv_diff(r, r) == 0.0);
    CHECK(hv_diff(PointSet(0, 2), r) == unreached);
    CHECK(hv_diff(rows({{0.5, 0.5}}), r) == 0.125);
}

TEST_CASE("eps_plus examples")
{
    const PointSet r = rows({{0.1, 0.9}, {0.5, 0.5}});
    CHECK(eps_plus(r, r) == 0.0);
    CHECK(eps_plus(rows({{0.2, 0.8}}), r) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(eps_plus(rows({{0, 0}}), r) <= 0.0);
    CHECK(eps_plus(PointSet(0, 2), r) == unreached);
    CHECK_THROWS_AS(eps_plus(r, PointSet(0, 2)), ConfigError);
    CHECK_THROWS_AS(eps_plus(rows({{0, 0, 0}}), r), DimensionError);
}

TEST_CASE("gd and igd examples")
{
    const PointSet origin = rows({{0, 0}});
    CHECK(gd(origin, rows({{0, 0}, {1, 1}})) == 0.0);
    CHECK(gd(rows({{0.5, 0.5}}), origin) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(gd(rows({{0, 0}, {1, 1}}), origin) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
    CHECK(igd(origin, rows({{0, 0}, {1, 0}})) == 0.5);
    CHECK(igd(origin, origin) == 0.0);
    CHECK(igd(PointSet(0, 2), origin) == unreached);
    CHECK(gd(PointSet(0, 2), origin) == unreached);
    CHECK_THROWS_AS(igd(origin, PointSet(0, 2)), ConfigError);
}

TEST_CASE("indicators agree with brute force and gd(A,R) == igd(R,A)")
{
    testing::Gen g(34);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = g.integer(2, 4);
        const PointSet a = testing::random_points(g, g.integer(1, 20), m);
        const PointSet r = testing::random_points(g, g.integer(1, 20), m);
        CHECK(igd(a, r) == doctest::Approx(oracle::igd(a, r)).epsilon(1e-12));
        CHECK(gd(a, r) == doctest::Approx(oracle::gd(a, r)).epsilon(1e-12));
        CHECK(eps_plus(a, r) == doctest::Approx(oracle::eps_plus(a, r)).epsilon(1e-12));
        CHECK(gd(a, r) == igd(r, a));
        CHECK(eps_plus(r, r) == 0.0);
    }
}

TEST_CASE("indicator tokens")
{
    for (IndicatorKind k : all_indicators)
        CHECK(parse_indicator(to_string(k)) == k);
    CHECK_THROWS_AS(parse_indicator("hv"), ConfigError);
    CHECK(pareto_compliant(IndicatorKind::HvDiff));
    CHECK(pareto_compliant(IndicatorKind::EpsPlus));
    CHECK_FALSE(pareto_compliant(IndicatorKind::GD));
    CHECK_FALSE(pareto_compliant(IndicatorKind::IGD));
}

TEST_CASE("reference set validation")
{
    ReferenceSet ok{"X", rows({{0, 1}, {1, 0}})};
    CHECK_NOTHROW(ok.validate());
    ReferenceSet dominated{"X", rows({{0, 0}, {1, 1}})};
    CHECK_THROWS_AS(dominated.validate(), ConfigError);
    ReferenceSet empty{"X", PointSet(0, 2)};
    CHECK_THROWS_AS(empty.validate(), ConfigError);
}
