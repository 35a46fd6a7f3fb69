// Bound-constrained problems from the classic multi-objective test collections.
// Minimization throughout; maximization forms from the sources are negated.

#include "formulas.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace momark::formulas {

namespace {

constexpr double pi = std::numbers::pi;

ObjectiveVector make(std::initializer_list<double> values)
{
    ObjectiveVector f(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double v : values)
        f(i++) = v;
    return f;
}

double sq(double v) { return v * v; }

} // namespace

ObjectiveVector bk1(const X& x)
{
    return make({sq(x(0)) + sq(x(1)), sq(x(0) - 5.0) + sq(x(1) - 5.0)});
}

ObjectiveVector dg01(const X& x)
{
    return make({std::sin(x(0)), std::sin(x(0) + 0.7)});
}

const Eigen::MatrixXd& dpam1_rotation()
{
    // QR factor of a seeded random matrix; fixed for the lifetime of the format.
    static const Eigen::MatrixXd rotation = [] {
        std::mt19937_64 rng(20160207);
        Eigen::MatrixXd a(10, 10);
        for (Eigen::Index r = 0; r < a.rows(); ++r)
            for (Eigen::Index c = 0; c < a.cols(); ++c)
                a(r, c) = 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0;
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
        return Eigen::MatrixXd(qr.householderQ());
    }();
    return rotation;
}

ObjectiveVector dpam1(const X& x)
{
    const Eigen::VectorXd y = dpam1_rotation() * x;
    const Eigen::Index n = y.size();
    double g = 1.0 + 10.0 * static_cast<double>(n - 1);
    for (Eigen::Index i = 1; i < n; ++i)
        g += sq(y(i)) - 10.0 * std::cos(4.0 * pi * y(i));
    return make({y(0), g * std::exp(-y(0) / g)});
}

ObjectiveVector far1(const X& x)
{
    const double a = x(0);
    const double b = x(1);
    const double f1 = -2.0 * std::exp(15.0 * (-sq(a - 0.1) - sq(b)))
                      - std::exp(20.0 * (-sq(a - 0.6) - sq(b - 0.6)))
                      + std::exp(20.0 * (-sq(a + 0.6) - sq(b - 0.6)))
                      + std::exp(20.0 * (-sq(a - 0.6) - sq(b + 0.6)))
                      + std::exp(20.0 * (-sq(a + 0.6) - sq(b + 0.6)));
    const double f2 = 2.0 * std::exp(20.0 * (-sq(a) - sq(b)))
                      + std::exp(20.0 * (-sq(a - 0.4) - sq(b - 0.6)))
                      - std::exp(20.0 * (-sq(a + 0.5) - sq(b - 0.7)))
                      - std::exp(20.0 * (-sq(a - 0.5) - sq(b + 0.7)))
                      + std::exp(20.0 * (-sq(a + 0.4) - sq(b + 0.8)));
    return make({f1, f2});
}

ObjectiveVector fonseca(const X& x)
{
    return make({1.0 - std::exp(-sq(x(0) - 1.0) - sq(x(1) + 1.0)),
                 1.0 - std::exp(-sq(x(0) + 1.0) - sq(x(1) - 1.0))});
}

ObjectiveVector kursawe(const X& x)
{
    double f1 = 0.0;
    double f2 = 0.0;
    for (Eigen::Index i = 0; i + 1 < x.size(); ++i)
        f1 += -10.0 * std::exp(-0.2 * std::sqrt(sq(x(i)) + sq(x(i + 1))));
    for (Eigen::Index i = 0; i < x.size(); ++i)
        f2 += std::pow(std::abs(x(i)), 0.8) + 5.0 * std::sin(x(i) * x(i) * x(i));
    return make({f1, f2});
}

ObjectiveVector ikk1(const X& x)
{
    return make({sq(x(0)), sq(x(0) - 20.0), sq(x(1))});
}

ObjectiveVector im1(const X& x)
{
    return make({2.0 * std::sqrt(x(0)), x(0) * (1.0 - x(1)) + 5.0});
}

ObjectiveVector lrs1(const X& x)
{
    return make({sq(x(0)) + sq(x(1)), sq(x(0) + 2.0) + sq(x(1))});
}

ObjectiveVector mhhm1(const X& x)
{
    return make({sq(x(0) - 0.8), sq(x(0) - 0.85), sq(x(0) - 0.9)});
}

ObjectiveVector mhhm2(const X& x)
{
    return make({sq(x(0) - 0.8) + sq(x(1) - 0.6), sq(x(0) - 0.85) + sq(x(1) - 0.7),
                 sq(x(0) - 0.9) + sq(x(1) - 0.6)});
}

ObjectiveVector mlf1(const X& x)
{
    const double s = 1.0 + x(0) / 20.0;
    return make({s * std::sin(x(0)), s * std::cos(x(0))});
}

ObjectiveVector mlf2(const X& x)
{
    const double a = x(0);
    const double b = x(1);
    const double f1 = -(5.0 - (sq(a * a + b - 11.0) + sq(a + b * b - 7.0)) / 200.0);
    const double f2 = -(5.0 - (sq(4.0 * a * a + 2.0 * b - 11.0) + sq(2.0 * a + 4.0 * b * b - 7.0)) / 200.0);
    return make({f1, f2});
}

ObjectiveVector mop1(const X& x)
{
    return make({sq(x(0)), sq(x(0) - 2.0)});
}

ObjectiveVector mop2(const X& x)
{
    const double shift = 1.0 / std::sqrt(static_cast<double>(x.size()));
    double s1 = 0.0;
    double s2 = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        s1 += sq(x(i) - shift);
        s2 += sq(x(i) + shift);
    }
    return make({1.0 - std::exp(-s1), 1.0 - std::exp(-s2)});
}

ObjectiveVector mop3(const X& x)
{
    const double a1 = 0.5 * std::sin(1.0) - 2.0 * std::cos(1.0) + std::sin(2.0) - 1.5 * std::cos(2.0);
    const double a2 = 1.5 * std::sin(1.0) - std::cos(1.0) + 2.0 * std::sin(2.0) - 0.5 * std::cos(2.0);
    const double b1 = 0.5 * std::sin(x(0)) - 2.0 * std::cos(x(0)) + std::sin(x(1)) - 1.5 * std::cos(x(1));
    const double b2 = 1.5 * std::sin(x(0)) - std::cos(x(0)) + 2.0 * std::sin(x(1)) - 0.5 * std::cos(x(1));
    return make({1.0 + sq(a1 - b1) + sq(a2 - b2), sq(x(0) + 3.0) + sq(x(1) + 1.0)});
}

ObjectiveVector mop4(const X& x)
{
    double f1 = 0.0;
    double f2 = 0.0;
    for (Eigen::Index i = 0; i + 1 < x.size(); ++i)
        f1 += -10.0 * std::exp(-0.2 * std::sqrt(sq(x(i)) + sq(x(i + 1))));
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double s = std::sin(x(i));
        f2 += std::pow(std::abs(x(i)), 0.8) + 5.0 * s * s * s;
    }
    return make({f1, f2});
}

ObjectiveVector mop5(const X& x)
{
    const double r = sq(x(0)) + sq(x(1));
    return make({0.5 * r + std::sin(r),
                 sq(3.0 * x(0) - 2.0 * x(1) + 4.0) / 8.0 + sq(x(0) - x(1) + 1.0) / 27.0 + 15.0,
                 1.0 / (r + 1.0) - 1.1 * std::exp(-r)});
}

ObjectiveVector mop6(const X& x)
{
    const double g = 1.0 + 10.0 * x(1);
    const double ratio = x(0) / g;
    return make({x(0), g * (1.0 - sq(ratio) - ratio * std::sin(8.0 * pi * x(0)))});
}

ObjectiveVector mop7(const X& x)
{
    const double a = x(0);
    const double b = x(1);
    return make({sq(a - 2.0) / 2.0 + sq(b + 1.0) / 13.0 + 3.0,
                 sq(a + b - 3.0) / 36.0 + sq(-a + b + 2.0) / 8.0 - 17.0,
                 sq(a + 2.0 * b - 1.0) / 175.0 + sq(2.0 * b - a) / 17.0 - 13.0});
}

ObjectiveVector qv1(const X& x)
{
    const double n = static_cast<double>(x.size());
    double s1 = 0.0;
    double s2 = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        s1 += sq(x(i)) - 10.0 * std::cos(2.0 * pi * x(i)) + 10.0;
        const double y = x(i) - 1.5;
        s2 += sq(y) - 10.0 * std::cos(2.0 * pi * y) + 10.0;
    }
    return make({std::pow(s1 / n, 0.25), std::pow(s2 / n, 0.25)});
}

ObjectiveVector sch1(const X& x)
{
    const double v = x(0);
    double f1 = 0.0;
    if (v <= 1.0)
        f1 = -v;
    else if (v <= 3.0)
        f1 = v - 2.0;
    else if (v <= 4.0)
        f1 = 4.0 - v;
    else
        f1 = v - 4.0;
    return make({f1, sq(v - 5.0)});
}

ObjectiveVector sk1(const X& x)
{
    const double v = x(0);
    const double v2 = v * v;
    const double v3 = v2 * v;
    const double v4 = v3 * v;
    return make({-(-v4 - 3.0 * v3 + 10.0 * v2 + 10.0 * v + 10.0),
                 -(-0.5 * v4 + 2.0 * v3 + 10.0 * v2 - 10.0 * v + 5.0)});
}

ObjectiveVector sk2(const X& x)
{
    const double f1 = -(-sq(x(0) - 2.0) - sq(x(1) + 3.0) - sq(x(2) - 5.0) - sq(x(3) - 4.0) + 5.0);
    double sines = 0.0;
    double squares = 0.0;
    for (Eigen::Index i = 0; i < 4; ++i) {
        sines += std::sin(x(i));
        squares += sq(x(i));
    }
    return make({f1, -sines / (1.0 + squares / 100.0)});
}

ObjectiveVector sp1(const X& x)
{
    const double d = sq(x(0) - x(1));
    return make({sq(x(0) - 1.0) + d, sq(x(1) - 3.0) + d});
}

ObjectiveVector ssfyy1(const X& x)
{
    return make({sq(x(0)) + sq(x(1)), sq(x(0) - 1.0) + sq(x(1) - 2.0)});
}

ObjectiveVector ssfyy2(const X& x)
{
    const double v = x(0);
    return make({10.0 + v * v - 10.0 * std::cos(v * pi / 2.0), sq(v - 4.0)});
}

ObjectiveVector vu1(const X& x)
{
    return make({1.0 / (sq(x(0)) + sq(x(1)) + 1.0), sq(x(0)) + 3.0 * sq(x(1)) + 1.0});
}

ObjectiveVector vu2(const X& x)
{
    return make({x(0) + x(1) + 1.0, sq(x(0)) + 2.0 * x(1) - 1.0});
}

ObjectiveVector zlt1(const X& x)
{
    const Eigen::Index m = 3;
    const double total = x.squaredNorm();
    ObjectiveVector f(m);
    for (Eigen::Index i = 0; i < m; ++i)
        f(i) = total - sq(x(i)) + sq(x(i) - 1.0);
    return f;
}

namespace {

// Shared terms of the FES family; index i is 1-based as in the sources.
double fes_exp_term(const X& x)
{
    const double n = static_cast<double>(x.size());
    double s = 0.0;
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        const double i = static_cast<double>(j + 1);
        s += std::sqrt(std::abs(x(j) - std::exp(sq(i / n)) / 3.0));
    }
    return s;
}

double fes_cos_sq_term(const X& x)
{
    const double n = static_cast<double>(x.size());
    double s = 0.0;
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        const double i = static_cast<double>(j + 1);
        s += sq(x(j) - 0.5 * std::cos(10.0 * pi * i / n) - 0.5);
    }
    return s;
}

double fes_cos_abs_term(const X& x)
{
    const double n = static_cast<double>(x.size());
    double s = 0.0;
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        const double i = static_cast<double>(j + 1);
        s += std::sqrt(std::abs(x(j) - 0.5 * std::cos(10.0 * pi * i / n) - 0.5));
    }
    return s;
}

double fes_sin_cos_term(const X& x)
{
    double s = 0.0;
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        const double i = static_cast<double>(j);
        s += std::sqrt(std::abs(x(j) - sq(std::sin(i)) * sq(std::cos(i))));
    }
    return s;
}

double fes_cos_cos_term(const X& x)
{
    double s = 0.0;
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        const double i = static_cast<double>(j);
        s += std::sqrt(std::abs(x(j) - 0.25 * std::cos(i) * std::cos(2.0 * i) - 0.5));
    }
    return s;
}

} // namespace

ObjectiveVector fes1(const X& x)
{
    return make({fes_exp_term(x), fes_cos_sq_term(x)});
}

ObjectiveVector fes2(const X& x)
{
    return make({fes_cos_sq_term(x), fes_sin_cos_term(x), fes_cos_cos_term(x)});
}

ObjectiveVector fes3(const X& x)
{
    return make({fes_exp_term(x), fes_cos_abs_term(x), fes_sin_cos_term(x), fes_cos_cos_term(x)});
}

} // namespace momark::formulas
