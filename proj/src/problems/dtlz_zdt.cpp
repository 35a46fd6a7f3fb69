#include "formulas.hpp"

#include <cmath>
#include <numbers>

namespace momark::formulas {

namespace {

constexpr double pi = std::numbers::pi;

// Distance function of DTLZ1/DTLZ3 over the last k variables.
double g_rastrigin(const X& x, int m)
{
    const Eigen::Index k = x.size() - m + 1;
    double s = 0.0;
    for (Eigen::Index i = x.size() - k; i < x.size(); ++i) {
        const double d = x(i) - 0.5;
        s += d * d - std::cos(20.0 * pi * d);
    }
    return 100.0 * (static_cast<double>(k) + s);
}

double g_sphere(const X& x, int m)
{
    const Eigen::Index k = x.size() - m + 1;
    double s = 0.0;
    for (Eigen::Index i = x.size() - k; i < x.size(); ++i)
        s += (x(i) - 0.5) * (x(i) - 0.5);
    return s;
}

// Spherical front parameterized by angles theta (already scaled to [0, pi/2]).
ObjectiveVector spherical(const Eigen::VectorXd& theta, double radius, int m)
{
    ObjectiveVector f(m);
    for (int i = 0; i < m; ++i) {
        double v = radius;
        for (int j = 0; j < m - 1 - i; ++j)
            v *= std::cos(theta(j));
        if (i > 0)
            v *= std::sin(theta(m - 1 - i));
        f(i) = v;
    }
    return f;
}

} // namespace

ObjectiveVector dtlz1(const X& x, int m)
{
    const double g = g_rastrigin(x, m);
    ObjectiveVector f(m);
    for (int i = 0; i < m; ++i) {
        double v = 0.5 * (1.0 + g);
        for (int j = 0; j < m - 1 - i; ++j)
            v *= x(j);
        if (i > 0)
            v *= 1.0 - x(m - 1 - i);
        f(i) = v;
    }
    return f;
}

ObjectiveVector dtlz2(const X& x, int m)
{
    const double g = g_sphere(x, m);
    Eigen::VectorXd theta = x.head(m - 1) * (pi / 2.0);
    return spherical(theta, 1.0 + g, m);
}

ObjectiveVector dtlz3(const X& x, int m)
{
    const double g = g_rastrigin(x, m);
    Eigen::VectorXd theta = x.head(m - 1) * (pi / 2.0);
    return spherical(theta, 1.0 + g, m);
}

ObjectiveVector dtlz4(const X& x, int m)
{
    constexpr double alpha = 100.0;
    const double g = g_sphere(x, m);
    Eigen::VectorXd theta(m - 1);
    for (int i = 0; i < m - 1; ++i)
        theta(i) = std::pow(x(i), alpha) * (pi / 2.0);
    return spherical(theta, 1.0 + g, m);
}

ObjectiveVector dtlz5(const X& x, int m)
{
    const double g = g_sphere(x, m);
    Eigen::VectorXd theta(m - 1);
    theta(0) = x(0) * (pi / 2.0);
    for (int i = 1; i < m - 1; ++i)
        theta(i) = pi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * x(i));
    return spherical(theta, 1.0 + g, m);
}

// Disconnected front; k = n - m + 1 distance variables.
ObjectiveVector dtlz6(const X& x, int m)
{
    const Eigen::Index k = x.size() - m + 1;
    double g = 0.0;
    for (Eigen::Index i = x.size() - k; i < x.size(); ++i)
        g += x(i);
    g = 1.0 + 9.0 / static_cast<double>(k) * g;
    ObjectiveVector f(m);
    double h = static_cast<double>(m);
    for (int i = 0; i < m - 1; ++i) {
        f(i) = x(i);
        h -= f(i) / (1.0 + g) * (1.0 + std::sin(3.0 * pi * f(i)));
    }
    f(m - 1) = (1.0 + g) * h;
    return f;
}

namespace {

double zdt_linear_g(const X& x)
{
    const double n = static_cast<double>(x.size());
    return 1.0 + 9.0 * x.tail(x.size() - 1).sum() / (n - 1.0);
}

ObjectiveVector pair(double f1, double f2)
{
    ObjectiveVector f(2);
    f << f1, f2;
    return f;
}

} // namespace

ObjectiveVector zdt1(const X& x)
{
    const double f1 = x(0);
    const double g = zdt_linear_g(x);
    return pair(f1, g * (1.0 - std::sqrt(f1 / g)));
}

ObjectiveVector zdt2(const X& x)
{
    const double f1 = x(0);
    const double g = zdt_linear_g(x);
    return pair(f1, g * (1.0 - (f1 / g) * (f1 / g)));
}

ObjectiveVector zdt3(const X& x)
{
    const double f1 = x(0);
    const double g = zdt_linear_g(x);
    return pair(f1, g * (1.0 - std::sqrt(f1 / g) - (f1 / g) * std::sin(10.0 * pi * f1)));
}

ObjectiveVector zdt4(const X& x)
{
    const double f1 = x(0);
    double g = 1.0 + 10.0 * static_cast<double>(x.size() - 1);
    for (Eigen::Index i = 1; i < x.size(); ++i)
        g += x(i) * x(i) - 10.0 * std::cos(4.0 * pi * x(i));
    return pair(f1, g * (1.0 - std::sqrt(f1 / g)));
}

ObjectiveVector zdt6(const X& x)
{
    const double s = std::sin(6.0 * pi * x(0));
    const double f1 = 1.0 - std::exp(-4.0 * x(0)) * std::pow(s, 6);
    const double n = static_cast<double>(x.size());
    const double g = 1.0 + 9.0 * std::pow(x.tail(x.size() - 1).sum() / (n - 1.0), 0.25);
    return pair(f1, g * (1.0 - (f1 / g) * (f1 / g)));
}

} // namespace momark::formulas
