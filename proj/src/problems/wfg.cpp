// WFG toolkit problems. Decision variable z_i lies in [0, 2i] (1-based i); the
// first k variables are position-related, the remaining l = n - k distance-related.

#include "formulas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace momark::formulas {

namespace {

constexpr double pi = std::numbers::pi;
using Vec = std::vector<double>;

// Transformations can overshoot [0,1] by a few ulps.
double clamp01(double v)
{
    return std::clamp(v, 0.0, 1.0);
}

double s_linear(double y, double a)
{
    return clamp01(std::abs(y - a) / std::abs(std::floor(a - y) + a));
}

double s_decept(double y, double a, double b, double c)
{
    const double t1 = std::floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b);
    const double t2 = std::floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
    return clamp01(1.0 + (std::abs(y - a) - b) * (t1 + t2 + 1.0 / b));
}

double s_multi(double y, double a, double b, double c)
{
    const double t = std::abs(y - c) / (2.0 * (std::floor(c - y) + c));
    return clamp01((1.0 + std::cos((4.0 * a + 2.0) * pi * (0.5 - t)) + 4.0 * b * t * t) / (a + 2.0));
}

double b_flat(double y, double a, double b, double c)
{
    const double v = a + std::min(0.0, std::floor(y - b)) * a * (b - y) / b
                     - std::min(0.0, std::floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c);
    return clamp01(v);
}

double b_poly(double y, double alpha)
{
    return clamp01(std::pow(y, alpha));
}

double b_param(double y, double u, double a, double b, double c)
{
    const double v = a - (1.0 - 2.0 * u) * std::abs(std::floor(0.5 - u) + a);
    return clamp01(std::pow(y, b + (c - b) * v));
}

double r_sum(const Vec& y, std::size_t begin, std::size_t end, const Vec& w)
{
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        num += w[i] * y[i];
        den += w[i];
    }
    return clamp01(num / den);
}

double r_sum_ones(const Vec& y, std::size_t begin, std::size_t end)
{
    double num = 0.0;
    for (std::size_t i = begin; i < end; ++i)
        num += y[i];
    return clamp01(num / static_cast<double>(end - begin));
}

double r_nonsep(const Vec& y, std::size_t begin, std::size_t end, std::size_t a)
{
    const std::size_t len = end - begin;
    double num = 0.0;
    for (std::size_t j = 0; j < len; ++j) {
        num += y[begin + j];
        for (std::size_t k = 0; k + 2 <= a; ++k)
            num += std::abs(y[begin + j] - y[begin + (j + k + 1) % len]);
    }
    const double half = std::ceil(static_cast<double>(a) / 2.0);
    const double den = static_cast<double>(len) / static_cast<double>(a) * half
                       * (1.0 + 2.0 * static_cast<double>(a) - 2.0 * half);
    return clamp01(num / den);
}

// Shape functions; x has M entries, m is 1-based.
double linear(const Vec& x, int m, int M)
{
    double v = 1.0;
    for (int i = 0; i < M - m; ++i)
        v *= x[i];
    if (m != 1)
        v *= 1.0 - x[M - m];
    return v;
}

double convex(const Vec& x, int m, int M)
{
    double v = 1.0;
    for (int i = 0; i < M - m; ++i)
        v *= 1.0 - std::cos(x[i] * pi / 2.0);
    if (m != 1)
        v *= 1.0 - std::sin(x[M - m] * pi / 2.0);
    return v;
}

double concave(const Vec& x, int m, int M)
{
    double v = 1.0;
    for (int i = 0; i < M - m; ++i)
        v *= std::sin(x[i] * pi / 2.0);
    if (m != 1)
        v *= std::cos(x[M - m] * pi / 2.0);
    return v;
}

double mixed(const Vec& x, double a, double alpha)
{
    const double t = 2.0 * a * pi;
    return std::pow(1.0 - x[0] - std::cos(t * x[0] + pi / 2.0) / t, alpha);
}

double disc(const Vec& x, double a, double alpha, double beta)
{
    const double c = std::cos(a * std::pow(x[0], beta) * pi);
    return 1.0 - std::pow(x[0], alpha) * c * c;
}

enum class Shape { Convex, Linear, Concave };

struct WfgSetup {
    int k;
    int m;
    std::size_t n;
};

// Reduce position groups and the distance block with r_sum (unit weights).
Vec reduce_sum(const Vec& y, const WfgSetup& s, std::size_t distance_end)
{
    const std::size_t group = static_cast<std::size_t>(s.k / (s.m - 1));
    Vec t(static_cast<std::size_t>(s.m));
    for (int i = 0; i < s.m - 1; ++i)
        t[i] = r_sum_ones(y, i * group, (i + 1) * group);
    t[s.m - 1] = r_sum_ones(y, static_cast<std::size_t>(s.k), distance_end);
    return t;
}

Vec reduce_nonsep(const Vec& y, const WfgSetup& s)
{
    const std::size_t group = static_cast<std::size_t>(s.k / (s.m - 1));
    Vec t(static_cast<std::size_t>(s.m));
    for (int i = 0; i < s.m - 1; ++i)
        t[i] = r_nonsep(y, i * group, (i + 1) * group, group);
    t[s.m - 1] = r_nonsep(y, static_cast<std::size_t>(s.k), s.n, s.n - static_cast<std::size_t>(s.k));
    return t;
}

// WFG2/WFG3 second transformation: pairs of distance variables merged by r_nonsep.
Vec pair_nonsep(const Vec& y, const WfgSetup& s)
{
    const std::size_t k = static_cast<std::size_t>(s.k);
    const std::size_t half = (s.n - k) / 2;
    Vec out(k + half);
    for (std::size_t i = 0; i < k; ++i)
        out[i] = y[i];
    for (std::size_t i = 0; i < half; ++i)
        out[k + i] = r_nonsep(y, k + 2 * i, k + 2 * i + 2, 2);
    return out;
}

ObjectiveVector finish(const Vec& t, const WfgSetup& s, const Vec& degeneracy, Shape shape, int id)
{
    const int M = s.m;
    Vec x(static_cast<std::size_t>(M));
    for (int i = 0; i < M - 1; ++i)
        x[i] = std::max(t[M - 1], degeneracy[i]) * (t[i] - 0.5) + 0.5;
    x[M - 1] = t[M - 1];

    ObjectiveVector f(M);
    for (int m = 1; m <= M; ++m) {
        double h = 0.0;
        if (id == 1)
            h = (m < M) ? convex(x, m, M) : mixed(x, 5.0, 1.0);
        else if (id == 2)
            h = (m < M) ? convex(x, m, M) : disc(x, 5.0, 1.0, 1.0);
        else if (shape == Shape::Linear)
            h = linear(x, m, M);
        else
            h = concave(x, m, M);
        f(m - 1) = x[M - 1] + 2.0 * m * h;
    }
    return f;
}

} // namespace

ObjectiveVector wfg(int id, const X& z, int k, int m)
{
    const std::size_t n = static_cast<std::size_t>(z.size());
    if (k % (m - 1) != 0 || static_cast<std::size_t>(k) >= n)
        throw std::invalid_argument("wfg: invalid position parameter");
    const WfgSetup s{k, m, n};
    const std::size_t ku = static_cast<std::size_t>(k);

    Vec y(n);
    for (std::size_t i = 0; i < n; ++i)
        y[i] = clamp01(z(static_cast<Eigen::Index>(i)) / (2.0 * static_cast<double>(i + 1)));

    Vec degeneracy(static_cast<std::size_t>(m - 1), 1.0);
    Shape shape = Shape::Concave;
    Vec t;

    switch (id) {
    case 1: {
        for (std::size_t i = ku; i < n; ++i)
            y[i] = s_linear(y[i], 0.35);
        for (std::size_t i = ku; i < n; ++i)
            y[i] = b_flat(y[i], 0.8, 0.75, 0.85);
        for (std::size_t i = 0; i < n; ++i)
            y[i] = b_poly(y[i], 0.02);
        Vec w(n);
        for (std::size_t i = 0; i < n; ++i)
            w[i] = 2.0 * static_cast<double>(i + 1);
        const std::size_t group = ku / static_cast<std::size_t>(m - 1);
        t.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m - 1; ++i)
            t[i] = r_sum(y, i * group, (i + 1) * group, w);
        t[m - 1] = r_sum(y, ku, n, w);
        break;
    }
    case 2:
    case 3: {
        if ((n - ku) % 2 != 0)
            throw std::invalid_argument("wfg2/3: distance parameter must be even");
        for (std::size_t i = ku; i < n; ++i)
            y[i] = s_linear(y[i], 0.35);
        const Vec paired = pair_nonsep(y, s);
        t = reduce_sum(paired, s, paired.size());
        if (id == 3) {
            shape = Shape::Linear;
            for (std::size_t i = 1; i < degeneracy.size(); ++i)
                degeneracy[i] = 0.0;
        }
        break;
    }
    case 4:
        for (std::size_t i = 0; i < n; ++i)
            y[i] = s_multi(y[i], 30.0, 10.0, 0.35);
        t = reduce_sum(y, s, n);
        break;
    case 5:
        for (std::size_t i = 0; i < n; ++i)
            y[i] = s_decept(y[i], 0.35, 0.001, 0.05);
        t = reduce_sum(y, s, n);
        break;
    case 6:
        for (std::size_t i = ku; i < n; ++i)
            y[i] = s_linear(y[i], 0.35);
        t = reduce_nonsep(y, s);
        break;
    case 7: {
        const Vec before = y;
        for (std::size_t i = 0; i < ku; ++i)
            y[i] = b_param(before[i], r_sum_ones(before, i + 1, n), 0.98 / 49.98, 0.02, 50.0);
        for (std::size_t i = ku; i < n; ++i)
            y[i] = s_linear(y[i], 0.35);
        t = reduce_sum(y, s, n);
        break;
    }
    case 8: {
        const Vec before = y;
        for (std::size_t i = ku; i < n; ++i)
            y[i] = b_param(before[i], r_sum_ones(before, 0, i), 0.98 / 49.98, 0.02, 50.0);
        for (std::size_t i = ku; i < n; ++i)
            y[i] = s_linear(y[i], 0.35);
        t = reduce_sum(y, s, n);
        break;
    }
    case 9: {
        const Vec before = y;
        for (std::size_t i = 0; i + 1 < n; ++i)
            y[i] = b_param(before[i], r_sum_ones(before, i + 1, n), 0.98 / 49.98, 0.02, 50.0);
        for (std::size_t i = 0; i < ku; ++i)
            y[i] = s_decept(y[i], 0.35, 0.001, 0.05);
        for (std::size_t i = ku; i < n; ++i)
            y[i] = s_multi(y[i], 30.0, 95.0, 0.35);
        t = reduce_nonsep(y, s);
        break;
    }
    default:
        throw std::invalid_argument("wfg: unknown problem id");
    }
    return finish(t, s, degeneracy, shape, id);
}

} // namespace momark::formulas
