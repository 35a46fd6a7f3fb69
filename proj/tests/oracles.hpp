#ifndef MOMARK_TEST_ORACLES_HPP
#define MOMARK_TEST_ORACLES_HPP

// Straightforward reference implementations used to check the library.

#include "momark/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace oracle {

/// Exact hypervolume by inclusion-exclusion over all subsets. Small sets only.
inline double hv_inclusion_exclusion(const momark::PointSet& p, const momark::ObjectiveVector& ref)
{
    const int count = static_cast<int>(p.rows());
    const Eigen::Index m = ref.size();
    double total = 0.0;
    for (unsigned mask = 1; mask < (1u << count); ++mask) {
        momark::ObjectiveVector corner = momark::ObjectiveVector::Constant(m, -std::numeric_limits<double>::infinity());
        int bits = 0;
        for (int i = 0; i < count; ++i) {
            if (mask & (1u << i)) {
                corner = corner.cwiseMax(p.row(i).transpose());
                ++bits;
            }
        }
        double vol = 1.0;
        for (Eigen::Index j = 0; j < m; ++j)
            vol *= std::max(0.0, ref(j) - corner(j));
        total += (bits % 2 ? 1.0 : -1.0) * vol;
    }
    return total;
}

/// Sum of strips for a 2-d point set: sort by f1 and add (x_{i+1} - x_i)(r2 - y_i)
/// over the non-dominated staircase.
inline double hv2_strips(const momark::PointSet& p, const momark::ObjectiveVector& ref)
{
    std::vector<std::pair<double, double>> pts;
    for (Eigen::Index i = 0; i < p.rows(); ++i)
        if (p(i, 0) < ref(0) && p(i, 1) < ref(1))
            pts.emplace_back(p(i, 0), p(i, 1));
    std::sort(pts.begin(), pts.end());
    std::vector<std::pair<double, double>> stair;
    for (const auto& q : pts)
        if (stair.empty() || q.second < stair.back().second)
            stair.push_back(q);
    double total = 0.0;
    for (std::size_t i = 0; i < stair.size(); ++i) {
        const double next_x = i + 1 < stair.size() ? stair[i + 1].first : ref(0);
        total += (next_x - stair[i].first) * (ref(1) - stair[i].second);
    }
    return total;
}

inline double dist(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b)
{
    return std::sqrt((a - b).squaredNorm());
}

inline double igd(const momark::PointSet& a, const momark::PointSet& r)
{
    if (a.rows() == 0)
        return std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < a.rows(); ++j)
            best = std::min(best, dist(r.row(i), a.row(j)));
        s += best;
    }
    return s / static_cast<double>(r.rows());
}

inline double gd(const momark::PointSet& a, const momark::PointSet& r) { return igd(r, a); }

inline double eps_plus(const momark::PointSet& a, const momark::PointSet& r)
{
    if (a.rows() == 0)
        return std::numeric_limits<double>::infinity();
    double worst = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < a.rows(); ++j)
            best = std::min(best, (a.row(j) - r.row(i)).maxCoeff());
        worst = std::max(worst, best);
    }
    return worst;
}

} // namespace oracle

#endif
