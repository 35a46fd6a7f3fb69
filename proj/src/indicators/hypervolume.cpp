#include "momark/indicators.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <map>
#include <vector>

namespace momark {

namespace {

using P = std::array<double, 4>;

double hv2(std::vector<P> pts, double rx, double ry)
{
    std::sort(pts.begin(), pts.end(), [](const P& a, const P& b) { return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]); });
    double area = 0.0;
    double floor_y = ry;
    for (const P& p : pts) {
        if (p[1] < floor_y) {
            area += (rx - p[0]) * (floor_y - p[1]);
            floor_y = p[1];
        }
    }
    return area;
}

// Sweep along the third objective, keeping the 2-d staircase of the points
// seen so far and its dominated area.
double hv3(std::vector<P> pts, const std::array<double, 3>& ref)
{
    std::sort(pts.begin(), pts.end(), [](const P& a, const P& b) { return a[2] < b[2]; });
    std::map<double, double> front;
    double area = 0.0;
    double volume = 0.0;
    double z_prev = 0.0;
    bool started = false;

    for (const P& p : pts) {
        if (started)
            volume += area * (p[2] - z_prev);
        started = true;
        z_prev = p[2];

        auto it = front.lower_bound(p[0]);
        double top = ref[1];
        if (it != front.begin()) {
            const auto pred = std::prev(it);
            if (pred->second <= p[1])
                continue;
            top = pred->second;
        }
        if (it != front.end() && it->first == p[0] && it->second <= p[1])
            continue;

        double x = p[0];
        double added = 0.0;
        while (it != front.end() && it->second >= p[1]) {
            added += (it->first - x) * (top - p[1]);
            top = it->second;
            x = it->first;
            it = front.erase(it);
        }
        const double right = (it == front.end()) ? ref[0] : it->first;
        added += (right - x) * (top - p[1]);
        area += added;
        front.emplace(p[0], p[1]);
    }
    if (started)
        volume += area * (ref[2] - z_prev);
    return volume;
}

// Slices along the fourth objective; each slab is a 3-d problem.
double hv4(std::vector<P> pts, const std::array<double, 4>& ref)
{
    std::sort(pts.begin(), pts.end(), [](const P& a, const P& b) { return a[3] < b[3]; });
    const std::array<double, 3> ref3{ref[0], ref[1], ref[2]};
    double volume = 0.0;
    std::vector<P> prefix;
    prefix.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        prefix.push_back(pts[i]);
        const double next = (i + 1 < pts.size()) ? pts[i + 1][3] : ref[3];
        const double depth = next - pts[i][3];
        if (depth > 0.0)
            volume += hv3(prefix, ref3) * depth;
    }
    return volume;
}

std::vector<P> contributing(const PointSet& points, const ObjectiveVector& ref)
{
    std::vector<P> out;
    out.reserve(static_cast<std::size_t>(points.rows()));
    for (Eigen::Index r = 0; r < points.rows(); ++r) {
        P p{};
        bool inside = true;
        for (Eigen::Index i = 0; i < points.cols(); ++i) {
            p[static_cast<std::size_t>(i)] = points(r, i);
            if (!(points(r, i) < ref(i)))
                inside = false;
        }
        if (inside)
            out.push_back(p);
    }
    return out;
}

void check_dimensions(const PointSet& points, const ObjectiveVector& ref)
{
    const Eigen::Index m = ref.size();
    if (m < 2 || m > 4)
        throw DimensionError("hypervolume: unsupported dimension m = " + std::to_string(m));
    if (points.rows() > 0 && points.cols() != m)
        throw DimensionError("hypervolume: points have " + std::to_string(points.cols())
                             + " objectives, reference point has " + std::to_string(m));
}

} // namespace

double hypervolume(const PointSet& points, const ObjectiveVector& ref_point)
{
    check_dimensions(points, ref_point);
    std::vector<P> pts = contributing(points, ref_point);
    if (pts.empty())
        return 0.0;
    switch (ref_point.size()) {
    case 2:
        return hv2(std::move(pts), ref_point(0), ref_point(1));
    case 3:
        return hv3(std::move(pts), {ref_point(0), ref_point(1), ref_point(2)});
    default:
        return hv4(std::move(pts), {ref_point(0), ref_point(1), ref_point(2), ref_point(3)});
    }
}

double hv_oracle(const PointSet& points, const ObjectiveVector& ref_point, int resolution)
{
    check_dimensions(points, ref_point);
    const std::vector<P> pts = contributing(points, ref_point);
    if (pts.empty())
        return 0.0;
    const std::size_t m = static_cast<std::size_t>(ref_point.size());
    const std::size_t grid_dims = m - 1;

    std::array<double, 4> lo{};
    std::array<double, 4> width{};
    double cell = 1.0;
    for (std::size_t d = 0; d < grid_dims; ++d) {
        lo[d] = pts.front()[d];
        for (const P& p : pts)
            lo[d] = std::min(lo[d], p[d]);
        width[d] = (ref_point(static_cast<Eigen::Index>(d)) - lo[d]) / resolution;
        cell *= width[d];
    }
    const double top = ref_point(static_cast<Eigen::Index>(m - 1));

    std::size_t cells = 1;
    for (std::size_t d = 0; d < grid_dims; ++d)
        cells *= static_cast<std::size_t>(resolution);

    double total = 0.0;
    std::array<double, 4> center{};
    for (std::size_t c = 0; c < cells; ++c) {
        std::size_t rest = c;
        for (std::size_t d = 0; d < grid_dims; ++d) {
            const std::size_t idx = rest % static_cast<std::size_t>(resolution);
            rest /= static_cast<std::size_t>(resolution);
            center[d] = lo[d] + (static_cast<double>(idx) + 0.5) * width[d];
        }
        double lowest = top;
        for (const P& p : pts) {
            bool covers = true;
            for (std::size_t d = 0; d < grid_dims && covers; ++d)
                covers = p[d] <= center[d];
            if (covers)
                lowest = std::min(lowest, p[m - 1]);
        }
        total += cell * (top - lowest);
    }
    return total;
}

} // namespace momark
