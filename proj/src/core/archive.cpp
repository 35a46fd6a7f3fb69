#include "momark/core.hpp"

namespace momark {

PointSet stack_rows(const std::vector<ObjectiveVector>& points)
{
    if (points.empty())
        return PointSet(0, 0);
    const Eigen::Index m = points.front().size();
    PointSet out(static_cast<Eigen::Index>(points.size()), m);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != m)
            throw DimensionError("stack_rows: point " + std::to_string(i) + " has " + std::to_string(points[i].size())
                                 + " objectives, expected " + std::to_string(m));
        out.row(static_cast<Eigen::Index>(i)) = points[i].transpose();
    }
    return out;
}

} // namespace momark
