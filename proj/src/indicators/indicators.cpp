#include "momark/indicators.hpp"

#include <algorithm>

namespace momark {

std::string_view to_string(IndicatorKind kind)
{
    switch (kind) {
    case IndicatorKind::HvDiff:
        return "hv_diff";
    case IndicatorKind::EpsPlus:
        return "eps_plus";
    case IndicatorKind::GD:
        return "gd";
    case IndicatorKind::IGD:
        return "igd";
    }
    return "?";
}

IndicatorKind parse_indicator(std::string_view token)
{
    for (IndicatorKind k : all_indicators) {
        if (to_string(k) == token)
            return k;
    }
    throw ConfigError("unknown indicator '" + std::string(token) + "' (expected hv_diff, eps_plus, gd, igd)");
}

bool pareto_compliant(IndicatorKind kind)
{
    return kind == IndicatorKind::HvDiff || kind == IndicatorKind::EpsPlus;
}

NormalizationFrame NormalizationFrame::from_points(const PointSet& reference)
{
    if (reference.rows() == 0)
        throw ConfigError("normalization frame: empty reference set");
    return {reference.colwise().minCoeff().transpose(), reference.colwise().maxCoeff().transpose()};
}

Eigen::Index NormalizationFrame::degenerate_coordinate() const
{
    for (Eigen::Index i = 0; i < ideal.size(); ++i) {
        if (!(nadir(i) > ideal(i)))
            return i;
    }
    return -1;
}

ObjectiveVector normalize(const ObjectiveVector& v, const NormalizationFrame& frame)
{
    if (v.size() != frame.ideal.size() || frame.nadir.size() != frame.ideal.size())
        throw DimensionError("normalize: dimension mismatch");
    ObjectiveVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double span = frame.nadir(i) - frame.ideal(i);
        if (span > 0.0) {
            out(i) = (v(i) - frame.ideal(i)) / span;
        } else if (v(i) == frame.ideal(i)) {
            out(i) = 0.0;
        } else {
            throw ValueError("normalize: degenerate frame in objective " + std::to_string(i));
        }
    }
    return out;
}

PointSet normalize(const PointSet& points, const NormalizationFrame& frame)
{
    PointSet out(points.rows(), points.cols());
    for (Eigen::Index r = 0; r < points.rows(); ++r)
        out.row(r) = normalize(ObjectiveVector(points.row(r).transpose()), frame).transpose();
    return out;
}

void ReferenceSet::validate() const
{
    if (points.rows() == 0)
        throw ConfigError("reference set for " + problem + " is empty");
    if (!all_finite(points.reshaped()))
        throw ConfigError("reference set for " + problem + " has non-finite values");
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        for (Eigen::Index j = 0; j < points.rows(); ++j) {
            if (i != j && dominates(points.row(i), points.row(j)))
                throw ConfigError("reference set for " + problem + " contains dominated point " + std::to_string(j));
        }
    }
}

double hv_diff(const PointSet& archive, const PointSet& reference, const ObjectiveVector& ref_point)
{
    if (archive.rows() == 0)
        return unreached;
    return hypervolume(reference, ref_point) - hypervolume(archive, ref_point);
}

double hv_diff(const PointSet& archive, const PointSet& reference)
{
    return hv_diff(archive, reference, ObjectiveVector::Ones(reference.cols()));
}

namespace {

void require_reference(const PointSet& reference, const char* who)
{
    if (reference.rows() == 0)
        throw ConfigError(std::string(who) + ": empty reference set");
}

void require_same_m(const PointSet& a, const PointSet& r, const char* who)
{
    if (a.cols() != r.cols())
        throw DimensionError(std::string(who) + ": objective count mismatch");
}

} // namespace

double eps_plus(const PointSet& archive, const PointSet& reference)
{
    require_reference(reference, "eps_plus");
    if (archive.rows() == 0)
        return unreached;
    require_same_m(archive, reference, "eps_plus");
    double worst = -std::numeric_limits<double>::infinity();
    for (Eigen::Index r = 0; r < reference.rows(); ++r) {
        double best = std::numeric_limits<double>::infinity();
        for (Eigen::Index a = 0; a < archive.rows(); ++a)
            best = std::min(best, detail::eps_shift(archive.row(a), reference.row(r)));
        worst = std::max(worst, best);
    }
    return worst;
}

double gd(const PointSet& archive, const PointSet& reference)
{
    require_reference(reference, "gd");
    if (archive.rows() == 0)
        return unreached;
    require_same_m(archive, reference, "gd");
    double sum = 0.0;
    for (Eigen::Index a = 0; a < archive.rows(); ++a) {
        double best = std::numeric_limits<double>::infinity();
        for (Eigen::Index r = 0; r < reference.rows(); ++r)
            best = std::min(best, detail::euclidean(archive.row(a), reference.row(r)));
        sum += best;
    }
    return sum / static_cast<double>(archive.rows());
}

double igd(const PointSet& archive, const PointSet& reference)
{
    require_reference(reference, "igd");
    if (archive.rows() == 0)
        return unreached;
    require_same_m(archive, reference, "igd");
    double sum = 0.0;
    for (Eigen::Index r = 0; r < reference.rows(); ++r) {
        double best = std::numeric_limits<double>::infinity();
        for (Eigen::Index a = 0; a < archive.rows(); ++a)
            best = std::min(best, detail::euclidean(reference.row(r), archive.row(a)));
        sum += best;
    }
    return sum / static_cast<double>(reference.rows());
}

} // namespace momark
