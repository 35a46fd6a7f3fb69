#ifndef MOMARK_INDICATORS_HPP
#define MOMARK_INDICATORS_HPP

#include "momark/core.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>

namespace momark {

enum class IndicatorKind { HvDiff, EpsPlus, GD, IGD };

inline constexpr std::array<IndicatorKind, 4> all_indicators{IndicatorKind::HvDiff, IndicatorKind::EpsPlus,
                                                             IndicatorKind::GD, IndicatorKind::IGD};

/// Value reported before any target is reachable (empty archive).
inline constexpr double unreached = std::numeric_limits<double>::infinity();

/// Tokens used in files: hv_diff, eps_plus, gd, igd.
std::string_view to_string(IndicatorKind kind);
IndicatorKind parse_indicator(std::string_view token);
bool pareto_compliant(IndicatorKind kind);

/// Ideal and nadir of a reference set.
struct NormalizationFrame {
    ObjectiveVector ideal;
    ObjectiveVector nadir;

    static NormalizationFrame from_points(const PointSet& reference);

    /// Index of the first coordinate where ideal == nadir, or -1.
    Eigen::Index degenerate_coordinate() const;
};

ObjectiveVector normalize(const ObjectiveVector& v, const NormalizationFrame& frame);
PointSet normalize(const PointSet& points, const NormalizationFrame& frame);

struct ReferenceSet {
    std::string problem;
    PointSet points;

    /// Throws ConfigError unless non-empty, finite, and mutually non-dominated.
    void validate() const;
};

/// Exact hypervolume of the union of boxes [p, ref_point], m in {2,3,4}.
/// Rows not strictly below ref_point in every coordinate contribute nothing.
double hypervolume(const PointSet& points, const ObjectiveVector& ref_point);

/// Midpoint-rule approximation on a resolution^(m-1) grid over the first m-1
/// objectives, integrating the last objective exactly per cell. Test oracle.
double hv_oracle(const PointSet& points, const ObjectiveVector& ref_point, int resolution);

/// HV(reference) - HV(archive) against ref_point; unreached for an empty archive.
/// Both sets must already be normalized with the same frame.
double hv_diff(const PointSet& archive, const PointSet& reference, const ObjectiveVector& ref_point);
double hv_diff(const PointSet& archive, const PointSet& reference);

double eps_plus(const PointSet& archive, const PointSet& reference);
double gd(const PointSet& archive, const PointSet& reference);
double igd(const PointSet& archive, const PointSet& reference);

namespace detail {

// Pairwise kernels shared by the direct indicators and the incremental tracker
// so both routes produce bit-identical values.

template <typename DA, typename DB>
double euclidean(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b)
{
    double s = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double d = a(i) - b(i);
        s += d * d;
    }
    return std::sqrt(s);
}

/// Smallest additive shift of a that weakly dominates r.
template <typename DA, typename DB>
double eps_shift(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& r)
{
    double worst = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < a.size(); ++i)
        worst = std::max(worst, a(i) - r(i));
    return worst;
}

} // namespace detail

} // namespace momark

#endif
