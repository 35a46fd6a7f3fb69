#ifndef MOMARK_CORE_HPP
#define MOMARK_CORE_HPP

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace momark {

// Error hierarchy. ConfigError-derived failures map to exit code 1 in the CLI,
// everything else to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class NotFoundError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class ValueError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ProtocolError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// One point per row.
template <typename Scalar>
using PointMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using ObjectiveVector = Vector<double>;
using DecisionVector = Vector<double>;
using PointSet = PointMatrix<double>;

/// Function-evaluation counter. Always >= 1 for a recorded evaluation.
using FeCount = std::int64_t;

template <typename Derived>
bool all_finite(const Eigen::DenseBase<Derived>& v)
{
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!std::isfinite(static_cast<double>(v(i))))
            return false;
    }
    return true;
}

/// Pareto dominance for minimization: a is nowhere worse and somewhere
/// strictly better. Equal vectors do not dominate each other.
template <typename DerivedA, typename DerivedB>
bool dominates(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
    if (a.size() != b.size())
        throw DimensionError("dominates: length mismatch (" + std::to_string(a.size()) + " vs "
                             + std::to_string(b.size()) + ")");
    bool strict = false;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i) > b(i))
            return false;
        if (a(i) < b(i))
            strict = true;
    }
    return strict;
}

/// True when a dominates b or a == b.
template <typename DerivedA, typename DerivedB>
bool weakly_dominates(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
    if (a.size() != b.size())
        throw DimensionError("weakly_dominates: length mismatch");
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i) > b(i))
            return false;
    }
    return true;
}

/// Rows of `points` not dominated by any other row. Exact duplicates collapse
/// onto their first occurrence; survivors keep input order.
template <typename Derived>
PointMatrix<typename Derived::Scalar> nondominated_filter(const Eigen::MatrixBase<Derived>& points)
{
    using Scalar = typename Derived::Scalar;
    const Eigen::Index count = points.rows();
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < count; ++i) {
        bool survives = true;
        for (Eigen::Index j = 0; j < count && survives; ++j) {
            if (i == j)
                continue;
            if (dominates(points.row(j), points.row(i)))
                survives = false;
            else if (j < i && points.row(j) == points.row(i))
                survives = false;
        }
        if (survives)
            keep.push_back(i);
    }
    PointMatrix<Scalar> out(static_cast<Eigen::Index>(keep.size()), points.cols());
    for (std::size_t k = 0; k < keep.size(); ++k)
        out.row(static_cast<Eigen::Index>(k)) = points.row(keep[k]);
    return out;
}

/// Overload for a list of vectors; every vector must share one length.
template <typename Scalar>
std::vector<Vector<Scalar>> nondominated_filter(const std::vector<Vector<Scalar>>& points)
{
    if (points.empty())
        return {};
    const Eigen::Index m = points.front().size();
    PointMatrix<Scalar> stacked(static_cast<Eigen::Index>(points.size()), m);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != m)
            throw DimensionError("nondominated_filter: mixed dimensions");
        stacked.row(static_cast<Eigen::Index>(i)) = points[i].transpose();
    }
    const PointMatrix<Scalar> kept = nondominated_filter(stacked);
    std::vector<Vector<Scalar>> out;
    out.reserve(static_cast<std::size_t>(kept.rows()));
    for (Eigen::Index i = 0; i < kept.rows(); ++i)
        out.emplace_back(kept.row(i).transpose());
    return out;
}

template <typename Scalar>
struct BasicArchiveEntry {
    Vector<Scalar> objectives;
    FeCount fe_stamp = 0;
    /// Serial number unique within one archive; never reused.
    std::uint64_t id = 0;
};

struct InsertionReport {
    bool accepted = false;
    std::uint64_t id = 0;
    std::vector<std::uint64_t> removed;
};

/// Unbounded set of mutually non-dominated objective vectors. Linear scan per
/// insertion. Entries stay in insertion order so fe stamps are non-decreasing.
template <typename Scalar>
class BasicArchive {
public:
    using Entry = BasicArchiveEntry<Scalar>;

    BasicArchive() = default;
    explicit BasicArchive(Eigen::Index objectives) : m_(objectives) {}

    template <typename Derived>
    InsertionReport insert(const Eigen::MatrixBase<Derived>& candidate, FeCount fe)
    {
        if (!all_finite(candidate))
            throw ValueError("archive_insert: non-finite candidate");
        if (m_ == 0)
            m_ = candidate.size();
        if (candidate.size() != m_)
            throw DimensionError("archive_insert: expected " + std::to_string(m_) + " objectives, got "
                                 + std::to_string(candidate.size()));
        if (fe < 1 || fe < last_fe_)
            throw ValueError("archive_insert: fe " + std::to_string(fe) + " precedes stamp "
                             + std::to_string(last_fe_));

        InsertionReport report;
        for (const Entry& e : entries_) {
            if (weakly_dominates(e.objectives, candidate))
                return report;
        }
        std::vector<Entry> kept;
        kept.reserve(entries_.size() + 1);
        for (Entry& e : entries_) {
            if (dominates(candidate, e.objectives))
                report.removed.push_back(e.id);
            else
                kept.push_back(std::move(e));
        }
        Entry added;
        added.objectives = candidate;
        added.fe_stamp = fe;
        added.id = next_id_++;
        kept.push_back(std::move(added));
        entries_ = std::move(kept);
        last_fe_ = fe;
        report.accepted = true;
        report.id = entries_.back().id;
        return report;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    Eigen::Index objectives() const { return m_; }

    /// Archive contents stacked one point per row, in insertion order.
    PointMatrix<Scalar> points() const
    {
        PointMatrix<Scalar> out(static_cast<Eigen::Index>(entries_.size()), m_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            out.row(static_cast<Eigen::Index>(i)) = entries_[i].objectives.transpose();
        return out;
    }

private:
    std::vector<Entry> entries_;
    Eigen::Index m_ = 0;
    FeCount last_fe_ = 0;
    std::uint64_t next_id_ = 0;
};

using ArchiveEntry = BasicArchiveEntry<double>;
using Archive = BasicArchive<double>;

/// Stacks a list of equal-length vectors into a PointSet.
PointSet stack_rows(const std::vector<ObjectiveVector>& points);

} // namespace momark

#endif
