#ifndef MOMARK_TEST_SUPPORT_HPP
#define MOMARK_TEST_SUPPORT_HPP

#include "momark/core.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace testing {

/// splitmix64: small, seedable and independent of the library's Rng.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

    /// Multiple of 1/2^bits in [0, 1); sums of products stay exact in doubles.
    double dyadic(int bits) { return static_cast<double>(next() >> (64 - bits)) / static_cast<double>(1ULL << bits); }

private:
    std::uint64_t state_;
};

inline momark::PointSet random_points(Gen& g, int count, int m, double lo = 0.0, double hi = 1.0)
{
    momark::PointSet p(count, m);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < m; ++j)
            p(i, j) = g.uniform(lo, hi);
    return p;
}

/// Points on the simplex-like front sum(f) = 1 are mutually non-dominated.
inline momark::PointSet random_front(Gen& g, int count, int m)
{
    momark::PointSet p(count, m);
    for (int i = 0; i < count; ++i) {
        double sum = 0.0;
        for (int j = 0; j < m; ++j) {
            p(i, j) = -std::log(1.0 - g.unit());
            sum += p(i, j);
        }
        p.row(i) /= sum;
    }
    return p;
}

/// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& name);

/// Minimal XML well-formedness check: balanced tags, quoted attributes,
/// known entities, a single root. Returns an empty string or the first problem.
std::string xml_problem(std::string_view text);

inline int count_substr(std::string_view text, std::string_view needle)
{
    int n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string_view::npos; pos = text.find(needle, pos + 1))
        ++n;
    return n;
}

} // namespace testing

#endif
