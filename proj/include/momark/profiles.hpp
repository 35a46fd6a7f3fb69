#ifndef MOMARK_PROFILES_HPP
#define MOMARK_PROFILES_HPP

#include "momark/problems.hpp"
#include "momark/runtime.hpp"

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace momark {

struct ProfileTriple {
    std::string problem;
    IndicatorKind indicator = IndicatorKind::HvDiff;
    int target_index = 0;

    auto operator<=>(const ProfileTriple&) const = default;
};

/// The set P of (problem, indicator, target) triples a profile is taken over.
struct ProfileKey {
    std::set<ProfileTriple> triples;
};

struct DataProfile {
    std::string solver;
    std::vector<double> alphas;
    std::vector<double> fractions;
    /// Abscissa where the solver's per-run budget runs out.
    double max_alpha_marker = 0.0;
};

/// Per-solver scaling used by data_profile: runtime / (multiplier * n_p).
struct ProfileSolver {
    std::string name;
    int multiplier = 1;
};

/// `count` log-spaced values from 10^lo_exp to 10^hi_exp inclusive.
std::vector<double> log_alphas(double lo_exp = 0.0, double hi_exp = 4.0, int count = 200);

/// fractions[j] = |{p in P : fe_p / (multiplier * n_p) <= alphas[j]}| / |P|.
/// `first_hits` must already be merged best-of-runs; a triple without a
/// record for the solver is a ValueError. `dims` maps problem -> n_p.
DataProfile data_profile(const std::vector<FirstHitRecord>& first_hits, const ProfileKey& key,
                         const ProfileSolver& solver, const std::vector<double>& alphas,
                         const std::map<std::string, int>& dims, double max_alpha_marker);

/// Decision dimensions for the named problems, from the registry.
std::map<std::string, int> registry_dims(const std::set<std::string>& problems);

/// A named category filter. Mixed ("x") entries never enter a pure category.
struct Panel {
    std::string name;
    CategoryFilter filter;
};

/// all, low-dim, high-dim, separable, non-separable, unimodal, multimodal, m2, m3, m4.
std::vector<Panel> default_panels();
Panel parse_panel(std::string_view name);

/// Every (problem, indicator, target) triple for problems appearing in
/// `records` that pass `filter`, restricted to `indicators`.
ProfileKey aggregate_keys(const std::vector<FirstHitRecord>& records, const CategoryFilter& filter,
                          const std::vector<IndicatorKind>& indicators);

std::string format_profiles_csv(const std::vector<DataProfile>& profiles);
void emit_csv(const std::vector<DataProfile>& profiles, const std::filesystem::path& path);
/// Reads solver/alpha/fraction back; max_alpha_marker is not stored in CSV.
std::vector<DataProfile> read_profiles_csv(const std::filesystem::path& path);

/// Log-x / linear-y plot geometry shared by the SVG writer and its tests.
struct PlotFrame {
    double width = 640.0;
    double height = 420.0;
    double left = 70.0;
    double right = 170.0;
    double top = 40.0;
    double bottom = 55.0;
    double alpha_lo = 1.0;
    double alpha_hi = 1e4;

    double x_pixel(double alpha) const;
    double y_pixel(double fraction) const;
};

std::string format_svg(const std::vector<DataProfile>& profiles, const std::string& title,
                       const PlotFrame& frame = {});
void emit_svg(const std::vector<DataProfile>& profiles, const std::string& title,
              const std::filesystem::path& path, const PlotFrame& frame = {});

} // namespace momark

#endif
