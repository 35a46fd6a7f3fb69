#include "momark/profiles.hpp"

#include "momark/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace momark {

std::vector<double> log_alphas(double lo_exp, double hi_exp, int count)
{
    if (count < 2)
        throw ConfigError("log_alphas: need at least two abscissas");
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = std::pow(10.0, std::lerp(lo_exp, hi_exp, static_cast<double>(i) / (count - 1)));
    return out;
}

DataProfile data_profile(const std::vector<FirstHitRecord>& first_hits, const ProfileKey& key,
                         const ProfileSolver& solver, const std::vector<double>& alphas,
                         const std::map<std::string, int>& dims, double max_alpha_marker)
{
    if (key.triples.empty())
        throw ConfigError("data profile for " + solver.name + ": empty problem set");
    if (solver.multiplier < 1)
        throw ConfigError("data profile: multiplier must be positive");
    for (std::size_t j = 1; j < alphas.size(); ++j) {
        if (!(alphas[j] > alphas[j - 1]))
            throw ConfigError("data profile: alphas must be increasing");
    }

    std::map<ProfileTriple, const FirstHitRecord*> index;
    for (const FirstHitRecord& r : first_hits) {
        if (r.solver != solver.name)
            continue;
        const auto [it, fresh] = index.emplace(ProfileTriple{r.problem, r.indicator, r.target_index}, &r);
        if (!fresh)
            throw ValueError("data profile: duplicate record for " + r.problem + " (merge runs first)");
    }

    std::vector<double> scaled;
    scaled.reserve(key.triples.size());
    for (const ProfileTriple& t : key.triples) {
        const auto it = index.find(t);
        if (it == index.end())
            throw ValueError("data profile: solver " + solver.name + " has no record for " + t.problem + "/"
                             + std::string(to_string(t.indicator)) + "/" + std::to_string(t.target_index));
        if (!it->second->fe)
            continue;
        const auto dim = dims.find(t.problem);
        if (dim == dims.end() || dim->second < 1)
            throw ValueError("data profile: unknown dimension for " + t.problem);
        scaled.push_back(static_cast<double>(*it->second->fe)
                         / (static_cast<double>(solver.multiplier) * static_cast<double>(dim->second)));
    }
    std::sort(scaled.begin(), scaled.end());

    DataProfile p;
    p.solver = solver.name;
    p.alphas = alphas;
    p.max_alpha_marker = max_alpha_marker;
    p.fractions.reserve(alphas.size());
    const double total = static_cast<double>(key.triples.size());
    std::size_t reached = 0;
    for (double a : alphas) {
        while (reached < scaled.size() && scaled[reached] <= a)
            ++reached;
        p.fractions.push_back(static_cast<double>(reached) / total);
    }
    return p;
}

std::map<std::string, int> registry_dims(const std::set<std::string>& problems)
{
    std::map<std::string, int> out;
    for (const std::string& name : problems)
        out[name] = registry_lookup(name).n();
    return out;
}

std::vector<Panel> default_panels()
{
    std::vector<Panel> panels(10);
    panels[0].name = "all";
    panels[1].name = "low-dim";
    panels[1].filter.dim_class = DimClass::Low;
    panels[2].name = "high-dim";
    panels[2].filter.dim_class = DimClass::High;
    panels[3].name = "separable";
    panels[3].filter.separability = Separability::Separable;
    panels[4].name = "non-separable";
    panels[4].filter.separability = Separability::NonSeparable;
    panels[5].name = "unimodal";
    panels[5].filter.modality = Modality::Unimodal;
    panels[6].name = "multimodal";
    panels[6].filter.modality = Modality::Multimodal;
    for (int m = 2; m <= 4; ++m) {
        panels[static_cast<std::size_t>(5 + m)].name = "m" + std::to_string(m);
        panels[static_cast<std::size_t>(5 + m)].filter.m = m;
    }
    return panels;
}

Panel parse_panel(std::string_view name)
{
    for (Panel& p : default_panels()) {
        if (p.name == name)
            return p;
    }
    throw ConfigError("unknown panel '" + std::string(name)
                      + "' (expected all, low-dim, high-dim, separable, non-separable, unimodal, multimodal, m2, m3, m4)");
}

ProfileKey aggregate_keys(const std::vector<FirstHitRecord>& records, const CategoryFilter& filter,
                          const std::vector<IndicatorKind>& indicators)
{
    std::set<std::string> problems;
    for (const FirstHitRecord& r : records)
        problems.insert(r.problem);
    ProfileKey key;
    for (const std::string& name : problems) {
        if (!filter.matches(registry_lookup(name).meta()))
            continue;
        for (IndicatorKind k : indicators) {
            for (int t = 0; t < targets_per_indicator; ++t)
                key.triples.insert({name, k, t});
        }
    }
    return key;
}

std::string format_profiles_csv(const std::vector<DataProfile>& profiles)
{
    std::vector<std::tuple<std::string, double, double>> rows;
    for (const DataProfile& p : profiles) {
        if (p.alphas.size() != p.fractions.size())
            throw ValueError("profile " + p.solver + ": alphas and fractions differ in length");
        for (std::size_t j = 0; j < p.alphas.size(); ++j)
            rows.emplace_back(p.solver, p.alphas[j], p.fractions[j]);
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    std::string out = "solver,alpha,fraction\n";
    for (const auto& [solver, alpha, fraction] : rows)
        out += solver + "," + io::format_double(alpha) + "," + io::format_double(fraction) + "\n";
    return out;
}

void emit_csv(const std::vector<DataProfile>& profiles, const std::filesystem::path& path)
{
    if (profiles.empty())
        throw ValueError("emit_csv: no profiles");
    io::write_file_atomic(path, format_profiles_csv(profiles));
}

std::vector<DataProfile> read_profiles_csv(const std::filesystem::path& path)
{
    std::istringstream in(io::read_file(path));
    std::string line;
    if (!std::getline(in, line) || io::chomp(line) != "solver,alpha,fraction")
        throw IoError(path.string() + ": missing profile header");
    std::vector<DataProfile> out;
    while (std::getline(in, line)) {
        const std::string_view row = io::chomp(line);
        if (row.empty())
            continue;
        const auto f = io::split(row, ',');
        if (f.size() != 3)
            throw IoError(path.string() + ": expected 3 fields");
        if (out.empty() || out.back().solver != f[0]) {
            out.emplace_back();
            out.back().solver = std::string(f[0]);
        }
        out.back().alphas.push_back(io::parse_double(f[1]));
        out.back().fractions.push_back(io::parse_double(f[2]));
    }
    return out;
}

} // namespace momark
