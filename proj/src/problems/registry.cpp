#include "momark/problems.hpp"

#include "formulas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace momark {

std::string_view to_tag(DimClass d)
{
    return d == DimClass::Low ? "L" : "H";
}

std::string_view to_tag(Separability s)
{
    switch (s) {
    case Separability::Separable:
        return "S";
    case Separability::NonSeparable:
        return "NS";
    default:
        return "x";
    }
}

std::string_view to_tag(Modality m)
{
    switch (m) {
    case Modality::Unimodal:
        return "U";
    case Modality::Multimodal:
        return "M";
    default:
        return "x";
    }
}

ProblemInstance::ProblemInstance(ProblemMeta meta, ObjectiveFunction f)
    : meta_(std::move(meta)), f_(std::move(f))
{
}

bool ProblemInstance::contains(const DecisionVector& x) const
{
    if (x.size() != meta_.n)
        return false;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        // NaN fails both comparisons.
        if (!(x(i) >= meta_.lower(i) && x(i) <= meta_.upper(i)))
            return false;
    }
    return true;
}

ObjectiveVector ProblemInstance::evaluate(const DecisionVector& x) const
{
    if (x.size() != meta_.n)
        throw DomainError(meta_.name + ": expected " + std::to_string(meta_.n) + " variables, got "
                          + std::to_string(x.size()));
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (!(x(i) >= meta_.lower(i) && x(i) <= meta_.upper(i))) {
            std::ostringstream msg;
            msg.precision(17);
            msg << meta_.name << ": x[" << i << "] = " << x(i) << " outside [" << meta_.lower(i) << ", "
                << meta_.upper(i) << "]";
            throw DomainError(msg.str());
        }
    }
    return f_(x);
}

bool CategoryFilter::matches(const ProblemMeta& meta) const
{
    if (dim_class && meta.dim_class != *dim_class)
        return false;
    if (separability && meta.separability != *separability)
        return false;
    if (modality && meta.modality != *modality)
        return false;
    if (m && meta.m != *m)
        return false;
    if (core_only && !meta.core)
        return false;
    return true;
}

namespace {

using D = DimClass;
using S = Separability;
using M = Modality;

struct Builder {
    std::vector<ProblemInstance> problems;

    void add(std::string name, int n, int m, DecisionVector lower, DecisionVector upper, D d, S s, M mod,
             ObjectiveFunction f, bool core = true)
    {
        ProblemMeta meta;
        meta.name = std::move(name);
        meta.n = n;
        meta.m = m;
        meta.lower = std::move(lower);
        meta.upper = std::move(upper);
        meta.dim_class = d;
        meta.separability = s;
        meta.modality = mod;
        meta.core = core;
        problems.emplace_back(std::move(meta), std::move(f));
    }

    void add_box(std::string name, int n, int m, double lo, double hi, D d, S s, M mod, ObjectiveFunction f,
                 bool core = true)
    {
        add(std::move(name), n, m, DecisionVector::Constant(n, lo), DecisionVector::Constant(n, hi), d, s, mod,
            std::move(f), core);
    }
};

DecisionVector values(std::initializer_list<double> v)
{
    DecisionVector out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v)
        out(i++) = x;
    return out;
}

std::vector<ProblemInstance> build_registry()
{
    namespace fm = formulas;
    constexpr double pi = std::numbers::pi;
    Builder b;

    b.add_box("BK1", 2, 2, -5, 10, D::Low, S::Separable, M::Unimodal, fm::bk1);
    b.add_box("DG01", 1, 2, -10, 13, D::Low, S::Mixed, M::Multimodal, fm::dg01);
    b.add_box("DPAM1", 10, 2, -0.3, 0.3, D::High, S::NonSeparable, M::Mixed, fm::dpam1);
    b.add_box("Far1", 2, 2, -1, 1, D::Low, S::NonSeparable, M::Multimodal, fm::far1);
    b.add_box("FES1", 10, 2, 0, 1, D::High, S::Separable, M::Unimodal, fm::fes1);
    b.add_box("FES2", 10, 3, 0, 1, D::High, S::Separable, M::Unimodal, fm::fes2);
    b.add_box("FES3", 10, 4, 0, 1, D::High, S::Separable, M::Unimodal, fm::fes3);
    b.add_box("Fonseca", 2, 2, -4, 4, D::Low, S::Separable, M::Unimodal, fm::fonseca);
    b.add_box("IKK1", 2, 3, -50, 50, D::Low, S::Mixed, M::Unimodal, fm::ikk1);
    b.add("IM1", 2, 2, values({1, 1}), values({4, 2}), D::Low, S::Mixed, M::Unimodal, fm::im1);
    b.add_box("Kursawe", 3, 2, -5, 5, D::Low, S::Mixed, M::Mixed, fm::kursawe);
    b.add_box("LRS1", 2, 2, -50, 50, D::Low, S::Separable, M::Unimodal, fm::lrs1);
    b.add_box("MHHM1", 1, 3, 0, 1, D::Low, S::Mixed, M::Unimodal, fm::mhhm1);
    b.add_box("MHHM2", 2, 3, 0, 1, D::Low, S::Separable, M::Unimodal, fm::mhhm2);
    b.add_box("MLF1", 1, 2, 0, 20, D::Low, S::Mixed, M::Multimodal, fm::mlf1);
    b.add_box("MLF2", 2, 2, -2, 2, D::Low, S::NonSeparable, M::Multimodal, fm::mlf2);
    b.add_box("MOP1", 1, 2, -1e5, 1e5, D::Low, S::Separable, M::Unimodal, fm::mop1);
    b.add_box("MOP2", 4, 2, -4, 4, D::Low, S::Separable, M::Unimodal, fm::mop2);
    b.add_box("MOP3", 2, 2, -pi, pi, D::Low, S::Mixed, M::Mixed, fm::mop3);
    b.add_box("MOP4", 3, 2, -5, 5, D::Low, S::Separable, M::Mixed, fm::mop4);
    b.add_box("MOP5", 2, 3, -30, 30, D::Low, S::NonSeparable, M::Mixed, fm::mop5);
    b.add_box("MOP6", 2, 2, 0, 1, D::Low, S::Separable, M::Mixed, fm::mop6);
    b.add_box("MOP7", 2, 3, -400, 400, D::Low, S::Mixed, M::Unimodal, fm::mop7);
    b.add_box("QV1", 10, 2, -5.12, 5.12, D::High, S::Separable, M::Multimodal, fm::qv1);
    b.add_box("Sch1", 1, 2, 0, 5, D::Low, S::Mixed, M::Mixed, fm::sch1);
    b.add_box("SK1", 1, 2, -100, 100, D::Low, S::Separable, M::Multimodal, fm::sk1);
    b.add_box("SK2", 4, 2, -10, 10, D::Low, S::Mixed, M::Mixed, fm::sk2);
    b.add_box("SP1", 2, 2, -100, 100, D::Low, S::NonSeparable, M::Unimodal, fm::sp1);
    b.add_box("SSFYY1", 2, 2, -100, 100, D::Low, S::Separable, M::Unimodal, fm::ssfyy1);
    b.add_box("SSFYY2", 1, 2, -100, 100, D::Low, S::Mixed, M::Mixed, fm::ssfyy2);
    b.add_box("VU1", 2, 2, -3, 3, D::Low, S::Separable, M::Unimodal, fm::vu1);
    b.add_box("VU2", 2, 2, -3, 3, D::Low, S::Separable, M::Unimodal, fm::vu2);
    b.add_box("ZLT1", 10, 3, -1000, 1000, D::High, S::Separable, M::Unimodal, fm::zlt1);

    // DTLZ: k = n - m + 1 distance variables, unit box.
    auto dtlz = [&](std::string name, int n, int m, D d, M mod, ObjectiveVector (*f)(const DecisionVector&, int),
                    bool core) {
        b.add_box(std::move(name), n, m, 0, 1, d, S::Mixed, mod, [f, m](const DecisionVector& x) { return f(x, m); },
                  core);
    };
    dtlz("DTLZ1", 7, 3, D::High, M::Multimodal, fm::dtlz1, true);
    dtlz("DTLZ1n2", 2, 2, D::Low, M::Multimodal, fm::dtlz1, true);
    dtlz("DTLZ2", 12, 3, D::High, M::Unimodal, fm::dtlz2, true);
    dtlz("DTLZ2n2", 2, 2, D::Low, M::Unimodal, fm::dtlz2, true);
    dtlz("DTLZ3", 12, 3, D::High, M::Multimodal, fm::dtlz3, true);
    dtlz("DTLZ3n2", 2, 2, D::Low, M::Multimodal, fm::dtlz3, false);
    dtlz("DTLZ4", 12, 3, D::High, M::Unimodal, fm::dtlz4, true);
    dtlz("DTLZ4n2", 2, 2, D::Low, M::Unimodal, fm::dtlz4, false);
    dtlz("DTLZ5", 12, 3, D::High, M::Unimodal, fm::dtlz5, true);
    dtlz("DTLZ5n2", 2, 2, D::Low, M::Unimodal, fm::dtlz5, false);
    dtlz("DTLZ6", 22, 3, D::High, M::Unimodal, fm::dtlz6, true);
    dtlz("DTLZ6n2", 2, 2, D::Low, M::Unimodal, fm::dtlz6, false);

    b.add_box("ZDT1", 30, 2, 0, 1, D::High, S::Separable, M::Unimodal, fm::zdt1);
    b.add_box("ZDT2", 30, 2, 0, 1, D::High, S::Separable, M::Unimodal, fm::zdt2);
    b.add_box("ZDT3", 30, 2, 0, 1, D::High, S::Separable, M::Mixed, fm::zdt3);
    {
        DecisionVector lo = DecisionVector::Constant(10, -5.0);
        DecisionVector hi = DecisionVector::Constant(10, 5.0);
        lo(0) = 0.0;
        hi(0) = 1.0;
        b.add("ZDT4", 10, 2, lo, hi, D::High, S::Separable, M::Mixed, fm::zdt4);
    }
    b.add_box("ZDT6", 10, 2, 0, 1, D::High, S::Separable, M::Multimodal, fm::zdt6);

    // WFG with n = 8, m = 3: k = m - 1 position variables, l = n - k distance variables.
    struct WfgRow {
        int id;
        S s;
        M mod;
    };
    constexpr WfgRow wfg_rows[] = {
        {1, S::Separable, M::Unimodal},    {2, S::NonSeparable, M::Mixed},  {3, S::NonSeparable, M::Unimodal},
        {4, S::Separable, M::Multimodal},  {5, S::Separable, M::Mixed},     {6, S::NonSeparable, M::Unimodal},
        {7, S::Separable, M::Unimodal},    {8, S::NonSeparable, M::Unimodal}, {9, S::NonSeparable, M::Mixed},
    };
    for (const WfgRow& row : wfg_rows) {
        constexpr int n = 8;
        constexpr int m = 3;
        constexpr int k = m - 1;
        DecisionVector hi(n);
        for (int i = 0; i < n; ++i)
            hi(i) = 2.0 * (i + 1);
        const int id = row.id;
        b.add("WFG" + std::to_string(id), n, m, DecisionVector::Zero(n), hi, D::High, row.s, row.mod,
              [id](const DecisionVector& z) { return formulas::wfg(id, z, k, m); });
    }

    std::sort(b.problems.begin(), b.problems.end(),
              [](const ProblemInstance& a, const ProblemInstance& c) { return a.name() < c.name(); });
    return std::move(b.problems);
}

std::size_t edit_distance(std::string_view a, std::string_view b)
{
    std::vector<std::size_t> prev(b.size() + 1);
    std::vector<std::size_t> cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j)
        prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

std::string lowercase(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

} // namespace

const std::vector<ProblemInstance>& registry_all()
{
    static const std::vector<ProblemInstance> registry = build_registry();
    return registry;
}

const ProblemInstance& registry_lookup(std::string_view name)
{
    const auto& all = registry_all();
    for (const ProblemInstance& p : all) {
        if (p.name() == name)
            return p;
    }
    std::vector<std::string> near;
    const std::string lowered = lowercase(name);
    for (const ProblemInstance& p : all) {
        if (lowercase(p.name()) == lowered || edit_distance(lowered, lowercase(p.name())) <= 2)
            near.push_back(p.name());
    }
    std::string msg = "unknown problem '" + std::string(name) + "'";
    if (!near.empty()) {
        msg += "; did you mean:";
        for (const std::string& s : near)
            msg += " " + s;
    }
    throw NotFoundError(msg);
}

std::vector<ProblemMeta> registry_list(const CategoryFilter& filter)
{
    std::vector<ProblemMeta> out;
    for (const ProblemInstance& p : registry_all()) {
        if (filter.matches(p.meta()))
            out.push_back(p.meta());
    }
    return out;
}

} // namespace momark
