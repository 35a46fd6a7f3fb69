#include "momark/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace momark {

double Rng::normal()
{
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    double u1 = uniform();
    while (u1 <= 0.0)
        u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    return r * std::cos(theta);
}

double radical_inverse(std::uint64_t index, int base)
{
    const double inv = 1.0 / base;
    double scale = inv;
    double out = 0.0;
    while (index > 0) {
        out += static_cast<double>(index % static_cast<std::uint64_t>(base)) * scale;
        index /= static_cast<std::uint64_t>(base);
        scale *= inv;
    }
    return out;
}

std::vector<int> first_primes(int count)
{
    std::vector<int> primes;
    for (int candidate = 2; static_cast<int>(primes.size()) < count; ++candidate) {
        bool prime = true;
        for (int p : primes) {
            if (p * p > candidate)
                break;
            if (candidate % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime)
            primes.push_back(candidate);
    }
    return primes;
}

double reflect_into(double v, double lo, double hi)
{
    const double width = hi - lo;
    if (!(width > 0.0))
        return lo;
    const double period = 2.0 * width;
    double t = std::fmod(v - lo, period);
    if (t < 0.0)
        t += period;
    if (t > width)
        t = period - t;
    return std::clamp(lo + t, lo, hi);
}

RandomSearch::RandomSearch(const ProblemMeta& meta, std::uint64_t seed)
    : lower_(meta.lower), upper_(meta.upper), rng_(seed)
{
}

std::optional<DecisionVector> RandomSearch::ask()
{
    DecisionVector x(lower_.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
        x(i) = std::min(upper_(i), lower_(i) + rng_.uniform() * (upper_(i) - lower_(i)));
    return x;
}

GridSweep::GridSweep(const ProblemMeta& meta)
    : lower_(meta.lower), upper_(meta.upper), bases_(first_primes(meta.n))
{
}

std::optional<DecisionVector> GridSweep::ask()
{
    ++index_;
    DecisionVector x(lower_.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double h = radical_inverse(index_, bases_[static_cast<std::size_t>(i)]);
        x(i) = std::min(upper_(i), lower_(i) + h * (upper_(i) - lower_(i)));
    }
    return x;
}

DominanceHillclimber::DominanceHillclimber(const ProblemMeta& meta, std::uint64_t seed, double step_scale)
    : lower_(meta.lower), upper_(meta.upper), rng_(seed), step_scale_(step_scale)
{
    if (!(step_scale > 0.0 && step_scale <= 1.0))
        throw ConfigError("dominance_hillclimber: step_scale must lie in (0, 1]");
}

std::optional<DecisionVector> DominanceHillclimber::ask()
{
    DecisionVector x(lower_.size());
    if (!incumbent_x_) {
        for (Eigen::Index i = 0; i < x.size(); ++i)
            x(i) = std::min(upper_(i), lower_(i) + rng_.uniform() * (upper_(i) - lower_(i)));
        return x;
    }
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double step = step_scale_ * (upper_(i) - lower_(i)) * rng_.normal();
        x(i) = reflect_into((*incumbent_x_)(i) + step, lower_(i), upper_(i));
    }
    return x;
}

void DominanceHillclimber::tell(const DecisionVector& x, const ObjectiveVector& f)
{
    if (!incumbent_x_ || !dominates(incumbent_f_, f)) {
        incumbent_x_ = x;
        incumbent_f_ = f;
    }
}

bool is_builtin(std::string_view name)
{
    return std::find(std::begin(builtin_names), std::end(builtin_names), name) != std::end(builtin_names);
}

SolverKind builtin_kind(std::string_view name)
{
    if (name == "grid_sweep")
        return SolverKind::Deterministic;
    if (is_builtin(name))
        return SolverKind::Stochastic;
    throw NotFoundError("unknown builtin solver '" + std::string(name)
                        + "' (expected random_search, grid_sweep, dominance_hillclimber)");
}

std::unique_ptr<Solver> make_builtin_solver(std::string_view name, const ProblemMeta& meta, std::uint64_t seed)
{
    if (name == "random_search")
        return std::make_unique<RandomSearch>(meta, seed);
    if (name == "grid_sweep")
        return std::make_unique<GridSweep>(meta);
    if (name == "dominance_hillclimber")
        return std::make_unique<DominanceHillclimber>(meta, seed);
    builtin_kind(name);
    return nullptr;
}

SolverDescriptor parse_solver_descriptor(std::string_view text)
{
    const std::size_t first = text.find(':');
    if (first == std::string_view::npos)
        throw ConfigError("solver '" + std::string(text) + "': expected name:kind[:cmd]");
    SolverDescriptor d;
    d.name = std::string(text.substr(0, first));
    const std::string_view rest = text.substr(first + 1);
    const std::size_t second = rest.find(':');
    d.kind = parse_solver_kind(rest.substr(0, second));
    if (second != std::string_view::npos)
        d.command = std::string(rest.substr(second + 1));
    if (d.name.empty() || d.name.find_first_of(",/\\ \t") != std::string::npos)
        throw ConfigError("solver name '" + d.name + "' must be non-empty without separators");
    if (!d.external()) {
        if (builtin_kind(d.name) != d.kind)
            throw ConfigError("builtin solver " + d.name + " is " + std::string(to_string(builtin_kind(d.name))));
    }
    return d;
}

std::string format_solver_descriptor(const SolverDescriptor& d)
{
    std::string out = d.name + ":" + std::string(to_string(d.kind));
    if (d.external())
        out += ":" + d.command;
    return out;
}

FeCount run_solver(Solver& solver, const ProblemInstance& problem, FeCount budget, const EvaluationSink& sink)
{
    FeCount fe = 0;
    while (fe < budget) {
        std::optional<DecisionVector> x = solver.ask();
        if (!x)
            break;
        ObjectiveVector f;
        try {
            f = problem.evaluate(*x);
        } catch (const DomainError& e) {
            solver.reject(e.what());
            throw;
        }
        ++fe;
        solver.tell(*x, f);
        if (sink)
            sink(Evaluation{fe, std::move(*x), std::move(f)});
    }
    solver.finish();
    return fe;
}

EvaluationStream drive(Solver& solver, const ProblemInstance& problem, FeCount budget)
{
    EvaluationStream stream;
    stream.reserve(static_cast<std::size_t>(std::max<FeCount>(budget, 0)));
    run_solver(solver, problem, budget, [&](const Evaluation& e) { stream.push_back(e); });
    return stream;
}

EvaluationStream random_search(const ProblemInstance& problem, FeCount budget, std::uint64_t seed)
{
    RandomSearch s(problem.meta(), seed);
    return drive(s, problem, budget);
}

EvaluationStream grid_sweep(const ProblemInstance& problem, FeCount budget)
{
    GridSweep s(problem.meta());
    return drive(s, problem, budget);
}

EvaluationStream dominance_hillclimber(const ProblemInstance& problem, FeCount budget, std::uint64_t seed,
                                       double step_scale)
{
    DominanceHillclimber s(problem.meta(), seed, step_scale);
    return drive(s, problem, budget);
}

} // namespace momark
