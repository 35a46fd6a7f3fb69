#ifndef MOMARK_SOLVERS_HPP
#define MOMARK_SOLVERS_HPP

#include "momark/problems.hpp"
#include "momark/runtime.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace momark {

struct SolverDescriptor {
    std::string name;
    SolverKind kind = SolverKind::Stochastic;
    /// Shell command of an external solver; empty for builtins.
    std::string command;

    bool external() const { return !command.empty(); }
    bool operator==(const SolverDescriptor&) const = default;
};

/// Parses `name:kind[:cmd]`. Without a command the name must be a builtin.
SolverDescriptor parse_solver_descriptor(std::string_view text);
std::string format_solver_descriptor(const SolverDescriptor& d);

/// Ask-tell interface. The harness owns evaluation and fe counting.
class Solver {
public:
    virtual ~Solver() = default;

    /// Next point to evaluate, or nullopt when the solver has nothing more.
    virtual std::optional<DecisionVector> ask() = 0;
    virtual void tell(const DecisionVector& x, const ObjectiveVector& f) = 0;

    /// Called when the harness rejects the last asked point.
    virtual void reject(const std::string& reason) { (void)reason; }

    /// Called once after the budget is spent or the solver stopped.
    virtual void finish() {}
};

/// Seeded generator with a fixed mapping to doubles, so streams are
/// reproducible across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal by Box-Muller.
    double normal();

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

class RandomSearch final : public Solver {
public:
    RandomSearch(const ProblemMeta& meta, std::uint64_t seed);
    std::optional<DecisionVector> ask() override;
    void tell(const DecisionVector&, const ObjectiveVector&) override {}

private:
    DecisionVector lower_;
    DecisionVector upper_;
    Rng rng_;
};

/// Halton sequence (bases = first n primes) scaled to the box, starting at index 1.
class GridSweep final : public Solver {
public:
    explicit GridSweep(const ProblemMeta& meta);
    std::optional<DecisionVector> ask() override;
    void tell(const DecisionVector&, const ObjectiveVector&) override {}

private:
    DecisionVector lower_;
    DecisionVector upper_;
    std::vector<int> bases_;
    std::uint64_t index_ = 0;
};

/// (1+1) local search: Gaussian step around the incumbent, reflected into the
/// box, accepted unless the incumbent dominates it.
class DominanceHillclimber final : public Solver {
public:
    DominanceHillclimber(const ProblemMeta& meta, std::uint64_t seed, double step_scale = 0.1);
    std::optional<DecisionVector> ask() override;
    void tell(const DecisionVector& x, const ObjectiveVector& f) override;

private:
    DecisionVector lower_;
    DecisionVector upper_;
    Rng rng_;
    double step_scale_;
    std::optional<DecisionVector> incumbent_x_;
    ObjectiveVector incumbent_f_;
};

/// Radical inverse of index in the given base.
double radical_inverse(std::uint64_t index, int base);
std::vector<int> first_primes(int count);

/// Reflects v back into [lo, hi] (repeatedly for large overshoots).
double reflect_into(double v, double lo, double hi);

inline constexpr std::string_view builtin_names[] = {"random_search", "grid_sweep", "dominance_hillclimber"};
bool is_builtin(std::string_view name);
SolverKind builtin_kind(std::string_view name);

std::unique_ptr<Solver> make_builtin_solver(std::string_view name, const ProblemMeta& meta, std::uint64_t seed);

using EvaluationSink = std::function<void(const Evaluation&)>;

/// Asks, evaluates and tells up to `budget` times, stamping fe = 1, 2, ....
/// Returns the number of evaluations made. Out-of-bounds requests are passed
/// to Solver::reject and rethrown as DomainError.
FeCount run_solver(Solver& solver, const ProblemInstance& problem, FeCount budget, const EvaluationSink& sink);

EvaluationStream drive(Solver& solver, const ProblemInstance& problem, FeCount budget);

EvaluationStream random_search(const ProblemInstance& problem, FeCount budget, std::uint64_t seed);
EvaluationStream grid_sweep(const ProblemInstance& problem, FeCount budget);
EvaluationStream dominance_hillclimber(const ProblemInstance& problem, FeCount budget, std::uint64_t seed,
                                       double step_scale = 0.1);

// ---------------------------------------------------------------------------
// External solvers: line protocol over the child's stdin/stdout.
//
//   harness -> child   MOBENCH 1 <problem> <n> <m> <budget> <seed>
//                      L <l1> ... <ln>
//                      U <u1> ... <un>
//   child -> harness   X <x1> ... <xn>
//   harness -> child   F <f1> ... <fm>          (repeated)
//   harness -> child   STOP                      (after the budget-th F)
//   harness -> child   ERROR <message>           (rejected request)

struct ExternalOptions {
    std::chrono::milliseconds read_timeout{60000};
    std::chrono::milliseconds exit_grace{5000};
};

class ExternalSolver final : public Solver {
public:
    ExternalSolver(const std::string& command, const ProblemMeta& meta, FeCount budget, std::uint64_t seed,
                   ExternalOptions options = {});
    ~ExternalSolver() override;

    ExternalSolver(const ExternalSolver&) = delete;
    ExternalSolver& operator=(const ExternalSolver&) = delete;

    std::optional<DecisionVector> ask() override;
    void tell(const DecisionVector& x, const ObjectiveVector& f) override;
    void reject(const std::string& reason) override;
    void finish() override;

    /// True when the child closed its output before the budget was spent.
    bool truncated() const { return truncated_; }
    /// True when the child had to be killed after STOP.
    bool killed() const { return killed_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    void send(const std::string& line);
    std::optional<std::string> read_line();
    void terminate();

    std::string command_;
    int n_ = 0;
    ExternalOptions options_;
    int pid_ = -1;
    int to_child_ = -1;
    int from_child_ = -1;
    std::string buffer_;
    std::size_t line_no_ = 0;
    bool truncated_ = false;
    bool killed_ = false;
    bool finished_ = false;
    std::vector<std::string> warnings_;
};

/// Formats the fields of a protocol line: tag followed by shortest round-trip values.
std::string protocol_line(char tag, const Eigen::VectorXd& values);

EvaluationStream external_solver_session(const SolverDescriptor& descriptor, const ProblemInstance& problem,
                                         FeCount budget, std::uint64_t seed, ExternalOptions options = {});

} // namespace momark

#endif
