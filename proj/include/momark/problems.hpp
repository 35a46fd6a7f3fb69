#ifndef MOMARK_PROBLEMS_HPP
#define MOMARK_PROBLEMS_HPP

#include "momark/core.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace momark {

enum class DimClass { Low, High };
enum class Separability { Separable, NonSeparable, Mixed };
enum class Modality { Unimodal, Multimodal, Mixed };

// Short tags as printed by `list-problems`: L/H, S/NS/x, U/M/x.
std::string_view to_tag(DimClass d);
std::string_view to_tag(Separability s);
std::string_view to_tag(Modality m);

struct ProblemMeta {
    std::string name;
    int n = 0;
    int m = 0;
    DecisionVector lower;
    DecisionVector upper;
    DimClass dim_class = DimClass::Low;
    Separability separability = Separability::Mixed;
    Modality modality = Modality::Mixed;
    /// Member of the mandatory core set.
    bool core = true;
};

using ObjectiveFunction = std::function<ObjectiveVector(const DecisionVector&)>;

/// Immutable problem: metadata plus a pure evaluator. evaluate() validates the
/// input against the box and never clips.
class ProblemInstance {
public:
    ProblemInstance(ProblemMeta meta, ObjectiveFunction f);

    const ProblemMeta& meta() const { return meta_; }
    const std::string& name() const { return meta_.name; }
    int n() const { return meta_.n; }
    int m() const { return meta_.m; }

    ObjectiveVector evaluate(const DecisionVector& x) const;

    /// True when x has length n and lies inside [lower, upper].
    bool contains(const DecisionVector& x) const;

private:
    ProblemMeta meta_;
    ObjectiveFunction f_;
};

/// Conjunction of optional category constraints. An unset field matches all.
struct CategoryFilter {
    std::optional<DimClass> dim_class;
    std::optional<Separability> separability;
    std::optional<Modality> modality;
    std::optional<int> m;
    bool core_only = false;

    bool matches(const ProblemMeta& meta) const;
};

/// Case-sensitive lookup. Throws NotFoundError listing near matches.
const ProblemInstance& registry_lookup(std::string_view name);

/// Registered metas matching the filter, sorted by name.
std::vector<ProblemMeta> registry_list(const CategoryFilter& filter = {});

const std::vector<ProblemInstance>& registry_all();

} // namespace momark

#endif
