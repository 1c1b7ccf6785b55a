#include "maxgain/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "maxgain/errors.hpp"
#include "maxgain/expectation.hpp"
#include "maxgain/partial_realization.hpp"

namespace maxgain {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > kSaturated / b ? kSaturated : a * b;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    std::uint64_t out = 1;
    for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

/// Upper estimate of distinct positive-mass ψ with |dom ψ| ≤ depth.
std::uint64_t context_estimate(const Instance& instance, std::size_t depth) {
    std::uint64_t positive = 0;
    for (double p : instance.prior())
        if (p > 0.0) ++positive;
    std::uint64_t total = 0;
    std::uint64_t states_power = 1;
    for (std::size_t j = 0; j <= std::min(depth, instance.num_elements()); ++j) {
        total = saturating_add(total, saturating_mul(binomial(instance.num_elements(), j), std::min(states_power, positive)));
        states_power = saturating_mul(states_power, instance.num_states());
    }
    return total;
}

struct ContextKey {
    ElementSet domain;
    std::vector<StateId> states;
    int budget;

    auto operator<=>(const ContextKey&) const = default;
};

ContextKey key_of(const PartialRealization& psi, std::size_t num_elements, int budget) {
    ContextKey key{psi.domain(), {}, budget};
    for (ElementId e = 0; e < num_elements; ++e)
        if (psi.observes(e)) key.states.push_back(*psi.state_of(e));
    return key;
}

struct Solved {
    double value;
    PolicyTree policy;
};

class BudgetSolver {
public:
    BudgetSolver(const Instance& instance, const Numerics& numerics) : instance_(instance), numerics_(numerics) {}

    const Solved& solve(const PartialRealization& psi, int budget) {
        auto key = key_of(psi, instance_.num_elements(), budget);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Solved best{expected_utility(instance_, psi), PolicyTree::terminal()};
        if (budget > 0) {
            const auto vs = version_space(instance_, psi);
            for (ElementId v = 0; v < instance_.num_elements(); ++v) {
                if (psi.observes(v)) continue;
                double value = 0.0;
                std::vector<PolicyTree> children(instance_.num_states());
                for (StateId y = 0; y < instance_.num_states(); ++y) {
                    double weight = 0.0;
                    for (std::size_t i = 0; i < vs.support.size(); ++i)
                        if (instance_.state(vs.support[i], v) == y) weight += vs.weights[i];
                    if (weight <= 0.0) continue;
                    const auto& sub = solve(psi.extended(v, y), budget - 1);
                    value += weight * sub.value;
                    children[y] = sub.policy;
                }
                if (value > best.value + numerics_.tolerance) best = {value, PolicyTree::select(v, std::move(children))};
            }
        }
        return memo_.emplace(std::move(key), std::move(best)).first->second;
    }

    std::uint64_t explored() const { return memo_.size(); }

private:
    const Instance& instance_;
    Numerics numerics_;
    std::map<ContextKey, Solved> memo_;
};

class CoverageSolver {
public:
    CoverageSolver(const Instance& instance, double q, CoveragePruning pruning, const Numerics& numerics)
        : instance_(instance), q_(q), pruning_(pruning), numerics_(numerics) {}

    const Solved& solve(const PartialRealization& psi) {
        auto key = key_of(psi, instance_.num_elements(), 0);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const auto vs = version_space(instance_, psi);
        const ElementSet dom = psi.domain();
        const bool covered = std::all_of(vs.support.begin(), vs.support.end(), [&](RealizationId r) {
            return instance_.utility(dom, r) >= q_ - numerics_.tolerance;
        });
        Solved best{covered ? 0.0 : std::numeric_limits<double>::infinity(), PolicyTree::terminal()};
        if (!covered) {
            for (ElementId v : candidates(psi, vs)) {
                double value = 1.0;
                std::vector<PolicyTree> children(instance_.num_states());
                for (StateId y = 0; y < instance_.num_states(); ++y) {
                    double weight = 0.0;
                    for (std::size_t i = 0; i < vs.support.size(); ++i)
                        if (instance_.state(vs.support[i], v) == y) weight += vs.weights[i];
                    if (weight <= 0.0) continue;
                    const auto& sub = solve(psi.extended(v, y));
                    value += weight * sub.value;
                    children[y] = sub.policy;
                }
                if (value < best.value - numerics_.tolerance)
                    best = {value, PolicyTree::select(v, std::move(children))};
            }
        }
        return memo_.emplace(std::move(key), std::move(best)).first->second;
    }

    std::uint64_t explored() const { return memo_.size(); }

private:
    std::vector<ElementId> candidates(const PartialRealization& psi, const ConditionalPrior& vs) const {
        std::vector<ElementId> all;
        std::vector<ElementId> useful;
        const ElementSet dom = psi.domain();
        for (ElementId v = 0; v < instance_.num_elements(); ++v) {
            if (psi.observes(v)) continue;
            all.push_back(v);
            const StateId first = instance_.state(vs.support.front(), v);
            const bool splits = std::any_of(vs.support.begin(), vs.support.end(),
                                            [&](RealizationId r) { return instance_.state(r, v) != first; });
            const bool raises = std::any_of(vs.support.begin(), vs.support.end(), [&](RealizationId r) {
                return instance_.utility(with(dom, v), r) > instance_.utility(dom, r) + numerics_.tolerance;
            });
            if (splits || raises) useful.push_back(v);
        }
        if (pruning_ == CoveragePruning::Unpruned || useful.empty()) return all;
        return useful;
    }

    const Instance& instance_;
    double q_;
    CoveragePruning pruning_;
    Numerics numerics_;
    std::map<ContextKey, Solved> memo_;
};

void check_estimate(const Instance& instance, std::size_t depth, const Numerics& numerics) {
    const auto estimate = context_estimate(instance, depth);
    if (estimate > numerics.enumeration_budget)
        throw EnumerationBudgetExceeded("exact search would visit up to " + std::to_string(estimate) +
                                        " states, over the budget of " + std::to_string(numerics.enumeration_budget));
}

} // namespace

OptimalPolicy optimal_budget(const Instance& instance, int k, const Numerics& numerics) {
    if (k < 0) throw InvalidParams("height bound must be non-negative");
    const int depth = std::min<int>(k, static_cast<int>(instance.num_elements()));
    check_estimate(instance, static_cast<std::size_t>(depth), numerics);
    BudgetSolver solver(instance, numerics);
    const auto& root = solver.solve({}, depth);
    return {root.policy, root.value, solver.explored()};
}

OptimalPolicy optimal_coverage(const Instance& instance, double q, CoveragePruning pruning, const Numerics& numerics) {
    for (RealizationId r = 0; r < instance.num_realizations(); ++r)
        if (instance.prior()[r] > 0.0 && instance.utility(instance.ground_set(), r) < q - numerics.tolerance)
            throw CoverageUnreachable("realization " + std::to_string(r) + " stays below " + std::to_string(q) +
                                      " even after selecting every element");
    check_estimate(instance, instance.num_elements(), numerics);
    CoverageSolver solver(instance, q, pruning, numerics);
    const auto& root = solver.solve({});
    return {root.policy, root.value, solver.explored()};
}

std::uint64_t policy_count(std::size_t available, std::size_t num_states, int k) {
    if (k <= 0 || available == 0) return 1;
    const std::uint64_t child = policy_count(available - 1, num_states, k - 1);
    std::uint64_t product = 1;
    for (std::size_t y = 0; y < num_states; ++y) product = saturating_mul(product, child);
    return saturating_add(1, saturating_mul(available, product));
}

namespace {

class PolicyEnumerator {
public:
    PolicyEnumerator(std::size_t num_elements, std::size_t num_states)
        : num_elements_(num_elements), num_states_(num_states) {}

    // All trees of height ≤ k over `available`, shared by (available, k).
    const std::vector<PolicyTree>& trees(ElementSet available, int k) {
        auto key = std::make_pair(available, k);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<PolicyTree> out{PolicyTree::terminal()};
        if (k > 0)
            for_each_rooted(available, k, [&](const PolicyTree& t) { out.push_back(t); });
        return memo_.emplace(key, std::move(out)).first->second;
    }

    // Trees of height ≤ k over `available` whose root selects, in canonical order.
    template <typename Visit>
    void for_each_rooted(ElementSet available, int k, Visit&& visit) {
        for (ElementId v = 0; v < num_elements_; ++v) {
            if (!contains(available, v)) continue;
            const auto& options = trees(without(available, v), k - 1);
            std::vector<std::size_t> digits(num_states_, 0);
            while (true) {
                std::vector<PolicyTree> children;
                children.reserve(num_states_);
                for (std::size_t d : digits) children.push_back(options[d]);
                visit(PolicyTree::select(v, std::move(children)));
                std::size_t pos = 0;
                while (pos < num_states_ && ++digits[pos] == options.size()) digits[pos++] = 0;
                if (pos == num_states_) break;
            }
        }
    }

private:
    std::size_t num_elements_;
    std::size_t num_states_;
    std::map<std::pair<ElementSet, int>, std::vector<PolicyTree>> memo_;
};

} // namespace

void enumerate_policies(const Instance& instance, int k, ElementSet excluded,
                        const std::function<void(const PolicyTree&)>& visit, const Numerics& numerics) {
    if (k < 0) throw InvalidParams("height bound must be non-negative");
    const ElementSet available = instance.ground_set() & ~excluded;
    const auto count = policy_count(cardinality(available), instance.num_states(), k);
    if (count > numerics.enumeration_budget)
        throw EnumerationBudgetExceeded("enumeration would produce " + std::to_string(count) +
                                        " policies, over the budget of " +
                                        std::to_string(numerics.enumeration_budget));
    visit(PolicyTree::terminal());
    if (k == 0) return;
    PolicyEnumerator enumerator(instance.num_elements(), instance.num_states());
    enumerator.for_each_rooted(available, k, visit);
}

std::vector<PolicyTree> all_policies(const Instance& instance, int k, ElementSet excluded, const Numerics& numerics) {
    std::vector<PolicyTree> out;
    enumerate_policies(instance, k, excluded, [&](const PolicyTree& t) { out.push_back(t); }, numerics);
    return out;
}

} // namespace maxgain
