#include "maxgain/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "maxgain/errors.hpp"
#include "maxgain/expectation.hpp"

namespace maxgain {

PolicyProfile::PolicyProfile(const Instance& instance, const PolicyTree& base, const Numerics& numerics)
    : numerics_(numerics) {
    validate(instance, base);
    std::function<void(const PolicyTree&, const PartialRealization&, double)> visit =
        [&](const PolicyTree& node, const PartialRealization& psi, double ancestor_min) {
            const double mass = version_space_mass(instance, psi);
            if (mass <= 0.0) return;
            ProfileNode entry;
            entry.psi = psi;
            entry.mass = mass;
            entry.gains = marginal_gains(instance, psi);
            bool any_remaining = false;
            for (ElementId v = 0; v < instance.num_elements(); ++v) {
                if (psi.observes(v)) continue;
                entry.max_remaining_gain =
                    any_remaining ? std::max(entry.max_remaining_gain, entry.gains[v]) : entry.gains[v];
                any_remaining = true;
            }
            entry.ancestor_min_gain = ancestor_min;
            if (!node.is_terminal()) entry.selected = node.element();
            const double below = std::min(ancestor_min, entry.max_remaining_gain);
            nodes_.push_back(std::move(entry));
            if (node.is_terminal()) return;
            for (StateId y = 0; y < instance.num_states(); ++y)
                visit(node.child(y), psi.extended(node.element(), y), below);
        };
    visit(base, {}, std::numeric_limits<double>::infinity());
}

bool PolicyProfile::reached(const ProfileNode& node, double tau, TerminationRule rule) const {
    if (std::isinf(node.ancestor_min_gain)) return true;
    return passes_threshold(node.ancestor_min_gain, tau, rule, numerics_);
}

bool PolicyProfile::selects(const ProfileNode& node, double tau, TerminationRule rule) const {
    return node.selected && reached(node, tau, rule) && passes_threshold(node.max_remaining_gain, tau, rule, numerics_);
}

bool PolicyProfile::terminates(const ProfileNode& node, double tau, TerminationRule rule) const {
    return reached(node, tau, rule) && !selects(node, tau, rule);
}

double PolicyProfile::expected_cost(double tau, TerminationRule rule) const {
    double total = 0.0;
    for (const auto& node : nodes_)
        if (selects(node, tau, rule)) total += node.mass;
    return total;
}

double PolicyProfile::expected_cost() const {
    double total = 0.0;
    for (const auto& node : nodes_)
        if (node.selected) total += node.mass;
    return total;
}

std::vector<double> PolicyProfile::candidate_thresholds() const {
    std::vector<double> values;
    for (const auto& node : nodes_) {
        if (!node.selected) continue;
        for (ElementId v = 0; v < node.gains.size(); ++v)
            if (!node.psi.observes(v)) values.push_back(std::max(node.gains[v], 0.0));
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    std::vector<double> classes;
    double last = 0.0;
    for (double g : values) {
        if (classes.empty() || g < last - numerics_.tolerance) classes.push_back(g);
        last = g;
    }
    return classes;
}

ThresholdPair find_threshold_pair(const Instance& instance, const PolicyTree& base, int budget,
                                  const Numerics& numerics) {
    return find_threshold_pair(PolicyProfile(instance, base, numerics), base, budget);
}

ThresholdPair find_threshold_pair(const PolicyProfile& profile, const PolicyTree& base, int budget) {
    const double tol = profile.numerics().tolerance;
    if (budget < 0) throw InvalidParams("budget must be non-negative");
    const double full = profile.expected_cost();
    if (budget > full + tol)
        throw BudgetExceedsCost("budget " + std::to_string(budget) + " exceeds the expected cost " +
                                std::to_string(full) + " of the base policy");

    const auto candidates = profile.candidate_thresholds();
    const double sentinel = (candidates.empty() ? 0.0 : candidates.front()) + 1.0;
    if (budget == 0) return {sentinel, 0.0, threshold_subpolicy(base, sentinel, 0.0)};

    const double target = budget;
    double previous = 0.0;
    for (double tau : candidates) {
        const double mu = profile.expected_cost(tau, TerminationRule::Strict);
        if (mu <= previous + tol) continue;
        if (target <= mu + tol) {
            const double lower = profile.expected_cost(tau, TerminationRule::NonStrict);
            double rho = mu - lower > tol ? (target - lower) / (mu - lower) : 1.0;
            rho = std::clamp(rho, 0.0, 1.0);
            return {tau, rho, threshold_subpolicy(base, tau, rho)};
        }
        previous = mu;
    }
    throw BudgetExceedsCost("budget " + std::to_string(budget) + " is not reachable with a non-negative threshold");
}

const PolicyTree& base_of(const Policy& policy) {
    if (const auto* tree = std::get_if<PolicyTree>(&policy)) return *tree;
    return std::get<ThresholdSubPolicy>(policy).base;
}

} // namespace maxgain
