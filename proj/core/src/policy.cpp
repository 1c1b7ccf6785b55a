#include "maxgain/policy.hpp"

#include <algorithm>
#include <cmath>

#include "maxgain/errors.hpp"
#include "maxgain/expectation.hpp"

namespace maxgain {

ThresholdSubPolicy threshold_subpolicy(PolicyTree base, double tau, double rho) {
    if (!(tau >= 0.0)) throw InvalidParams("threshold must be non-negative");
    if (!(rho >= 0.0 && rho <= 1.0)) throw InvalidParams("tie-break probability must lie in [0, 1]");
    return ThresholdSubPolicy{std::move(base), tau, rho};
}

bool passes_threshold(double max_gain, double tau, TerminationRule rule, const Numerics& numerics) {
    if (std::isinf(tau)) return false;
    if (rule == TerminationRule::Strict) return max_gain >= tau - numerics.tolerance;
    return max_gain > tau + numerics.tolerance;
}

namespace {

PolicyTree truncate_at(const Instance& instance, const PolicyTree& base, const PartialRealization& psi, double tau,
                       TerminationRule rule, const Numerics& numerics) {
    if (base.is_terminal() || version_space_mass(instance, psi) <= 0.0) return PolicyTree::terminal();
    const auto gains = marginal_gains(instance, psi);
    double best = 0.0;
    for (ElementId v = 0; v < instance.num_elements(); ++v)
        if (!psi.observes(v)) best = std::max(best, gains[v]);
    if (!passes_threshold(best, tau, rule, numerics)) return PolicyTree::terminal();
    const ElementId e = base.element();
    std::vector<PolicyTree> children;
    children.reserve(instance.num_states());
    for (StateId y = 0; y < instance.num_states(); ++y)
        children.push_back(truncate_at(instance, base.child(y), psi.extended(e, y), tau, rule, numerics));
    return PolicyTree::select(e, std::move(children));
}

} // namespace

PolicyTree truncate(const Instance& instance, const PolicyTree& base, double tau, TerminationRule rule,
                    const Numerics& numerics) {
    validate(instance, base);
    return truncate_at(instance, base, {}, tau, rule, numerics);
}

std::vector<WeightedTree> branches(const Instance& instance, const Policy& policy, const Numerics& numerics) {
    if (const auto* tree = std::get_if<PolicyTree>(&policy)) {
        validate(instance, *tree);
        return {{1.0, *tree}};
    }
    const auto& tsp = std::get<ThresholdSubPolicy>(policy);
    std::vector<WeightedTree> out;
    if (tsp.rho > 0.0) out.push_back({tsp.rho, truncate(instance, tsp.base, tsp.tau, TerminationRule::Strict, numerics)});
    if (tsp.rho < 1.0) {
        auto tree = truncate(instance, tsp.base, tsp.tau, TerminationRule::NonStrict, numerics);
        if (!out.empty() && out.front().tree == tree)
            out.front().weight = 1.0;
        else
            out.push_back({1.0 - tsp.rho, std::move(tree)});
    }
    return out;
}

std::size_t height(const Instance& instance, const Policy& policy, const Numerics& numerics) {
    std::size_t h = 0;
    for (const auto& b : branches(instance, policy, numerics)) h = std::max(h, b.tree.height());
    return h;
}

std::vector<RunTrace> run(const Instance& instance, const Policy& policy, RealizationId r, const Numerics& numerics) {
    if (r >= instance.num_realizations()) throw InvalidParams("realization index out of range");
    const auto& phi = instance.realizations()[r];
    std::vector<RunTrace> traces;
    for (const auto& b : branches(instance, policy, numerics)) {
        auto selected = selections(b.tree, phi);
        auto same = std::find_if(traces.begin(), traces.end(), [&](const RunTrace& t) { return t.selected == selected; });
        if (same != traces.end()) {
            same->weight += b.weight;
            continue;
        }
        PartialRealization observed;
        for (ElementId e : selected) observed.observe(e, phi[e]);
        traces.push_back({std::move(selected), std::move(observed), b.weight});
    }
    std::sort(traces.begin(), traces.end(), [](const RunTrace& a, const RunTrace& b) { return a.selected < b.selected; });
    return traces;
}

bool same_traces(const std::vector<RunTrace>& a, const std::vector<RunTrace>& b, double tolerance) {
    auto weighted = [tolerance](const std::vector<RunTrace>& traces) {
        std::vector<const RunTrace*> out;
        for (const auto& t : traces)
            if (t.weight > tolerance) out.push_back(&t);
        return out;
    };
    const auto x = weighted(a);
    const auto y = weighted(b);
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i]->selected != y[i]->selected) return false;
        if (std::abs(x[i]->weight - y[i]->weight) > tolerance) return false;
    }
    return true;
}

} // namespace maxgain
