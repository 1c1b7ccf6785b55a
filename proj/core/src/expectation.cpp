#include "maxgain/expectation.hpp"

#include <map>

#include "maxgain/errors.hpp"

namespace maxgain {

ConditionalPrior version_space(const Instance& instance, const PartialRealization& psi) {
    ConditionalPrior vs;
    for (RealizationId r = 0; r < instance.num_realizations(); ++r) {
        double p = instance.prior()[r];
        if (p <= 0.0 || !psi.consistent_with(instance.realizations()[r])) continue;
        vs.support.push_back(r);
        vs.weights.push_back(p);
        vs.mass += p;
    }
    if (vs.support.empty()) throw EmptyVersionSpace("no positive-probability realization is consistent with " +
                                                    describe(instance, psi));
    for (double& w : vs.weights) w /= vs.mass;
    return vs;
}

double version_space_mass(const Instance& instance, const PartialRealization& psi) {
    double mass = 0.0;
    for (RealizationId r = 0; r < instance.num_realizations(); ++r)
        if (instance.prior()[r] > 0.0 && psi.consistent_with(instance.realizations()[r])) mass += instance.prior()[r];
    return mass;
}

double expected_utility(const Instance& instance, const PartialRealization& psi) {
    const auto vs = version_space(instance, psi);
    double total = 0.0;
    for (std::size_t i = 0; i < vs.support.size(); ++i)
        total += vs.weights[i] * instance.utility(psi.domain(), vs.support[i]);
    return total;
}

double marginal_gain(const Instance& instance, ElementId v, const PartialRealization& psi) {
    const auto vs = version_space(instance, psi);
    if (psi.observes(v)) return 0.0;
    const ElementSet dom = psi.domain();
    double total = 0.0;
    for (std::size_t i = 0; i < vs.support.size(); ++i)
        total += vs.weights[i] * (instance.utility(with(dom, v), vs.support[i]) - instance.utility(dom, vs.support[i]));
    return total;
}

std::vector<double> marginal_gains(const Instance& instance, const PartialRealization& psi) {
    const auto vs = version_space(instance, psi);
    const ElementSet dom = psi.domain();
    std::vector<double> gains(instance.num_elements(), 0.0);
    for (ElementId v = 0; v < instance.num_elements(); ++v) {
        if (psi.observes(v)) continue;
        for (std::size_t i = 0; i < vs.support.size(); ++i)
            gains[v] += vs.weights[i] *
                        (instance.utility(with(dom, v), vs.support[i]) - instance.utility(dom, vs.support[i]));
    }
    return gains;
}

std::vector<PartialRealization> positive_partial_realizations(const Instance& instance, std::size_t max_size) {
    std::vector<PartialRealization> out;
    const std::size_t subsets = std::size_t{1} << instance.num_elements();
    for (std::size_t a = 0; a < subsets; ++a) {
        const auto mask = static_cast<ElementSet>(a);
        if (cardinality(mask) > max_size) continue;
        std::map<std::vector<StateId>, bool> seen;
        for (RealizationId r = 0; r < instance.num_realizations(); ++r) {
            if (instance.prior()[r] <= 0.0) continue;
            std::vector<StateId> key;
            for (ElementId e = 0; e < instance.num_elements(); ++e)
                if (contains(mask, e)) key.push_back(instance.state(r, e));
            if (seen.emplace(key, true).second)
                out.push_back(PartialRealization::restriction(instance.realizations()[r], mask));
        }
    }
    return out;
}

MonotoneCheck check_adaptive_monotone(const Instance& instance, const Numerics& numerics) {
    MonotoneCheck check;
    for (const auto& psi : positive_partial_realizations(instance, instance.num_elements())) {
        const auto gains = marginal_gains(instance, psi);
        for (ElementId v = 0; v < instance.num_elements(); ++v) {
            if (psi.observes(v) || gains[v] >= -numerics.tolerance) continue;
            check.holds = false;
            check.witness = MonotoneViolation{psi, v, gains[v]};
            return check;
        }
    }
    return check;
}

SubmodularCheck check_adaptive_submodular(const Instance& instance, const Numerics& numerics) {
    SubmodularCheck check;
    std::map<std::pair<ElementSet, std::vector<StateId>>, std::vector<double>> cache;
    auto gains_of = [&](const PartialRealization& psi) -> const std::vector<double>& {
        std::vector<StateId> key;
        for (ElementId e = 0; e < instance.num_elements(); ++e)
            if (psi.observes(e)) key.push_back(*psi.state_of(e));
        auto [it, inserted] = cache.try_emplace({psi.domain(), std::move(key)});
        if (inserted) it->second = marginal_gains(instance, psi);
        return it->second;
    };

    for (const auto& larger : positive_partial_realizations(instance, instance.num_elements())) {
        const ElementSet dom = larger.domain();
        const auto& gains_larger = gains_of(larger);
        // Enumerate submasks of dom in ascending order.
        ElementSet sub = 0;
        while (true) {
            PartialRealization smaller;
            for (const auto& o : larger.observations())
                if (contains(sub, o.element)) smaller.observe(o.element, o.state);
            const auto& gains_smaller = gains_of(smaller);
            for (ElementId v = 0; v < instance.num_elements(); ++v) {
                if (contains(dom, v)) continue;
                if (gains_smaller[v] >= gains_larger[v] - numerics.tolerance) continue;
                check.holds = false;
                check.witness = SubmodularViolation{smaller, larger, v, gains_smaller[v], gains_larger[v]};
                return check;
            }
            if (sub == dom) break;
            sub = (sub - dom) & dom;
        }
    }
    return check;
}

} // namespace maxgain
