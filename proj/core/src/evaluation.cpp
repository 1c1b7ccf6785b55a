#include "maxgain/evaluation.hpp"

#include "maxgain/expectation.hpp"

namespace maxgain {

namespace {

ElementSet selected_set(const PolicyTree& tree, const Realization& phi) {
    ElementSet set = 0;
    for (ElementId e : selections(tree, phi)) set = with(set, e);
    return set;
}

} // namespace

double f_avg(const Instance& instance, const Policy& policy, const Numerics& numerics) {
    double total = 0.0;
    for (const auto& b : branches(instance, policy, numerics))
        for (RealizationId r = 0; r < instance.num_realizations(); ++r) {
            const double p = instance.prior()[r];
            if (p <= 0.0) continue;
            total += b.weight * p * instance.utility(selected_set(b.tree, instance.realizations()[r]), r);
        }
    return total;
}

double c_avg(const Instance& instance, const Policy& policy, const Numerics& numerics) {
    double total = 0.0;
    for (const auto& b : branches(instance, policy, numerics))
        for (RealizationId r = 0; r < instance.num_realizations(); ++r) {
            const double p = instance.prior()[r];
            if (p <= 0.0) continue;
            total += b.weight * p * static_cast<double>(selections(b.tree, instance.realizations()[r]).size());
        }
    return total;
}

double policy_gain(const Instance& instance, const Policy& policy, const PartialRealization& psi,
                   const Numerics& numerics) {
    const auto vs = version_space(instance, psi);
    const ElementSet dom = psi.domain();
    double total = 0.0;
    for (const auto& b : branches(instance, policy, numerics))
        for (std::size_t i = 0; i < vs.support.size(); ++i) {
            const RealizationId r = vs.support[i];
            const ElementSet chosen = selected_set(b.tree, instance.realizations()[r]);
            total += b.weight * vs.weights[i] * (instance.utility(chosen | dom, r) - instance.utility(dom, r));
        }
    return total;
}

bool covers(const Instance& instance, const PolicyTree& policy, double q, const Numerics& numerics) {
    validate(instance, policy);
    for (RealizationId r = 0; r < instance.num_realizations(); ++r) {
        if (instance.prior()[r] <= 0.0) continue;
        if (instance.utility(selected_set(policy, instance.realizations()[r]), r) < q - numerics.tolerance) return false;
    }
    return true;
}

} // namespace maxgain
