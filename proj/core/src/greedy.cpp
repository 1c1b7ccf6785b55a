#include "maxgain/greedy.hpp"

#include <algorithm>
#include <limits>

#include "maxgain/expectation.hpp"

namespace maxgain {

namespace {

PolicyTree greedy_at(const Instance& instance, const PartialRealization& psi, const Numerics& numerics) {
    if (version_space_mass(instance, psi) <= 0.0) return PolicyTree::terminal();
    const auto gains = marginal_gains(instance, psi);
    double best = -std::numeric_limits<double>::infinity();
    for (ElementId v = 0; v < instance.num_elements(); ++v)
        if (!psi.observes(v)) best = std::max(best, gains[v]);
    if (!(best > numerics.tolerance)) return PolicyTree::terminal();
    ElementId pick = 0;
    while (psi.observes(pick) || gains[pick] < best - numerics.tolerance) ++pick;
    std::vector<PolicyTree> children;
    children.reserve(instance.num_states());
    for (StateId y = 0; y < instance.num_states(); ++y) children.push_back(greedy_at(instance, psi.extended(pick, y), numerics));
    return PolicyTree::select(pick, std::move(children));
}

} // namespace

PolicyTree build_greedy(const Instance& instance, TieBreak, const Numerics& numerics) {
    return greedy_at(instance, {}, numerics);
}

} // namespace maxgain
