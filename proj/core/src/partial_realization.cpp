#include "maxgain/partial_realization.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxgain {

PartialRealization PartialRealization::restriction(const Realization& realization, ElementSet set) {
    PartialRealization psi;
    for (ElementId e = 0; e < realization.size(); ++e)
        if (contains(set, e)) psi.observe(e, realization[e]);
    return psi;
}

void PartialRealization::observe(ElementId element, StateId state) {
    if (element >= kMaxElements) throw std::invalid_argument("element index out of range");
    if (observes(element)) throw std::invalid_argument("element observed twice");
    observations_.push_back({element, state});
    domain_ = with(domain_, element);
}

PartialRealization PartialRealization::extended(ElementId element, StateId state) const {
    PartialRealization copy = *this;
    copy.observe(element, state);
    return copy;
}

std::optional<StateId> PartialRealization::state_of(ElementId element) const {
    for (const auto& o : observations_)
        if (o.element == element) return o.state;
    return std::nullopt;
}

bool PartialRealization::consistent_with(const Realization& realization) const {
    return std::all_of(observations_.begin(), observations_.end(), [&](const Observation& o) {
        return o.element < realization.size() && realization[o.element] == o.state;
    });
}

bool PartialRealization::is_subset_of(const PartialRealization& other) const {
    if ((domain_ & ~other.domain_) != 0) return false;
    return std::all_of(observations_.begin(), observations_.end(),
                       [&](const Observation& o) { return other.state_of(o.element) == o.state; });
}

bool PartialRealization::same_map(const PartialRealization& other) const {
    return domain_ == other.domain_ && is_subset_of(other);
}

std::string describe(const Instance& instance, const PartialRealization& psi) {
    std::string out = "{";
    for (std::size_t i = 0; i < psi.observations().size(); ++i) {
        const auto& o = psi.observations()[i];
        if (i > 0) out += ", ";
        out += instance.elements()[o.element] + "=" + instance.states()[o.state];
    }
    return out + "}";
}

} // namespace maxgain
