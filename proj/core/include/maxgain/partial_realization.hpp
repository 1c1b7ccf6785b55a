#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxgain/instance.hpp"
#include "maxgain/types.hpp"

namespace maxgain {

struct Observation {
    ElementId element;
    StateId state;

    friend bool operator==(const Observation&, const Observation&) = default;
};

/// Observations made so far (ψ), kept in selection order. Each element appears at most once.
class PartialRealization {
public:
    PartialRealization() = default;

    /// The restriction φ|A, observed in ascending element order.
    static PartialRealization restriction(const Realization& realization, ElementSet set);

    /// Adds an observation; throws std::invalid_argument if the element is already observed.
    void observe(ElementId element, StateId state);
    PartialRealization extended(ElementId element, StateId state) const;

    bool observes(ElementId element) const { return contains(domain_, element); }
    std::optional<StateId> state_of(ElementId element) const;

    ElementSet domain() const { return domain_; }
    std::size_t size() const { return observations_.size(); }
    bool empty() const { return observations_.empty(); }
    const std::vector<Observation>& observations() const { return observations_; }

    /// φ ∼ ψ: φ agrees with every observation.
    bool consistent_with(const Realization& realization) const;
    /// ψ ⊆ other as partial maps (order ignored).
    bool is_subset_of(const PartialRealization& other) const;

    /// Same observations regardless of order.
    bool same_map(const PartialRealization& other) const;

private:
    std::vector<Observation> observations_;
    ElementSet domain_ = 0;
};

/// "{v1=0, v3=1}" using the instance's element and state names.
std::string describe(const Instance& instance, const PartialRealization& psi);

} // namespace maxgain
