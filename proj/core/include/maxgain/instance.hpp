#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxgain/types.hpp"

namespace maxgain {

/// Full assignment of a state to every element, indexed by element.
using Realization = std::vector<StateId>;

/// Utility values f(A, φ) for every subset A (as a bitmask) and realization index.
class UtilityTable {
public:
    UtilityTable() = default;
    UtilityTable(std::size_t num_elements, std::size_t num_realizations, double fill = 0.0);

    double operator()(ElementSet set, RealizationId r) const { return values_[index(set, r)]; }
    double& at(ElementSet set, RealizationId r) { return values_[index(set, r)]; }

    std::size_t num_elements() const { return num_elements_; }
    std::size_t num_realizations() const { return num_realizations_; }
    bool empty() const { return values_.empty(); }

    friend bool operator==(const UtilityTable&, const UtilityTable&) = default;

private:
    std::size_t index(ElementSet set, RealizationId r) const { return static_cast<std::size_t>(set) * num_realizations_ + r; }

    std::size_t num_elements_ = 0;
    std::size_t num_realizations_ = 0;
    std::vector<double> values_;
};

/// An explicitly enumerated problem: ground set V, state set Y, realizations Φ with
/// prior p, and a tabulated utility f. Immutable once constructed.
///
/// Construction validates: prior entries are non-negative and sum to 1 (within 1e-9),
/// realizations are distinct full maps, and utility values (when present) are
/// non-negative. A missing utility table is allowed so hypothesis classes can be
/// loaded before a coverage utility is attached.
class Instance {
public:
    Instance(std::vector<std::string> elements,
             std::vector<std::string> states,
             std::vector<Realization> realizations,
             std::vector<double> prior,
             UtilityTable utility = {});

    const std::vector<std::string>& elements() const { return elements_; }
    const std::vector<std::string>& states() const { return states_; }
    const std::vector<Realization>& realizations() const { return realizations_; }
    const std::vector<double>& prior() const { return prior_; }
    const UtilityTable& utility_table() const { return utility_; }

    std::size_t num_elements() const { return elements_.size(); }
    std::size_t num_states() const { return states_.size(); }
    std::size_t num_realizations() const { return realizations_.size(); }
    ElementSet ground_set() const { return full_set(elements_.size()); }

    bool has_utility() const { return !utility_.empty(); }
    /// f(A, φ_r). Throws InvalidInstance when no utility is attached.
    double utility(ElementSet set, RealizationId r) const;

    StateId state(RealizationId r, ElementId e) const { return realizations_[r][e]; }

    std::optional<ElementId> find_element(std::string_view name) const;
    std::optional<StateId> find_state(std::string_view name) const;

    Instance with_prior(std::vector<double> prior) const;
    Instance with_utility(UtilityTable utility) const;

private:
    std::vector<std::string> elements_;
    std::vector<std::string> states_;
    std::vector<Realization> realizations_;
    std::vector<double> prior_;
    UtilityTable utility_;
};

} // namespace maxgain
