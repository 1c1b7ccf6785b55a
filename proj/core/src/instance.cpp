#include "maxgain/instance.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "maxgain/errors.hpp"

namespace maxgain {

UtilityTable::UtilityTable(std::size_t num_elements, std::size_t num_realizations, double fill)
    : num_elements_(num_elements), num_realizations_(num_realizations) {
    if (num_elements > kMaxElements)
        throw InvalidInstance("at most " + std::to_string(kMaxElements) + " elements are supported");
    values_.assign((std::size_t{1} << num_elements) * num_realizations, fill);
}

Instance::Instance(std::vector<std::string> elements, std::vector<std::string> states,
                   std::vector<Realization> realizations, std::vector<double> prior, UtilityTable utility)
    : elements_(std::move(elements)),
      states_(std::move(states)),
      realizations_(std::move(realizations)),
      prior_(std::move(prior)),
      utility_(std::move(utility)) {
    if (elements_.size() > kMaxElements)
        throw InvalidInstance("at most " + std::to_string(kMaxElements) + " elements are supported");
    if (states_.empty()) throw InvalidInstance("state set is empty");
    if (realizations_.empty()) throw InvalidInstance("realization list is empty");
    if (prior_.size() != realizations_.size())
        throw InvalidInstance("prior has " + std::to_string(prior_.size()) + " entries for " +
                              std::to_string(realizations_.size()) + " realizations");
    std::set<std::string> names(elements_.begin(), elements_.end());
    if (names.size() != elements_.size()) throw InvalidInstance("duplicate element name");
    std::set<std::string> state_names(states_.begin(), states_.end());
    if (state_names.size() != states_.size()) throw InvalidInstance("duplicate state name");

    double total = 0.0;
    for (double p : prior_) {
        if (!(p >= 0.0) || !std::isfinite(p)) throw InvalidInstance("prior entries must be non-negative");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) throw InvalidInstance("prior sums to " + std::to_string(total) + ", not 1");

    std::set<Realization> seen;
    for (const auto& phi : realizations_) {
        if (phi.size() != elements_.size()) throw InvalidInstance("realization is not a full map over V");
        for (StateId y : phi)
            if (y >= states_.size()) throw InvalidInstance("realization uses an unknown state");
        if (!seen.insert(phi).second) throw InvalidInstance("duplicate realization");
    }

    if (!utility_.empty()) {
        if (utility_.num_elements() != elements_.size() || utility_.num_realizations() != realizations_.size())
            throw InvalidInstance("utility table shape does not match the instance");
        const std::size_t subsets = std::size_t{1} << elements_.size();
        for (std::size_t a = 0; a < subsets; ++a)
            for (RealizationId r = 0; r < realizations_.size(); ++r) {
                double v = utility_(static_cast<ElementSet>(a), r);
                if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidInstance("utility values must be non-negative");
            }
    }
}

double Instance::utility(ElementSet set, RealizationId r) const {
    if (utility_.empty()) throw InvalidInstance("instance has no utility attached");
    return utility_(set, r);
}

std::optional<ElementId> Instance::find_element(std::string_view name) const {
    auto it = std::find(elements_.begin(), elements_.end(), name);
    if (it == elements_.end()) return std::nullopt;
    return static_cast<ElementId>(it - elements_.begin());
}

std::optional<StateId> Instance::find_state(std::string_view name) const {
    auto it = std::find(states_.begin(), states_.end(), name);
    if (it == states_.end()) return std::nullopt;
    return static_cast<StateId>(it - states_.begin());
}

Instance Instance::with_prior(std::vector<double> prior) const {
    return Instance(elements_, states_, realizations_, std::move(prior), utility_);
}

Instance Instance::with_utility(UtilityTable utility) const {
    return Instance(elements_, states_, realizations_, prior_, std::move(utility));
}

} // namespace maxgain
