#include "maxgain/learn.hpp"

#include <algorithm>
#include <set>

#include "maxgain/errors.hpp"
#include "maxgain/greedy.hpp"

namespace maxgain {

Instance instance_from_hypotheses(const HypothesisClass& hypotheses) {
    if (hypotheses.labels.size() != hypotheses.prior.size())
        throw InvalidInstance("hypothesis class has " + std::to_string(hypotheses.labels.size()) + " rows but " +
                              std::to_string(hypotheses.prior.size()) + " prior entries");
    std::set<std::string> alphabet;
    for (const auto& row : hypotheses.labels) {
        if (row.size() != hypotheses.examples.size()) throw InvalidInstance("hypothesis row does not label every example");
        alphabet.insert(row.begin(), row.end());
    }
    if (alphabet.empty()) alphabet.insert("0");
    std::vector<std::string> states(alphabet.begin(), alphabet.end());

    std::vector<Realization> realizations;
    std::set<Realization> seen;
    for (std::size_t h = 0; h < hypotheses.labels.size(); ++h) {
        Realization phi;
        for (const auto& label : hypotheses.labels[h])
            phi.push_back(static_cast<StateId>(std::lower_bound(states.begin(), states.end(), label) - states.begin()));
        if (!seen.insert(phi).second) throw DuplicateHypothesis("hypothesis " + std::to_string(h) + " repeats an earlier row");
        realizations.push_back(std::move(phi));
    }
    return Instance(hypotheses.examples, std::move(states), std::move(realizations), hypotheses.prior);
}

UtilityTable coverage_utility(const Instance& structure, std::span<const double> prior) {
    if (prior.size() != structure.num_realizations()) throw InvalidInstance("prior does not match the realization list");
    const std::size_t subsets = std::size_t{1} << structure.num_elements();
    UtilityTable table(structure.num_elements(), structure.num_realizations());
    for (std::size_t a = 0; a < subsets; ++a) {
        const auto set = static_cast<ElementSet>(a);
        for (RealizationId r = 0; r < structure.num_realizations(); ++r) {
            double surviving = 0.0;
            for (RealizationId s = 0; s < structure.num_realizations(); ++s) {
                bool agrees = true;
                for (ElementId e = 0; e < structure.num_elements() && agrees; ++e)
                    agrees = !contains(set, e) || structure.state(r, e) == structure.state(s, e);
                if (agrees) surviving += prior[s];
            }
            table.at(set, r) = std::max(0.0, 1.0 - surviving + prior[r]);
        }
    }
    return table;
}

ModifiedPrior modified_prior(std::span<const double> prior) {
    ModifiedPrior out;
    const double size = static_cast<double>(prior.size());
    const double floor = 1.0 / (size * size);
    double z = 0.0;
    for (double p : prior) {
        out.prior.push_back(std::max(p, floor));
        z += out.prior.back();
    }
    for (double& p : out.prior) p /= z;
    out.normalizer = z;
    return out;
}

PolicyTree gbs_policy(const Instance& instance_with_coverage, const Numerics& numerics) {
    return build_greedy(instance_with_coverage, TieBreak::LexicographicMin, numerics);
}

ActiveLearningSetup prepare_active_learning(const HypothesisClass& hypotheses, const Numerics& numerics) {
    const Instance structure = instance_from_hypotheses(hypotheses);
    auto lifted = modified_prior(structure.prior());
    auto utility = coverage_utility(structure, lifted.prior);
    Instance true_prior = structure.with_utility(utility);
    Instance modified = structure.with_prior(lifted.prior).with_utility(std::move(utility));
    PolicyTree gbs = gbs_policy(modified, numerics);
    return {std::move(true_prior), std::move(modified), lifted.normalizer, std::move(gbs)};
}

} // namespace maxgain
