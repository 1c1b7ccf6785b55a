#pragma once

#include <span>
#include <string>
#include <vector>

#include "maxgain/instance.hpp"
#include "maxgain/policy_tree.hpp"

namespace maxgain {

/// Finite hypothesis class: each hypothesis labels every example.
struct HypothesisClass {
    std::vector<std::string> examples;
    /// labels[h][x] is the label hypothesis h assigns to example x.
    std::vector<std::vector<std::string>> labels;
    std::vector<double> prior;
};

/// Examples become elements, the distinct labels (sorted) become states and each
/// hypothesis becomes a realization. No utility is attached.
/// Throws DuplicateHypothesis on repeated rows.
Instance instance_from_hypotheses(const HypothesisClass& hypotheses);

/// f_p(A, φ) = 1 − p(VS_{A,φ}) + p(φ), tabulated over the instance's realizations.
/// The version space counts every listed realization, including zero-probability ones.
UtilityTable coverage_utility(const Instance& structure, std::span<const double> prior);

struct ModifiedPrior {
    std::vector<double> prior;
    /// Z = Σ_φ max{p(φ), 1/|Φ|²}.
    double normalizer = 1.0;
};

/// p′(φ) = max{p(φ), 1/|Φ|²} / Z, with |Φ| the full realization list.
ModifiedPrior modified_prior(std::span<const double> prior);

/// Generalized binary search: the greedy tree for a coverage utility under the
/// instance's own prior.
PolicyTree gbs_policy(const Instance& instance_with_coverage, const Numerics& numerics = {});

/// Everything the modified-prior pipeline needs, built from one hypothesis class.
struct ActiveLearningSetup {
    /// (Φ, p, f_{p′}): costs are measured here.
    Instance true_prior;
    /// (Φ, p′, f_{p′}): GBS, β′ and γ′ are computed here.
    Instance modified;
    double normalizer = 1.0;
    PolicyTree gbs;
};

ActiveLearningSetup prepare_active_learning(const HypothesisClass& hypotheses, const Numerics& numerics = {});

} // namespace maxgain
