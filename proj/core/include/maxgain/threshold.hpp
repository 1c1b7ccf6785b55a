#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "maxgain/instance.hpp"
#include "maxgain/partial_realization.hpp"
#include "maxgain/policy.hpp"

namespace maxgain {

/// One positive-mass node of a base policy tree, annotated with the gains the
/// threshold machinery needs.
struct ProfileNode {
    PartialRealization psi;
    /// p(VS(ψ)), the probability that a run of the base reaches this node.
    double mass = 0.0;
    /// Selected element, or nullopt where the base policy terminates.
    std::optional<ElementId> selected;
    /// Δ(v|ψ) for every element (0 for observed ones).
    std::vector<double> gains;
    /// max over unobserved v of Δ(v|ψ); 0 when every element is observed.
    double max_remaining_gain = 0.0;
    /// Minimum of max_remaining_gain over strict ancestors (+inf at the root).
    double ancestor_min_gain = std::numeric_limits<double>::infinity();

    double selected_gain() const { return selected ? gains[*selected] : 0.0; }
};

/// Positive-mass nodes of a deterministic base policy in depth-first order. All
/// threshold sub-policies of the base can be evaluated from this table alone.
class PolicyProfile {
public:
    PolicyProfile(const Instance& instance, const PolicyTree& base, const Numerics& numerics = {});

    const std::vector<ProfileNode>& nodes() const { return nodes_; }
    const Numerics& numerics() const { return numerics_; }

    bool reached(const ProfileNode& node, double tau, TerminationRule rule) const;
    bool selects(const ProfileNode& node, double tau, TerminationRule rule) const;
    bool terminates(const ProfileNode& node, double tau, TerminationRule rule) const;

    /// c_avg of the base truncated by one rule.
    double expected_cost(double tau, TerminationRule rule) const;
    /// c_avg of the base itself.
    double expected_cost() const;

    /// Distinct gains Δ(v|ψ) of unobserved elements at reachable selection nodes,
    /// grouped at tolerance (class maxima kept), in descending order.
    std::vector<double> candidate_thresholds() const;

private:
    Numerics numerics_;
    std::vector<ProfileNode> nodes_;
};

struct ThresholdPair {
    double tau;
    double rho;
    ThresholdSubPolicy policy;
};

/// The canonical π_i: threshold τ_i and tie-break ρ_i with c_avg(π^{τ_i,ρ_i}) = i.
///
/// Thresholds are tried in descending order of the base's achievable gains. Candidates
/// with equal μ^τ = c_avg(π^{τ,1}) form one class represented by its largest member;
/// τ_i is the first class with i ≤ μ and ρ_i interpolates from the previous class.
/// i = 0 yields a threshold above every gain with ρ = 0.
/// Throws BudgetExceedsCost if i exceeds c_avg of the base.
ThresholdPair find_threshold_pair(const Instance& instance, const PolicyTree& base, int budget,
                                  const Numerics& numerics = {});
ThresholdPair find_threshold_pair(const PolicyProfile& profile, const PolicyTree& base, int budget);

/// The base tree behind a policy (itself for a deterministic tree).
const PolicyTree& base_of(const Policy& policy);

} // namespace maxgain
