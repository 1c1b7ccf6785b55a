#pragma once

#include <variant>
#include <vector>

#include "maxgain/instance.hpp"
#include "maxgain/partial_realization.hpp"
#include "maxgain/policy_tree.hpp"
#include "maxgain/types.hpp"

namespace maxgain {

/// π^{τ,ρ}: the base policy cut by a threshold τ with tie-break probability ρ.
///
/// One coin is drawn at the start of a run. With probability ρ the run stops at the
/// first reached ψ where every remaining element has Δ(v|ψ) < τ (strict rule); with
/// probability 1 − ρ it stops where every remaining Δ(v|ψ) ≤ τ (non-strict rule).
/// Otherwise it follows the base policy.
struct ThresholdSubPolicy {
    PolicyTree base;
    double tau = 0.0;
    double rho = 0.0;
};

/// Throws InvalidParams unless τ ≥ 0 and 0 ≤ ρ ≤ 1.
ThresholdSubPolicy threshold_subpolicy(PolicyTree base, double tau, double rho);

using Policy = std::variant<PolicyTree, ThresholdSubPolicy>;

enum class TerminationRule {
    Strict,    ///< stop when max remaining gain < τ
    NonStrict, ///< stop when max remaining gain ≤ τ
};

/// True when the rule lets the run continue at a node whose best remaining gain is `max_gain`.
bool passes_threshold(double max_gain, double tau, TerminationRule rule, const Numerics& numerics);

/// Deterministic sub-policy obtained by applying one termination rule to `base`.
/// Branches that no positive-probability realization reaches become terminal.
PolicyTree truncate(const Instance& instance, const PolicyTree& base, double tau, TerminationRule rule,
                    const Numerics& numerics = {});

struct WeightedTree {
    double weight;
    PolicyTree tree;
};

/// The policy as a mixture of deterministic trees with positive weights summing to 1.
std::vector<WeightedTree> branches(const Instance& instance, const Policy& policy, const Numerics& numerics = {});

/// Height over every branch that occurs with positive probability.
std::size_t height(const Instance& instance, const Policy& policy, const Numerics& numerics = {});

struct RunTrace {
    std::vector<ElementId> selected;
    PartialRealization observed;
    double weight;
};

/// All randomness branches of a run on realization r. Branches with identical
/// selections are merged; traces are sorted by selection sequence.
std::vector<RunTrace> run(const Instance& instance, const Policy& policy, RealizationId r,
                          const Numerics& numerics = {});

/// Same selected sequences with weights equal within tolerance; traces of weight ≤ tolerance are ignored.
bool same_traces(const std::vector<RunTrace>& a, const std::vector<RunTrace>& b, double tolerance);

} // namespace maxgain
