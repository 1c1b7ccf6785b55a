#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "maxgain/instance.hpp"
#include "maxgain/policy_tree.hpp"

namespace maxgain {

struct OptimalPolicy {
    PolicyTree policy;
    /// Optimal f_avg (budget objective) or optimal c_avg (coverage objective).
    double value = 0.0;
    std::uint64_t states_explored = 0;
};

/// Exact maximum of f_avg over policies of height ≤ k, by dynamic programming over
/// (ψ, remaining budget). Ties prefer stopping, then the earliest element.
/// Throws EnumerationBudgetExceeded when the state estimate exceeds the budget.
OptimalPolicy optimal_budget(const Instance& instance, int k, const Numerics& numerics = {});

enum class CoveragePruning {
    /// Only consider selections that split the version space or raise f for some
    /// consistent realization.
    Pruned,
    /// Consider every unobserved element.
    Unpruned,
};

/// Exact minimum of c_avg over policies reaching f = q on every positive realization.
/// Throws CoverageUnreachable if some realization stays below q even with all of V.
OptimalPolicy optimal_coverage(const Instance& instance, double q,
                               CoveragePruning pruning = CoveragePruning::Pruned, const Numerics& numerics = {});

/// N(m, k) = 1 + m · N(m−1, k−1)^|Y|: deterministic trees of height ≤ k over m elements.
/// Saturates at UINT64_MAX.
std::uint64_t policy_count(std::size_t available, std::size_t num_states, int k);

/// Visits every deterministic tree of height ≤ k selecting only elements outside
/// `excluded`, including early-terminating shapes. Throws EnumerationBudgetExceeded if
/// the count exceeds the budget.
void enumerate_policies(const Instance& instance, int k, ElementSet excluded,
                        const std::function<void(const PolicyTree&)>& visit, const Numerics& numerics = {});

std::vector<PolicyTree> all_policies(const Instance& instance, int k, ElementSet excluded = 0,
                                     const Numerics& numerics = {});

} // namespace maxgain
