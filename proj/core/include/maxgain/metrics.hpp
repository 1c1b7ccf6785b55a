#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "maxgain/instance.hpp"
#include "maxgain/partial_realization.hpp"
#include "maxgain/policy.hpp"
#include "maxgain/threshold.hpp"

namespace maxgain {

struct AlphaResult {
    /// Smallest α making the policy α-approximate greedy; +inf if some selection has
    /// zero gain while a positive gain was available.
    double value = 1.0;
    /// ψ attaining the worst ratio, if any selection happens.
    std::optional<PartialRealization> witness;
};

/// Greedy approximation ratio α_π over every reachable selection (both coin outcomes for
/// threshold policies). Per node: max_v Δ(v|ψ) / Δ(π(ψ)|ψ), with 0/0 counted as 1.
AlphaResult alpha(const Instance& instance, const Policy& policy, const Numerics& numerics = {});

struct FrontierGains {
    int budget = 0;
    /// Δ^u: largest remaining-element gain at any termination of π_i.
    double delta_u = 0.0;
    /// Δ^l: smallest gain of any element π_i selects.
    double delta_l = 0.0;
    PartialRealization upper_witness;
    PartialRealization lower_witness;
    /// The (τ_i, ρ_i) pair defining π_i.
    double tau = 0.0;
    double rho = 0.0;
};

/// Frontier gains of π_i for 1 ≤ i ≤ c_avg(base). Throws BudgetExceedsCost otherwise.
FrontierGains frontier_gains(const Instance& instance, const PolicyTree& base, int budget,
                             const Numerics& numerics = {});
FrontierGains frontier_gains(const PolicyProfile& profile, const PolicyTree& base, int budget);

struct BetaResult {
    /// β_π = max_i Δ^u_i / Δ^l_i, with 0/0 := 0 and x/0 := +inf.
    double value = 0.0;
    /// Budget i attaining the maximum (0 when the range is empty).
    int witness_budget = 0;
    /// c_avg < 1: no integer budget in range, value reported as 0.
    bool empty_range = false;
    std::vector<FrontierGains> per_budget;
};

/// Maximal gain ratio. For a threshold policy the budgets range over 1..⌊c_avg(π)⌋ and
/// use sub-policies of its base, so β of a canonical π′_l ranges over π′_1..π′_l.
BetaResult beta(const Instance& instance, const Policy& policy, const Numerics& numerics = {});

/// Ratio convention shared by β: 0/0 := 0, x/0 := +inf for x > 0.
double gain_ratio(double numerator, double denominator);

enum class GammaMode {
    Exact,
    /// Random policy sample; the result is an upper bound on γ.
    SampledUpperBound,
};

struct GammaOptions {
    GammaMode mode = GammaMode::Exact;
    std::uint64_t samples_per_context = 2000;
    std::uint64_t seed = 0;
};

struct GammaResult {
    /// Clamped to [0, 1].
    double value = 1.0;
    double raw_minimum = 1.0;
    GammaMode mode = GammaMode::Exact;
    int n = 0;
    int k = 0;
    /// Raw minimum below −tol, which should not happen for adaptive monotone f.
    bool anomaly = false;
    /// No (ψ′, π) pair had a non-negligible policy gain; value defaults to 1.
    bool vacuous = false;
    std::optional<PartialRealization> witness_context;
    std::optional<PolicyTree> witness_policy;
    std::uint64_t policies_evaluated = 0;
};

/// Adaptive submodularity ratio γ^s_{n,k}: the minimum over positive-mass ψ′ with
/// |ψ′| ≤ n and deterministic height-≤k policies avoiding dom ψ′ of
///   Σ_v P(v ∈ E(π, Φ) | Φ ∼ ψ′) Δ(v|ψ′)  /  Δ(π | ψ′).
/// Pairs with |Δ(π|ψ′)| ≤ 1e-12 are skipped.
/// Exact mode throws EnumerationBudgetExceeded if the pair count exceeds the budget.
GammaResult gamma(const Instance& instance, int n, int k, const GammaOptions& options = {},
                  const Numerics& numerics = {});

/// Number of (ψ′, policy) pairs exact γ would evaluate (saturating).
std::uint64_t gamma_enumeration_size(const Instance& instance, int n, int k);

struct CoveringParams {
    double q = 0.0;
    double eta = 0.0;
    /// (A, r) achieving Q, and the runner-up value defining η (if one exists).
    ElementSet q_set = 0;
    RealizationId q_realization = 0;
    std::optional<double> runner_up;
};

/// Discrete covering parameters over positive-probability realizations: Q is the largest
/// utility value, η = Q − (largest value below Q), or η = Q when every value equals Q.
CoveringParams covering_params(const Instance& instance, const Numerics& numerics = {});

struct ParamOptions {
    int n = 2;
    int k = 2;
    /// nullopt skips γ.
    std::optional<GammaOptions> gamma = GammaOptions{};
};

struct ParamReport {
    AlphaResult alpha;
    BetaResult beta;
    std::optional<GammaResult> gamma;
    CoveringParams covering;
    double f_avg = 0.0;
    double c_avg = 0.0;
    /// β ≤ α + tol. Can fail for base policies that stop while a remaining element
    /// still has a gain above the threshold in force.
    bool theorem3_consistent = true;
};

ParamReport compute_params(const Instance& instance, const Policy& policy, const ParamOptions& options = {},
                           const Numerics& numerics = {});

} // namespace maxgain
