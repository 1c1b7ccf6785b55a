#pragma once

#include <optional>
#include <vector>

#include "maxgain/instance.hpp"
#include "maxgain/partial_realization.hpp"
#include "maxgain/types.hpp"

namespace maxgain {

/// Realizations consistent with some ψ and their renormalized prior weights.
/// Zero-probability realizations never appear in the support.
struct ConditionalPrior {
    std::vector<RealizationId> support;
    std::vector<double> weights;
    /// Prior mass p(VS(ψ)) before renormalization.
    double mass = 0.0;
};

/// VS(ψ) under the instance prior. Throws EmptyVersionSpace on a measure-zero ψ.
ConditionalPrior version_space(const Instance& instance, const PartialRealization& psi);

/// p(VS(ψ)); zero instead of throwing when no positive realization is consistent.
double version_space_mass(const Instance& instance, const PartialRealization& psi);

/// E[f(dom ψ, φ) | φ ∼ ψ].
double expected_utility(const Instance& instance, const PartialRealization& psi);

/// Δ(v | ψ) = E[f(dom ψ ∪ {v}, φ) − f(dom ψ, φ) | φ ∼ ψ]; exactly 0 when v ∈ dom ψ.
double marginal_gain(const Instance& instance, ElementId v, const PartialRealization& psi);

/// Δ(v | ψ) for every element, using one version-space computation.
std::vector<double> marginal_gains(const Instance& instance, const PartialRealization& psi);

/// Every positive-mass partial realization with |dom ψ| ≤ max_size, each once,
/// ordered by domain bitmask and then by first consistent realization.
std::vector<PartialRealization> positive_partial_realizations(const Instance& instance, std::size_t max_size);

struct MonotoneViolation {
    PartialRealization context;
    ElementId element;
    double gain;
};

struct MonotoneCheck {
    bool holds = true;
    std::optional<MonotoneViolation> witness;
};

/// Δ(v | ψ) ≥ −tol for every positive-mass ψ and v ∉ dom ψ.
MonotoneCheck check_adaptive_monotone(const Instance& instance, const Numerics& numerics = {});

struct SubmodularViolation {
    PartialRealization smaller;
    PartialRealization larger;
    ElementId element;
    double gain_smaller;
    double gain_larger;
};

struct SubmodularCheck {
    bool holds = true;
    std::optional<SubmodularViolation> witness;
};

/// Δ(v | ψ) ≥ Δ(v | ψ′) − tol for every positive-mass ψ ⊆ ψ′ and v ∉ dom ψ′.
/// Quantifies over all pairs, not only one-step extensions.
SubmodularCheck check_adaptive_submodular(const Instance& instance, const Numerics& numerics = {});

} // namespace maxgain
