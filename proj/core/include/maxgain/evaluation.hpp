#pragma once

#include "maxgain/instance.hpp"
#include "maxgain/partial_realization.hpp"
#include "maxgain/policy.hpp"

namespace maxgain {

/// E[f(E(π, φ), φ)] over the prior and the policy's coin.
double f_avg(const Instance& instance, const Policy& policy, const Numerics& numerics = {});

/// E[|E(π, φ)|] over the prior and the policy's coin.
double c_avg(const Instance& instance, const Policy& policy, const Numerics& numerics = {});

/// Δ(π | ψ): expected gain of running π from scratch on top of dom ψ, for φ ∼ ψ.
double policy_gain(const Instance& instance, const Policy& policy, const PartialRealization& psi,
                   const Numerics& numerics = {});

/// True if f(E(π, φ), φ) ≥ q − tol on every positive-probability realization.
bool covers(const Instance& instance, const PolicyTree& policy, double q, const Numerics& numerics = {});

} // namespace maxgain
