#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "maxgain/instance.hpp"
#include "maxgain/learn.hpp"
#include "maxgain/policy_tree.hpp"

namespace maxgain {

struct WitnessPair {
    Instance instance;
    PolicyTree policy;
};

/// f(A, φ) = Σ_{i=0}^{|A|} ε^i for every realization.
UtilityTable theorem5_utility(std::size_t num_elements, std::size_t num_realizations, double epsilon);

/// State-independent f(A) = (1/k) Σ_j g(j | T_j), scanning A in ascending index order with
/// T_j the already scanned prefix: g = 2 if T_j = {v_1..v_{j−2}} and j ≥ 3, else 1.
UtilityTable theorem4_utility(std::size_t num_elements, std::size_t num_realizations);

/// k elements v1..vk, states {0,1}, uniform prior over all 2^k realizations, the
/// ε-geometric utility, and the chain v1..vk (greedy, β = ε).
WitnessPair gen_theorem5(int k, double epsilon);

/// Same structure with the prefix-gain utility; the chain has α = 2 and β = 1. k ≥ 3.
WitnessPair gen_theorem4(int k);

/// Seeded random instance: 2..min(|Y|^|V|, 8) distinct realizations, positive prior.
/// With `monotone`, every single-element addition raises f by at least 0.05 on every
/// realization. Requires |V| ≤ 5 and |Y| ≤ 3.
Instance gen_random(std::size_t num_elements, std::size_t num_states, std::uint64_t seed, bool monotone);

/// Seeded random binary hypothesis class with 2..max_hypotheses distinct rows. When
/// `rare_mass` is set, the last hypothesis gets exactly that prior mass.
HypothesisClass gen_random_hypotheses(std::size_t num_examples, std::size_t max_hypotheses, std::uint64_t seed,
                                      std::optional<double> rare_mass = std::nullopt);

/// Threshold classifiers on `points` ordered points: hypothesis h labels x_j with 1 iff j ≥ h.
HypothesisClass threshold_hypotheses(std::size_t points);

/// Random tree that keeps selecting (uniformly among unobserved elements) until V is exhausted.
PolicyTree random_full_policy(const Instance& instance, std::mt19937_64& rng);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double unit_draw(std::mt19937_64& rng);

} // namespace maxgain
