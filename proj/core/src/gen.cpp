#include "maxgain/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "maxgain/errors.hpp"

namespace maxgain {

namespace {

constexpr std::size_t kMaxWitnessElements = 12;

std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

std::vector<std::string> state_names(std::size_t count) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i) names.push_back(std::to_string(i));
    return names;
}

// All 2^k binary maps, element 0 most significant.
std::vector<Realization> all_binary_realizations(std::size_t k) {
    std::vector<Realization> out;
    for (std::size_t code = 0; code < (std::size_t{1} << k); ++code) {
        Realization phi(k);
        for (std::size_t e = 0; e < k; ++e) phi[e] = (code >> (k - 1 - e)) & 1U;
        out.push_back(std::move(phi));
    }
    return out;
}

std::vector<ElementId> identity_order(std::size_t k) {
    std::vector<ElementId> order(k);
    std::iota(order.begin(), order.end(), ElementId{0});
    return order;
}

WitnessPair binary_witness(std::size_t k, UtilityTable utility) {
    auto realizations = all_binary_realizations(k);
    std::vector<double> prior(realizations.size(), 1.0 / static_cast<double>(realizations.size()));
    Instance instance(numbered("v", k), state_names(2), std::move(realizations), std::move(prior), std::move(utility));
    const auto order = identity_order(k);
    return {std::move(instance), chain_policy(order, 2)};
}

} // namespace

UtilityTable theorem5_utility(std::size_t num_elements, std::size_t num_realizations, double epsilon) {
    UtilityTable table(num_elements, num_realizations);
    std::vector<double> by_size(num_elements + 1);
    double sum = 0.0;
    double power = 1.0;
    for (std::size_t i = 0; i <= num_elements; ++i) {
        sum += power;
        by_size[i] = sum;
        power *= epsilon;
    }
    for (std::size_t a = 0; a < (std::size_t{1} << num_elements); ++a)
        for (RealizationId r = 0; r < num_realizations; ++r)
            table.at(static_cast<ElementSet>(a), r) = by_size[cardinality(static_cast<ElementSet>(a))];
    return table;
}

UtilityTable theorem4_utility(std::size_t num_elements, std::size_t num_realizations) {
    UtilityTable table(num_elements, num_realizations);
    const double k = static_cast<double>(num_elements);
    for (std::size_t a = 0; a < (std::size_t{1} << num_elements); ++a) {
        const auto set = static_cast<ElementSet>(a);
        double total = 0.0;
        ElementSet prefix = 0;
        for (ElementId e = 0; e < num_elements; ++e) {
            if (!contains(set, e)) continue;
            const std::size_t j = e + 1;
            const bool doubled = j >= 3 && prefix == full_set(j - 2);
            total += doubled ? 2.0 : 1.0;
            prefix = with(prefix, e);
        }
        for (RealizationId r = 0; r < num_realizations; ++r) table.at(set, r) = total / k;
    }
    return table;
}

WitnessPair gen_theorem5(int k, double epsilon) {
    if (k < 1 || static_cast<std::size_t>(k) > kMaxWitnessElements)
        throw InvalidParams("theorem5 needs 1 <= k <= " + std::to_string(kMaxWitnessElements));
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidParams("theorem5 needs 0 < epsilon < 1");
    const auto n = static_cast<std::size_t>(k);
    return binary_witness(n, theorem5_utility(n, std::size_t{1} << n, epsilon));
}

WitnessPair gen_theorem4(int k) {
    if (k < 3 || static_cast<std::size_t>(k) > kMaxWitnessElements)
        throw InvalidParams("theorem4 needs 3 <= k <= " + std::to_string(kMaxWitnessElements));
    const auto n = static_cast<std::size_t>(k);
    return binary_witness(n, theorem4_utility(n, std::size_t{1} << n));
}

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Instance gen_random(std::size_t num_elements, std::size_t num_states, std::uint64_t seed, bool monotone) {
    if (num_elements < 1 || num_elements > 5) throw InvalidParams("random instances need 1..5 elements");
    if (num_states < 1 || num_states > 3) throw InvalidParams("random instances need 1..3 states");
    std::mt19937_64 rng(seed);
    std::size_t space = 1;
    for (std::size_t i = 0; i < num_elements; ++i) space *= num_states;
    const std::size_t cap = std::min<std::size_t>(space, 8);
    const std::size_t count = cap < 2 ? cap : 2 + static_cast<std::size_t>(rng() % (cap - 1));

    std::set<Realization> chosen;
    while (chosen.size() < count) {
        Realization phi(num_elements);
        for (auto& y : phi) y = static_cast<StateId>(rng() % num_states);
        chosen.insert(std::move(phi));
    }
    std::vector<Realization> realizations(chosen.begin(), chosen.end());

    std::vector<double> prior;
    for (std::size_t r = 0; r < count; ++r) prior.push_back(0.05 + unit_draw(rng));
    const double total = std::accumulate(prior.begin(), prior.end(), 0.0);
    for (double& p : prior) p /= total;

    UtilityTable utility(num_elements, count);
    for (RealizationId r = 0; r < count; ++r)
        for (std::size_t a = 0; a < (std::size_t{1} << num_elements); ++a) {
            const auto set = static_cast<ElementSet>(a);
            if (!monotone) {
                utility.at(set, r) = 2.0 * unit_draw(rng);
                continue;
            }
            double floor = 0.0;
            for (ElementId e = 0; e < num_elements; ++e)
                if (contains(set, e)) floor = std::max(floor, utility(without(set, e), r) + 0.05);
            utility.at(set, r) = floor + unit_draw(rng);
        }
    return Instance(numbered("v", num_elements), state_names(num_states), std::move(realizations), std::move(prior),
                    std::move(utility));
}

HypothesisClass gen_random_hypotheses(std::size_t num_examples, std::size_t max_hypotheses, std::uint64_t seed,
                                      std::optional<double> rare_mass) {
    if (num_examples < 1 || num_examples > 10) throw InvalidParams("random hypothesis classes need 1..10 examples");
    if (max_hypotheses < 2) throw InvalidParams("random hypothesis classes need room for two hypotheses");
    if (rare_mass && !(*rare_mass > 0.0 && *rare_mass < 1.0)) throw InvalidParams("rare mass must lie in (0, 1)");
    std::mt19937_64 rng(seed);
    const std::size_t cap = std::min(std::size_t{1} << num_examples, max_hypotheses);
    const std::size_t count = 2 + static_cast<std::size_t>(rng() % (cap - 1));

    HypothesisClass out;
    out.examples = numbered("x", num_examples);
    std::set<std::vector<std::string>> seen;
    while (out.labels.size() < count) {
        std::vector<std::string> row;
        for (std::size_t x = 0; x < num_examples; ++x) row.push_back(rng() & 1U ? "1" : "0");
        if (seen.insert(row).second) out.labels.push_back(std::move(row));
    }
    for (std::size_t h = 0; h < count; ++h) out.prior.push_back(0.05 + unit_draw(rng));
    if (rare_mass) out.prior.back() = 0.0;
    const double total = std::accumulate(out.prior.begin(), out.prior.end(), 0.0);
    const double scale = rare_mass ? 1.0 - *rare_mass : 1.0;
    for (double& p : out.prior) p = p / total * scale;
    if (rare_mass) out.prior.back() = *rare_mass;
    return out;
}

HypothesisClass threshold_hypotheses(std::size_t points) {
    HypothesisClass out;
    out.examples = numbered("x", points);
    for (std::size_t i = 0; i <= points; ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < points; ++j) row.push_back(j >= points - i ? "1" : "0");
        out.labels.push_back(std::move(row));
    }
    out.prior.assign(points + 1, 1.0 / static_cast<double>(points + 1));
    return out;
}

namespace {

PolicyTree random_full_from(const Instance& instance, ElementSet used, std::mt19937_64& rng) {
    std::vector<ElementId> free;
    for (ElementId e = 0; e < instance.num_elements(); ++e)
        if (!contains(used, e)) free.push_back(e);
    if (free.empty()) return PolicyTree::terminal();
    const ElementId pick = free[rng() % free.size()];
    std::vector<PolicyTree> children;
    for (StateId y = 0; y < instance.num_states(); ++y) children.push_back(random_full_from(instance, with(used, pick), rng));
    return PolicyTree::select(pick, std::move(children));
}

} // namespace

PolicyTree random_full_policy(const Instance& instance, std::mt19937_64& rng) {
    return random_full_from(instance, 0, rng);
}

} // namespace maxgain
