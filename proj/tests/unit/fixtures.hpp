#pragma once

#include <vector>

#include "maxgain/maxgain.hpp"

namespace fixtures {

using namespace maxgain;

/// One element x, two realizations split by x, coverage utility under a uniform prior.
inline Instance single_split() {
    Instance structure({"x"}, {"0", "1"}, {{0}, {1}}, {0.5, 0.5});
    return structure.with_utility(coverage_utility(structure, structure.prior()));
}

/// Three threshold hypotheses on two points: rows (0,0), (0,1), (1,1), uniform.
inline Instance three_thresholds() {
    Instance structure({"x1", "x2"}, {"0", "1"}, {{0, 0}, {0, 1}, {1, 1}}, {1.0 / 3, 1.0 / 3, 1.0 / 3});
    return structure.with_utility(coverage_utility(structure, structure.prior()));
}

/// Four realizations in bijection with {0,1}² over two features, coverage utility.
inline Instance two_features() {
    Instance structure({"a", "b"}, {"0", "1"}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {0.25, 0.25, 0.25, 0.25});
    return structure.with_utility(coverage_utility(structure, structure.prior()));
}

/// State-dependent modular utility on which a height-limited greedy tree stops with a large
/// gain still available: root x (gain 100); x=0 → a (gain 10) then stop although b has gain 10;
/// x=1 → c (gain 1) then stop.
inline Instance early_stop_instance() {
    // Elements x, a, b, c; realizations differ only in x.
    Instance structure({"x", "a", "b", "c"}, {"0", "1"}, {{0, 0, 0, 0}, {1, 0, 0, 0}}, {0.5, 0.5});
    UtilityTable table(4, 2);
    const double weights0[] = {100, 10, 10, 1};
    const double weights1[] = {100, 1, 1, 1};
    for (ElementSet a = 0; a < 16; ++a)
        for (RealizationId r = 0; r < 2; ++r) {
            double total = 0;
            for (ElementId e = 0; e < 4; ++e)
                if (contains(a, e)) total += (r == 0 ? weights0 : weights1)[e];
            table.at(a, r) = total;
        }
    return structure.with_utility(table);
}

inline PolicyTree early_stop_policy() {
    auto stop = PolicyTree::terminal();
    auto pick_a = PolicyTree::select(1, {stop, stop});
    auto pick_c = PolicyTree::select(3, {stop, stop});
    return PolicyTree::select(0, {pick_a, pick_c});
}

/// Small seeded corpus of adaptive monotone instances.
inline std::vector<Instance> corpus(std::size_t count, std::size_t elements = 3, std::uint64_t first_seed = 0) {
    std::vector<Instance> out;
    for (std::uint64_t s = first_seed; s < first_seed + count; ++s) out.push_back(gen_random(elements, 2, s, true));
    return out;
}

} // namespace fixtures
