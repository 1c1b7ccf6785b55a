#pragma once

#include "maxgain/instance.hpp"
#include "maxgain/policy_tree.hpp"

namespace maxgain {

enum class TieBreak {
    /// Among elements within tolerance of the best gain, take the one earliest in element order.
    LexicographicMin,
};

/// Full greedy tree: at every reachable ψ select an element attaining max_v Δ(v|ψ),
/// and stop once every remaining gain is ≤ 0 (within tolerance).
PolicyTree build_greedy(const Instance& instance, TieBreak tie_break = TieBreak::LexicographicMin,
                        const Numerics& numerics = {});

} // namespace maxgain
