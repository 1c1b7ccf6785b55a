#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

namespace maxgain {

using ElementId = std::size_t;
using StateId = std::size_t;
using RealizationId = std::size_t;

/// Subset of the ground set, one bit per element index.
using ElementSet = std::uint32_t;

inline constexpr std::size_t kMaxElements = 20;

constexpr ElementSet singleton(ElementId e) { return ElementSet{1} << e; }
constexpr bool contains(ElementSet set, ElementId e) { return (set >> e) & 1U; }
constexpr ElementSet with(ElementSet set, ElementId e) { return set | singleton(e); }
constexpr ElementSet without(ElementSet set, ElementId e) { return set & ~singleton(e); }
constexpr std::size_t cardinality(ElementSet set) { return static_cast<std::size_t>(std::popcount(set)); }
constexpr ElementSet full_set(std::size_t n) { return n == 0 ? 0 : (ElementSet{1} << n) - 1; }

/// Numerical settings shared by every comparison and exhaustive search.
struct Numerics {
    /// Absolute tolerance for gain comparisons, tie grouping and bound checks.
    double tolerance = 1e-9;
    /// Upper limit on enumerated policies / DP states before refusing to run.
    std::uint64_t enumeration_budget = 10'000'000;
};

} // namespace maxgain
