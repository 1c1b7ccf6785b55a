#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "maxgain/instance.hpp"
#include "maxgain/types.hpp"

namespace maxgain {

/// Deterministic adaptive policy: either terminate, or select an element and branch on
/// its observed state. Subtrees are shared and immutable, so copies are cheap.
class PolicyTree {
public:
    /// The terminal (empty) policy π₀.
    PolicyTree() = default;

    static PolicyTree terminal() { return {}; }
    /// Select `element`, then continue with children[state] after observing `state`.
    static PolicyTree select(ElementId element, std::vector<PolicyTree> children);

    bool is_terminal() const { return node_ == nullptr; }
    ElementId element() const;
    const PolicyTree& child(StateId state) const;
    const std::vector<PolicyTree>& children() const;

    /// Maximum number of selections along any path.
    std::size_t height() const;
    /// Number of selection nodes.
    std::size_t size() const;

    friend bool operator==(const PolicyTree& a, const PolicyTree& b);

private:
    struct Node {
        ElementId element;
        std::vector<PolicyTree> children;
        std::size_t height;
        std::size_t size;
    };

    explicit PolicyTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Throws MalformedPolicy unless every selected element exists, no element repeats
/// on a root-to-leaf path, and every selection node has one child per state.
void validate(const Instance& instance, const PolicyTree& policy);

/// Selects `order` one element after another regardless of observations.
PolicyTree chain_policy(std::span<const ElementId> order, std::size_t num_states);

/// Elements selected, in order, when the policy runs on `realization`.
std::vector<ElementId> selections(const PolicyTree& policy, const Realization& realization);

/// π′@π″: run `first`, then run `second` from its root ignoring what `first` learned.
/// A selection of `second` that `first` already made on the same path is skipped (its
/// state is known), so the selected set is always the union of both runs.
PolicyTree concat(const PolicyTree& first, const PolicyTree& second);

} // namespace maxgain
