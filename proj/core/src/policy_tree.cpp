#include "maxgain/policy_tree.hpp"

#include <algorithm>
#include <optional>

#include "maxgain/errors.hpp"

namespace maxgain {

PolicyTree PolicyTree::select(ElementId element, std::vector<PolicyTree> children) {
    std::size_t h = 0;
    std::size_t s = 1;
    for (const auto& c : children) {
        h = std::max(h, c.height());
        s += c.size();
    }
    return PolicyTree(std::make_shared<const Node>(Node{element, std::move(children), h + 1, s}));
}

ElementId PolicyTree::element() const {
    if (!node_) throw MalformedPolicy("terminal policy has no element");
    return node_->element;
}

const PolicyTree& PolicyTree::child(StateId state) const {
    if (!node_) throw MalformedPolicy("terminal policy has no children");
    if (state >= node_->children.size()) throw MalformedPolicy("missing branch for a state");
    return node_->children[state];
}

const std::vector<PolicyTree>& PolicyTree::children() const {
    if (!node_) throw MalformedPolicy("terminal policy has no children");
    return node_->children;
}

std::size_t PolicyTree::height() const { return node_ ? node_->height : 0; }

std::size_t PolicyTree::size() const { return node_ ? node_->size : 0; }

bool operator==(const PolicyTree& a, const PolicyTree& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    return a.node_->element == b.node_->element && a.node_->children == b.node_->children;
}

namespace {

void validate_from(const Instance& instance, const PolicyTree& node, ElementSet used) {
    if (node.is_terminal()) return;
    const ElementId e = node.element();
    if (e >= instance.num_elements()) throw MalformedPolicy("policy selects an element outside V");
    if (contains(used, e))
        throw MalformedPolicy("policy re-selects " + instance.elements()[e] + " on one path");
    if (node.children().size() != instance.num_states())
        throw MalformedPolicy("selection of " + instance.elements()[e] + " does not branch on every state");
    for (const auto& c : node.children()) validate_from(instance, c, with(used, e));
}

PolicyTree chain_from(std::span<const ElementId> order, std::size_t num_states) {
    if (order.empty()) return PolicyTree::terminal();
    PolicyTree rest = chain_from(order.subspan(1), num_states);
    return PolicyTree::select(order.front(), std::vector<PolicyTree>(num_states, rest));
}

// Runs `second` on top of a path whose observations are `known` (element -> state).
PolicyTree graft(const PolicyTree& second, const std::vector<std::optional<StateId>>& known) {
    if (second.is_terminal()) return second;
    const ElementId e = second.element();
    if (e < known.size() && known[e]) return graft(second.child(*known[e]), known);
    std::vector<PolicyTree> children;
    children.reserve(second.children().size());
    auto extended = known;
    if (extended.size() <= e) extended.resize(e + 1);
    for (StateId y = 0; y < second.children().size(); ++y) {
        extended[e] = y;
        children.push_back(graft(second.child(y), extended));
    }
    return PolicyTree::select(e, std::move(children));
}

PolicyTree concat_from(const PolicyTree& first, const PolicyTree& second, std::vector<std::optional<StateId>>& known) {
    if (first.is_terminal()) return graft(second, known);
    const ElementId e = first.element();
    if (known.size() <= e) known.resize(e + 1);
    std::vector<PolicyTree> children;
    children.reserve(first.children().size());
    for (StateId y = 0; y < first.children().size(); ++y) {
        known[e] = y;
        children.push_back(concat_from(first.child(y), second, known));
    }
    known[e].reset();
    return PolicyTree::select(e, std::move(children));
}

} // namespace

void validate(const Instance& instance, const PolicyTree& policy) { validate_from(instance, policy, 0); }

PolicyTree chain_policy(std::span<const ElementId> order, std::size_t num_states) {
    return chain_from(order, num_states);
}

std::vector<ElementId> selections(const PolicyTree& policy, const Realization& realization) {
    std::vector<ElementId> out;
    const PolicyTree* node = &policy;
    while (!node->is_terminal()) {
        const ElementId e = node->element();
        if (e >= realization.size()) throw MalformedPolicy("policy selects an element outside V");
        out.push_back(e);
        node = &node->child(realization[e]);
    }
    return out;
}

PolicyTree concat(const PolicyTree& first, const PolicyTree& second) {
    std::vector<std::optional<StateId>> known;
    return concat_from(first, second, known);
}

} // namespace maxgain
