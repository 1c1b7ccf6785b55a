#pragma once

// Brute-force reference computations for tests. These read only the raw instance data
// (realizations, prior, utility table) and walk policy trees node by node; they do not
// call the library's conditioning, evaluation, threshold or search code.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "maxgain/instance.hpp"
#include "maxgain/policy_tree.hpp"

namespace oracle {

using maxgain::ElementId;
using maxgain::Instance;
using maxgain::PolicyTree;
using maxgain::RealizationId;
using maxgain::StateId;

/// Observations as an element -> state map.
using Obs = std::map<ElementId, StateId>;

inline unsigned mask_of(const Obs& obs) {
    unsigned m = 0;
    for (const auto& [e, y] : obs) m |= 1U << e;
    return m;
}

inline bool agrees(const Instance& inst, RealizationId r, const Obs& obs) {
    for (const auto& [e, y] : obs)
        if (inst.realizations()[r][e] != y) return false;
    return true;
}

inline double mass(const Instance& inst, const Obs& obs) {
    double m = 0.0;
    for (RealizationId r = 0; r < inst.num_realizations(); ++r)
        if (agrees(inst, r, obs)) m += inst.prior()[r];
    return m;
}

/// E[g(r) | φ ∼ obs] with the prior restricted to consistent realizations.
inline double conditional(const Instance& inst, const Obs& obs, const std::function<double(RealizationId)>& g) {
    double num = 0.0, den = 0.0;
    for (RealizationId r = 0; r < inst.num_realizations(); ++r) {
        if (inst.prior()[r] <= 0.0 || !agrees(inst, r, obs)) continue;
        num += inst.prior()[r] * g(r);
        den += inst.prior()[r];
    }
    return num / den;
}

inline double gain(const Instance& inst, ElementId v, const Obs& obs) {
    if (obs.count(v)) return 0.0;
    const unsigned a = mask_of(obs);
    return conditional(inst, obs, [&](RealizationId r) {
        return inst.utility_table()(a | (1U << v), r) - inst.utility_table()(a, r);
    });
}

inline double max_remaining(const Instance& inst, const Obs& obs) {
    double best = -std::numeric_limits<double>::infinity();
    for (ElementId v = 0; v < inst.num_elements(); ++v)
        if (!obs.count(v)) best = std::max(best, gain(inst, v, obs));
    return std::isinf(best) ? 0.0 : best;
}

/// Elements a deterministic tree selects on realization r.
inline std::vector<ElementId> walk(const PolicyTree& tree, const Instance& inst, RealizationId r) {
    std::vector<ElementId> out;
    const PolicyTree* node = &tree;
    while (!node->is_terminal()) {
        out.push_back(node->element());
        node = &node->child(inst.realizations()[r][node->element()]);
    }
    return out;
}

inline unsigned set_of(const std::vector<ElementId>& elements) {
    unsigned m = 0;
    for (auto e : elements) m |= 1U << e;
    return m;
}

/// Run of a threshold sub-policy with a fixed rule, recomputing every gain along the way.
/// strict: continue iff max gain ≥ τ − tol; otherwise continue iff max gain > τ + tol.
inline std::vector<ElementId> walk_threshold(const PolicyTree& base, const Instance& inst, RealizationId r, double tau,
                                             bool strict, double tol = 1e-9) {
    std::vector<ElementId> out;
    Obs obs;
    const PolicyTree* node = &base;
    while (!node->is_terminal()) {
        const double g = max_remaining(inst, obs);
        const bool go = strict ? g >= tau - tol : g > tau + tol;
        if (!go) break;
        const ElementId e = node->element();
        out.push_back(e);
        obs[e] = inst.realizations()[r][e];
        node = &node->child(obs[e]);
    }
    return out;
}

struct Value {
    double f = 0.0;
    double c = 0.0;
};

inline Value evaluate(const Instance& inst, const std::function<std::vector<ElementId>(RealizationId)>& run) {
    Value v;
    for (RealizationId r = 0; r < inst.num_realizations(); ++r) {
        const double p = inst.prior()[r];
        if (p <= 0.0) continue;
        const auto sel = run(r);
        v.f += p * inst.utility_table()(set_of(sel), r);
        v.c += p * static_cast<double>(sel.size());
    }
    return v;
}

inline Value evaluate_tree(const Instance& inst, const PolicyTree& tree) {
    return evaluate(inst, [&](RealizationId r) { return walk(tree, inst, r); });
}

inline Value evaluate_threshold(const Instance& inst, const PolicyTree& base, double tau, double rho) {
    const auto strict = evaluate(inst, [&](RealizationId r) { return walk_threshold(base, inst, r, tau, true); });
    const auto loose = evaluate(inst, [&](RealizationId r) { return walk_threshold(base, inst, r, tau, false); });
    return {rho * strict.f + (1 - rho) * loose.f, rho * strict.c + (1 - rho) * loose.c};
}

/// Every deterministic tree of height ≤ k over `available`, built by plain recursion.
inline std::vector<PolicyTree> trees(const Instance& inst, unsigned available, int k) {
    std::vector<PolicyTree> out{PolicyTree::terminal()};
    if (k == 0) return out;
    for (ElementId v = 0; v < inst.num_elements(); ++v) {
        if (!(available >> v & 1U)) continue;
        const auto sub = trees(inst, available & ~(1U << v), k - 1);
        const std::size_t y = inst.num_states();
        std::vector<std::size_t> pick(y, 0);
        while (true) {
            std::vector<PolicyTree> children;
            for (auto i : pick) children.push_back(sub[i]);
            out.push_back(PolicyTree::select(v, children));
            std::size_t pos = 0;
            while (pos < y && ++pick[pos] == sub.size()) pick[pos++] = 0;
            if (pos == y) break;
        }
    }
    return out;
}

/// Best f_avg over all trees of height ≤ k (exhaustive).
inline double best_budget_value(const Instance& inst, int k) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& t : trees(inst, (1U << inst.num_elements()) - 1, k)) best = std::max(best, evaluate_tree(inst, t).f);
    return best;
}

/// Cheapest c_avg over all trees that reach q on every positive realization (exhaustive).
inline double best_coverage_cost(const Instance& inst, double q, int max_height) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& t : trees(inst, (1U << inst.num_elements()) - 1, max_height)) {
        bool ok = true;
        for (RealizationId r = 0; r < inst.num_realizations() && ok; ++r)
            if (inst.prior()[r] > 0.0) ok = inst.utility_table()(set_of(walk(t, inst, r)), r) >= q - 1e-9;
        if (ok) best = std::min(best, evaluate_tree(inst, t).c);
    }
    return best;
}

/// Worst greedy ratio over reachable positive-mass selections of a tree.
inline double alpha(const Instance& inst, const PolicyTree& tree) {
    double worst = 1.0;
    std::function<void(const PolicyTree&, Obs)> visit = [&](const PolicyTree& node, Obs obs) {
        if (node.is_terminal() || mass(inst, obs) <= 0.0) return;
        // Skip zero-probability-only branches.
        bool positive = false;
        for (RealizationId r = 0; r < inst.num_realizations(); ++r)
            positive = positive || (inst.prior()[r] > 0.0 && agrees(inst, r, obs));
        if (!positive) return;
        const double best = max_remaining(inst, obs);
        const double chosen = gain(inst, node.element(), obs);
        double ratio;
        if (best <= 1e-9)
            ratio = chosen >= best - 1e-9 ? 1.0 : std::numeric_limits<double>::infinity();
        else if (chosen <= 1e-9)
            ratio = std::numeric_limits<double>::infinity();
        else
            ratio = best / chosen;
        worst = std::max(worst, ratio);
        for (StateId y = 0; y < inst.num_states(); ++y) {
            Obs next = obs;
            next[node.element()] = y;
            visit(node.child(y), next);
        }
    };
    visit(tree, {});
    return worst;
}

/// Independent threshold-pair search: scan every achievable gain as τ (descending) and every
/// ρ implied by the two-point mixture; returns (τ, ρ) with c_avg = i.
inline std::optional<std::pair<double, double>> threshold_pair(const Instance& inst, const PolicyTree& base, int i) {
    std::vector<double> gains;
    std::function<void(const PolicyTree&, Obs)> visit = [&](const PolicyTree& node, Obs obs) {
        if (node.is_terminal()) return;
        bool positive = false;
        for (RealizationId r = 0; r < inst.num_realizations(); ++r)
            positive = positive || (inst.prior()[r] > 0.0 && agrees(inst, r, obs));
        if (!positive) return;
        for (ElementId v = 0; v < inst.num_elements(); ++v)
            if (!obs.count(v)) gains.push_back(std::max(0.0, gain(inst, v, obs)));
        for (StateId y = 0; y < inst.num_states(); ++y) {
            Obs next = obs;
            next[node.element()] = y;
            visit(node.child(y), next);
        }
    };
    visit(base, {});
    std::sort(gains.rbegin(), gains.rend());
    for (double tau : gains) {
        const double hi = evaluate_threshold(inst, base, tau, 1.0).c;
        const double lo = evaluate_threshold(inst, base, tau, 0.0).c;
        if (i <= hi + 1e-9 && i >= lo - 1e-9) {
            const double rho = hi - lo > 1e-9 ? std::clamp((i - lo) / (hi - lo), 0.0, 1.0) : 1.0;
            return std::make_pair(tau, rho);
        }
    }
    return std::nullopt;
}

/// Δ^u and Δ^l of π^{τ,ρ} by simulating both rules and recomputing gains at every step.
inline std::pair<double, double> frontier(const Instance& inst, const PolicyTree& base, double tau, double rho) {
    double upper = -std::numeric_limits<double>::infinity();
    double lower = std::numeric_limits<double>::infinity();
    for (bool strict : {true, false}) {
        if ((strict && rho <= 0.0) || (!strict && rho >= 1.0)) continue;
        for (RealizationId r = 0; r < inst.num_realizations(); ++r) {
            if (inst.prior()[r] <= 0.0) continue;
            Obs obs;
            const PolicyTree* node = &base;
            while (true) {
                const double g = max_remaining(inst, obs);
                const bool go = !node->is_terminal() && (strict ? g >= tau - 1e-9 : g > tau + 1e-9);
                if (!go) {
                    upper = std::max(upper, g);
                    break;
                }
                lower = std::min(lower, gain(inst, node->element(), obs));
                obs[node->element()] = inst.realizations()[r][node->element()];
                node = &node->child(obs[node->element()]);
            }
        }
    }
    return {std::isinf(upper) ? 0.0 : upper, std::isinf(lower) ? 0.0 : lower};
}

/// β over integer budgets, using the independent threshold search and frontier.
inline double beta(const Instance& inst, const PolicyTree& base) {
    const double cost = evaluate_tree(inst, base).c;
    double worst = 0.0;
    for (int i = 1; i <= static_cast<int>(std::floor(cost + 1e-9)); ++i) {
        const auto pair = threshold_pair(inst, base, i);
        if (!pair) return std::numeric_limits<double>::quiet_NaN();
        const auto [u, l] = frontier(inst, base, pair->first, pair->second);
        double ratio;
        if (std::abs(l) <= 1e-12)
            ratio = u <= 1e-12 ? 0.0 : std::numeric_limits<double>::infinity();
        else
            ratio = u / l;
        worst = std::max(worst, ratio);
    }
    return worst;
}

/// γ^s_{n,k} by enumerating every positive-mass context and every tree of height ≤ k.
inline double gamma(const Instance& inst, int n, int k) {
    double worst = std::numeric_limits<double>::infinity();
    const unsigned full = (1U << inst.num_elements()) - 1;
    for (unsigned dom = 0; dom <= full; ++dom) {
        if (static_cast<int>(__builtin_popcount(dom)) > n) continue;
        std::map<std::vector<StateId>, bool> seen;
        for (RealizationId r0 = 0; r0 < inst.num_realizations(); ++r0) {
            if (inst.prior()[r0] <= 0.0) continue;
            Obs ctx;
            std::vector<StateId> key;
            for (ElementId e = 0; e < inst.num_elements(); ++e)
                if (dom >> e & 1U) {
                    ctx[e] = inst.realizations()[r0][e];
                    key.push_back(ctx[e]);
                }
            if (!seen.emplace(key, true).second) continue;
            std::vector<double> g(inst.num_elements());
            for (ElementId v = 0; v < inst.num_elements(); ++v) g[v] = gain(inst, v, ctx);
            for (const auto& t : trees(inst, full & ~dom, k)) {
                const double numer = conditional(inst, ctx, [&](RealizationId r) {
                    double s = 0.0;
                    for (auto e : walk(t, inst, r)) s += g[e];
                    return s;
                });
                const double denom = conditional(inst, ctx, [&](RealizationId r) {
                    const unsigned chosen = set_of(walk(t, inst, r)) | dom;
                    return inst.utility_table()(chosen, r) - inst.utility_table()(dom, r);
                });
                if (std::abs(denom) <= 1e-12) continue;
                worst = std::min(worst, numer / denom);
            }
        }
    }
    if (std::isinf(worst)) return 1.0;
    return std::clamp(worst, 0.0, 1.0);
}

/// f_p(A, φ) straight from the definition.
inline double coverage_value(const Instance& structure, const std::vector<double>& prior, unsigned a, RealizationId r) {
    double surviving = 0.0;
    for (RealizationId s = 0; s < structure.num_realizations(); ++s) {
        bool same = true;
        for (ElementId e = 0; e < structure.num_elements(); ++e)
            if ((a >> e & 1U) && structure.realizations()[s][e] != structure.realizations()[r][e]) same = false;
        if (same) surviving += prior[s];
    }
    return 1.0 - surviving + prior[r];
}

} // namespace oracle
