#include "maxgain/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "maxgain/errors.hpp"
#include "maxgain/evaluation.hpp"
#include "maxgain/expectation.hpp"
#include "maxgain/oracle.hpp"

namespace maxgain {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNegligible = 1e-12;

double greedy_ratio(double best, double chosen, double tol) {
    if (best <= tol) return chosen >= best - tol ? 1.0 : kInf;
    if (chosen <= tol) return kInf;
    return std::max(1.0, best / chosen);
}

void alpha_walk(const Instance& instance, const PolicyTree& node, const PartialRealization& psi,
                const Numerics& numerics, AlphaResult& result) {
    if (node.is_terminal() || version_space_mass(instance, psi) <= 0.0) return;
    const auto gains = marginal_gains(instance, psi);
    double best = -kInf;
    for (ElementId v = 0; v < instance.num_elements(); ++v)
        if (!psi.observes(v)) best = std::max(best, gains[v]);
    const double ratio = greedy_ratio(best, gains[node.element()], numerics.tolerance);
    if (!result.witness || ratio > result.value) {
        result.value = std::max(result.value, ratio);
        result.witness = psi;
    }
    for (StateId y = 0; y < instance.num_states(); ++y)
        alpha_walk(instance, node.child(y), psi.extended(node.element(), y), numerics, result);
}

} // namespace

AlphaResult alpha(const Instance& instance, const Policy& policy, const Numerics& numerics) {
    AlphaResult result;
    for (const auto& b : branches(instance, policy, numerics)) alpha_walk(instance, b.tree, {}, numerics, result);
    return result;
}

FrontierGains frontier_gains(const Instance& instance, const PolicyTree& base, int budget, const Numerics& numerics) {
    return frontier_gains(PolicyProfile(instance, base, numerics), base, budget);
}

FrontierGains frontier_gains(const PolicyProfile& profile, const PolicyTree& base, int budget) {
    if (budget < 1) throw InvalidParams("frontier gains need a budget of at least 1");
    const auto pair = find_threshold_pair(profile, base, budget);
    FrontierGains out;
    out.budget = budget;
    out.tau = pair.tau;
    out.rho = pair.rho;
    double upper = -kInf;
    double lower = kInf;
    std::vector<TerminationRule> rules;
    if (pair.rho > 0.0) rules.push_back(TerminationRule::Strict);
    if (pair.rho < 1.0) rules.push_back(TerminationRule::NonStrict);
    for (TerminationRule rule : rules)
        for (const auto& node : profile.nodes()) {
            if (profile.selects(node, pair.tau, rule)) {
                if (node.selected_gain() < lower) {
                    lower = node.selected_gain();
                    out.lower_witness = node.psi;
                }
            } else if (profile.reached(node, pair.tau, rule) && node.max_remaining_gain > upper) {
                upper = node.max_remaining_gain;
                out.upper_witness = node.psi;
            }
        }
    out.delta_u = std::isinf(upper) ? 0.0 : upper;
    out.delta_l = std::isinf(lower) ? 0.0 : lower;
    return out;
}

double gain_ratio(double numerator, double denominator) {
    if (std::abs(denominator) <= kNegligible) return numerator <= kNegligible ? 0.0 : kInf;
    return numerator / denominator;
}

BetaResult beta(const Instance& instance, const Policy& policy, const Numerics& numerics) {
    const PolicyTree& base = base_of(policy);
    const PolicyProfile profile(instance, base, numerics);
    double cost = profile.expected_cost();
    if (const auto* tsp = std::get_if<ThresholdSubPolicy>(&policy))
        cost = tsp->rho * profile.expected_cost(tsp->tau, TerminationRule::Strict) +
               (1.0 - tsp->rho) * profile.expected_cost(tsp->tau, TerminationRule::NonStrict);
    BetaResult result;
    const int top = static_cast<int>(std::floor(cost + numerics.tolerance));
    if (top < 1) {
        result.empty_range = true;
        return result;
    }
    for (int i = 1; i <= top; ++i) {
        auto fg = frontier_gains(profile, base, i);
        const double ratio = gain_ratio(fg.delta_u, fg.delta_l);
        if (i == 1 || ratio > result.value) {
            result.value = ratio;
            result.witness_budget = i;
        }
        result.per_budget.push_back(std::move(fg));
    }
    return result;
}

namespace {

struct GammaAccumulator {
    GammaResult& result;
    bool any = false;

    void consider(double numerator, double denominator, const PartialRealization& context, const PolicyTree& policy) {
        ++result.policies_evaluated;
        if (std::abs(denominator) <= kNegligible) return;
        const double ratio = numerator / denominator;
        if (!any || ratio < result.raw_minimum) {
            result.raw_minimum = ratio;
            result.witness_context = context;
            result.witness_policy = policy;
        }
        any = true;
    }
};

struct ContextData {
    ConditionalPrior vs;
    std::vector<double> gains;
    ElementSet dom;
};

std::pair<double, double> gamma_terms(const Instance& instance, const ContextData& ctx, const PolicyTree& policy) {
    double numerator = 0.0;
    double denominator = 0.0;
    for (std::size_t i = 0; i < ctx.vs.support.size(); ++i) {
        const RealizationId r = ctx.vs.support[i];
        ElementSet chosen = 0;
        double sum = 0.0;
        for (ElementId e : selections(policy, instance.realizations()[r])) {
            chosen = with(chosen, e);
            sum += ctx.gains[e];
        }
        numerator += ctx.vs.weights[i] * sum;
        denominator += ctx.vs.weights[i] * (instance.utility(chosen | ctx.dom, r) - instance.utility(ctx.dom, r));
    }
    return {numerator, denominator};
}

PolicyTree random_policy(std::size_t num_elements, std::size_t num_states, ElementSet excluded, int k,
                         std::mt19937_64& rng) {
    std::vector<ElementId> free;
    for (ElementId e = 0; e < num_elements; ++e)
        if (!contains(excluded, e)) free.push_back(e);
    if (k <= 0 || free.empty() || std::uniform_int_distribution<std::size_t>(0, free.size())(rng) == 0)
        return PolicyTree::terminal();
    const ElementId pick = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
    std::vector<PolicyTree> children;
    for (StateId y = 0; y < num_states; ++y)
        children.push_back(random_policy(num_elements, num_states, with(excluded, pick), k - 1, rng));
    return PolicyTree::select(pick, std::move(children));
}

} // namespace

std::uint64_t gamma_enumeration_size(const Instance& instance, int n, int k) {
    std::uint64_t total = 0;
    for (const auto& ctx : positive_partial_realizations(instance, static_cast<std::size_t>(std::max(n, 0)))) {
        const std::uint64_t count =
            policy_count(instance.num_elements() - ctx.size(), instance.num_states(), k);
        total = count > std::numeric_limits<std::uint64_t>::max() - total ? std::numeric_limits<std::uint64_t>::max()
                                                                        : total + count;
    }
    return total;
}

GammaResult gamma(const Instance& instance, int n, int k, const GammaOptions& options, const Numerics& numerics) {
    if (n < 0 || k < 0) throw InvalidParams("gamma needs non-negative n and k");
    GammaResult result;
    result.mode = options.mode;
    result.n = n;
    result.k = k;
    if (options.mode == GammaMode::Exact) {
        const auto size = gamma_enumeration_size(instance, n, k);
        if (size > numerics.enumeration_budget)
            throw EnumerationBudgetExceeded("exact gamma needs " + std::to_string(size) +
                                            " policy evaluations; use sampled mode or raise the budget");
    }
    GammaAccumulator acc{result};
    std::mt19937_64 rng(options.seed);
    Numerics unlimited = numerics;
    unlimited.enumeration_budget = std::numeric_limits<std::uint64_t>::max();
    for (const auto& context : positive_partial_realizations(instance, static_cast<std::size_t>(n))) {
        const ContextData ctx{version_space(instance, context), marginal_gains(instance, context), context.domain()};
        auto consider = [&](const PolicyTree& policy) {
            const auto [num, den] = gamma_terms(instance, ctx, policy);
            acc.consider(num, den, context, policy);
        };
        if (options.mode == GammaMode::Exact) {
            enumerate_policies(instance, k, ctx.dom, consider, unlimited);
        } else {
            for (std::uint64_t s = 0; s < options.samples_per_context; ++s)
                consider(random_policy(instance.num_elements(), instance.num_states(), ctx.dom, k, rng));
        }
    }
    if (!acc.any) {
        result.vacuous = true;
        result.raw_minimum = 1.0;
    }
    result.anomaly = result.raw_minimum < -numerics.tolerance;
    result.value = std::clamp(result.raw_minimum, 0.0, 1.0);
    return result;
}

CoveringParams covering_params(const Instance& instance, const Numerics& numerics) {
    CoveringParams out;
    bool first = true;
    const std::size_t subsets = std::size_t{1} << instance.num_elements();
    for (RealizationId r = 0; r < instance.num_realizations(); ++r) {
        if (instance.prior()[r] <= 0.0) continue;
        for (std::size_t a = 0; a < subsets; ++a) {
            const double v = instance.utility(static_cast<ElementSet>(a), r);
            if (first || v > out.q) {
                out.q = v;
                out.q_set = static_cast<ElementSet>(a);
                out.q_realization = r;
                first = false;
            }
        }
    }
    for (RealizationId r = 0; r < instance.num_realizations(); ++r) {
        if (instance.prior()[r] <= 0.0) continue;
        for (std::size_t a = 0; a < subsets; ++a) {
            const double v = instance.utility(static_cast<ElementSet>(a), r);
            if (v < out.q - numerics.tolerance && (!out.runner_up || v > *out.runner_up)) out.runner_up = v;
        }
    }
    out.eta = out.runner_up ? out.q - *out.runner_up : out.q;
    return out;
}

ParamReport compute_params(const Instance& instance, const Policy& policy, const ParamOptions& options,
                           const Numerics& numerics) {
    ParamReport report;
    report.alpha = alpha(instance, policy, numerics);
    report.beta = beta(instance, policy, numerics);
    if (options.gamma) report.gamma = gamma(instance, options.n, options.k, *options.gamma, numerics);
    report.covering = covering_params(instance, numerics);
    report.f_avg = f_avg(instance, policy, numerics);
    report.c_avg = c_avg(instance, policy, numerics);
    report.theorem3_consistent =
        std::isinf(report.alpha.value) || report.beta.value <= report.alpha.value + numerics.tolerance;
    return report;
}

} // namespace maxgain
