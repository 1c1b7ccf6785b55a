#include "maxgain/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "maxgain/errors.hpp"
#include "maxgain/evaluation.hpp"
#include "maxgain/expectation.hpp"
#include "maxgain/oracle.hpp"
#include "maxgain/threshold.hpp"

namespace maxgain {

namespace {

constexpr std::array<std::pair<BoundId, std::string_view>, 10> kNames{{
    {BoundId::Thm1, "thm1"},
    {BoundId::Thm2, "thm2"},
    {BoundId::Thm6, "thm6"},
    {BoundId::Eq1, "eq1"},
    {BoundId::Eq2, "eq2"},
    {BoundId::Eq3, "eq3"},
    {BoundId::Eq4, "eq4"},
    {BoundId::Eq5, "eq5"},
    {BoundId::Lemma2, "lemma2"},
    {BoundId::Lemma3, "lemma3"},
}};

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_size(double n) { return std::max(n, 1.0); }

class Builder {
public:
    Builder(BoundId id, const BoundContext& context) : context_(context) { report_.id = id; }

    void input(std::string name, double value, std::string source) {
        report_.inputs.push_back({std::move(name), value, std::move(source)});
    }

    void hard(std::string name, bool passed, std::string detail) {
        report_.preconditions.push_back({name, passed, true, detail});
        if (!passed)
            throw PreconditionFailed(std::string(to_string(report_.id)) + ": " + name + " failed: " + detail);
    }

    void soft(std::string name, bool passed, std::string detail) {
        report_.preconditions.push_back({std::move(name), passed, false, std::move(detail)});
    }

    void note(std::string text) { report_.diagnostics.push_back(std::move(text)); }

    // lhs ≥ rhs oriented.
    BoundReport at_least(double lhs, double rhs) {
        report_.lhs = lhs;
        report_.rhs = rhs;
        return finish(lhs - rhs);
    }

    // lhs ≤ rhs oriented.
    BoundReport at_most(double lhs, double rhs) {
        report_.lhs = lhs;
        report_.rhs = rhs;
        return finish(rhs - lhs);
    }

    BoundReport finish(double slack) {
        report_.slack = slack;
        report_.holds = slack >= -context_.numerics.tolerance;
        return std::move(report_);
    }

    BoundReport& report() { return report_; }

private:
    const BoundContext& context_;
    BoundReport report_;
};

const Instance& instance_of(const BoundContext& context) {
    if (!context.instance) throw PreconditionFailed("no instance supplied");
    if (!context.instance->has_utility()) throw PreconditionFailed("instance has no utility attached");
    return *context.instance;
}

const PolicyTree& reference_of(const BoundContext& context, BoundId id) {
    if (!context.reference)
        throw PreconditionFailed(std::string(to_string(id)) + " needs a reference policy");
    validate(instance_of(context), *context.reference);
    return *context.reference;
}

const Instance& modified_of(const BoundContext& context, BoundId id) {
    if (!context.modified) throw PreconditionFailed(std::string(to_string(id)) + " needs the modified-prior instance");
    return *context.modified;
}

void check_monotone(Builder& b, const Instance& instance, const Numerics& numerics) {
    const auto check = check_adaptive_monotone(instance, numerics);
    b.soft("adaptive monotone", check.holds,
           check.witness ? "negative gain of " + instance.elements()[check.witness->element] + " at " +
                               describe(instance, check.witness->context)
                         : "");
}

void check_submodular(Builder& b, const Instance& instance, const Numerics& numerics) {
    const auto check = check_adaptive_submodular(instance, numerics);
    b.soft("adaptive submodular", check.holds,
           check.witness ? "gain of " + instance.elements()[check.witness->element] + " rises from " +
                               describe(instance, check.witness->smaller) + " to " +
                               describe(instance, check.witness->larger)
                         : "");
}

void check_greedy(Builder& b, double alpha_value, const Numerics& numerics) {
    b.soft("greedy (alpha = 1)", std::abs(alpha_value - 1.0) <= numerics.tolerance,
           "alpha = " + std::to_string(alpha_value));
}

// π must be the canonical π′_l of its base for budget l.
void check_canonical(Builder& b, const BoundContext& context, int budget) {
    const Instance& instance = instance_of(context);
    const PolicyTree& base = base_of(context.policy);
    const double cost = c_avg(instance, context.policy, context.numerics);
    b.hard("average cost equals l", std::abs(cost - budget) <= context.numerics.tolerance * 10,
           "c_avg = " + std::to_string(cost) + ", l = " + std::to_string(budget));
    const auto pair = find_threshold_pair(instance, base, budget, context.numerics);
    bool same = true;
    for (RealizationId r = 0; r < instance.num_realizations() && same; ++r) {
        if (instance.prior()[r] <= 0.0) continue;
        same = same_traces(run(instance, context.policy, r, context.numerics),
                           run(instance, Policy{pair.policy}, r, context.numerics), context.numerics.tolerance);
    }
    b.hard("policy is the threshold sub-policy pi_l of its base", same,
           "canonical pair tau = " + std::to_string(pair.tau) + ", rho = " + std::to_string(pair.rho));
}

struct Ratio {
    double beta;
    double gamma;
    double value;
};

Ratio ratio_parameter(Builder& b, const Instance& instance, const Policy& policy, int n, int k,
                      const BoundContext& context, const std::string& prior_label) {
    const auto beta_result = beta(instance, policy, context.numerics);
    const auto gamma_result = gamma(instance, n, k, context.gamma, context.numerics);
    b.input("beta" + prior_label, beta_result.value, prior_label.empty() ? "beta(policy)" : "beta(policy) under p'");
    b.input("gamma" + prior_label, gamma_result.value,
            gamma_result.mode == GammaMode::Exact ? "gamma exact" : "gamma sampled upper bound");
    b.input("gamma_n", n, "height of policy");
    b.input("gamma_k", k, "height of reference");
    if (beta_result.empty_range) b.note("c_avg below 1: empty budget range, beta reported as 0");
    if (gamma_result.vacuous) b.note("no context had a non-negligible policy gain; gamma defaults to 1");
    if (gamma_result.anomaly) b.note("raw gamma minimum below zero");
    if (gamma_result.mode == GammaMode::SampledUpperBound)
        b.note("gamma is a sampled upper bound; the bound is only indicative");
    double value;
    if (gamma_result.value <= 1e-12 || std::isinf(beta_result.value)) {
        value = kInf;
        b.note("beta/gamma is unbounded; the guarantee degenerates");
    } else {
        value = beta_result.value / gamma_result.value;
    }
    return {beta_result.value, gamma_result.value, value};
}

int policy_height(const BoundContext& context) {
    return static_cast<int>(height(instance_of(context), context.policy, context.numerics));
}

double log_n(Builder& b, const BoundContext& context) {
    const double n = context.ground_set_log ? static_cast<double>(instance_of(context).num_elements())
                                            : static_cast<double>(policy_height(context));
    b.input("n_log", n, context.ground_set_log ? "|V|" : "height of policy");
    if (n < 1.0) b.note("n = 0 in the log term is replaced by 1");
    return log_size(n);
}

BoundReport verify_thm1(const BoundContext& context) {
    Builder b(BoundId::Thm1, context);
    const Instance& instance = instance_of(context);
    const PolicyTree& reference = reference_of(context, BoundId::Thm1);
    if (!context.budget) throw PreconditionFailed("thm1 needs the budget l");
    const int l = *context.budget;
    check_canonical(b, context, l);
    check_monotone(b, instance, context.numerics);
    const int n = policy_height(context);
    const int k = static_cast<int>(reference.height());
    const auto ratio = ratio_parameter(b, instance, context.policy, n, k, context, "");
    const double c_star = c_avg(instance, reference, context.numerics);
    const double f_star = f_avg(instance, reference, context.numerics);
    const double lhs = f_avg(instance, context.policy, context.numerics);
    b.input("l", l, "budget");
    b.input("c_avg_reference", c_star, "c_avg(reference)");
    b.input("f_avg_reference", f_star, "f_avg(reference)");
    b.input("f_avg_policy", lhs, "f_avg(policy)");
    return b.at_least(lhs, thm1_rhs(l, ratio.value, c_star, f_star));
}

struct Covering {
    double q;
    double eta;
};

Covering covering_inputs(Builder& b, const Instance& instance, const Numerics& numerics) {
    const auto params = covering_params(instance, numerics);
    b.input("Q", params.q, "covering_params");
    b.input("eta", params.eta, "covering_params");
    return {params.q, params.eta};
}

BoundReport verify_thm2(const BoundContext& context) {
    Builder b(BoundId::Thm2, context);
    const Instance& instance = instance_of(context);
    const PolicyTree& reference = reference_of(context, BoundId::Thm2);
    check_monotone(b, instance, context.numerics);
    const auto cov = covering_inputs(b, instance, context.numerics);
    b.hard("reference achieves covering", covers(instance, reference, cov.q, context.numerics), "f = Q on every realization");
    const int n = policy_height(context);
    const int k = static_cast<int>(reference.height());
    const auto ratio = ratio_parameter(b, instance, context.policy, n, k, context, "");
    const double c_star = c_avg(instance, reference, context.numerics);
    const double lhs = c_avg(instance, context.policy, context.numerics);
    b.input("c_avg_reference", c_star, "c_avg(reference)");
    b.input("c_avg_policy", lhs, "c_avg(policy)");
    return b.at_most(lhs, thm2_rhs(ratio.value, c_star, log_n(b, context), cov.q, cov.eta));
}

void check_modified_reference(Builder& b, const Instance& modified, const PolicyTree& reference,
                              const Numerics& numerics) {
    b.hard("reference covers every hypothesis", covers(modified, reference, 1.0, numerics),
           "version space is a singleton on every realization");
    b.hard("reference height at most |Phi|", reference.height() <= modified.num_realizations(),
           "height " + std::to_string(reference.height()));
}

BoundReport verify_thm6(const BoundContext& context) {
    Builder b(BoundId::Thm6, context);
    const Instance& instance = instance_of(context);
    const Instance& modified = modified_of(context, BoundId::Thm6);
    const PolicyTree& reference = reference_of(context, BoundId::Thm6);
    check_monotone(b, instance, context.numerics);
    const auto cov = covering_inputs(b, modified, context.numerics);
    b.hard("reference achieves covering", covers(modified, reference, cov.q, context.numerics),
           "f = Q on every realization");
    b.hard("reference height at most |Phi|", reference.height() <= modified.num_realizations(),
           "height " + std::to_string(reference.height()));
    const int n = policy_height(context);
    const int k = static_cast<int>(reference.height());
    const auto ratio = ratio_parameter(b, modified, context.policy, n, k, context, "_modified");
    const double c_star = c_avg(instance, reference, context.numerics);
    const double lhs = c_avg(instance, context.policy, context.numerics);
    b.input("c_avg_reference", c_star, "c_avg(reference) under p");
    b.input("c_avg_policy", lhs, "c_avg(policy) under p");
    return b.at_most(lhs, thm6_rhs(ratio.value, c_star, log_n(b, context), cov.q, cov.eta));
}

BoundReport verify_eq5(const BoundContext& context) {
    Builder b(BoundId::Eq5, context);
    const Instance& instance = instance_of(context);
    const Instance& modified = modified_of(context, BoundId::Eq5);
    const PolicyTree& reference = reference_of(context, BoundId::Eq5);
    check_modified_reference(b, modified, reference, context.numerics);
    const auto beta_result = beta(modified, context.policy, context.numerics);
    if (beta_result.empty_range) b.note("c_avg below 1: empty budget range, beta reported as 0");
    const double phi = static_cast<double>(modified.num_realizations());
    const double n = log_n(b, context);
    const double c_star = c_avg(instance, reference, context.numerics);
    const double lhs = c_avg(instance, context.policy, context.numerics);
    b.input("beta_modified", beta_result.value, "beta under the modified prior");
    b.input("num_realizations", phi, "|Phi|");
    b.input("c_avg_reference", c_star, "c_avg(reference) under p");
    b.input("c_avg_policy", lhs, "c_avg(policy) under p");
    const double rhs = std::isinf(beta_result.value)
                           ? kInf
                           : 2.0 * (beta_result.value * (c_star + 1.0) + 1.0) * std::log(2.0 * phi * phi * n) + 4.0;
    return b.at_most(lhs, rhs);
}

BoundReport verify_eq1(const BoundContext& context) {
    Builder b(BoundId::Eq1, context);
    const Instance& instance = instance_of(context);
    const PolicyTree& reference = reference_of(context, BoundId::Eq1);
    check_submodular(b, instance, context.numerics);
    const auto a = alpha(instance, context.policy, context.numerics);
    const double l = policy_height(context);
    const double k = static_cast<double>(reference.height());
    const double f_star = f_avg(instance, reference, context.numerics);
    const double lhs = f_avg(instance, context.policy, context.numerics);
    b.input("alpha", a.value, "alpha(policy)");
    b.input("l", l, "height of policy");
    b.input("k", k, "height of reference");
    b.input("f_avg_reference", f_star, "f_avg(reference)");
    b.input("f_avg_policy", lhs, "f_avg(policy)");
    double rhs;
    if (std::isinf(a.value)) {
        rhs = 0.0;
        b.note("alpha is infinite; rhs reported as 0");
    } else if (k == 0.0) {
        rhs = l > 0.0 ? f_star : 0.0;
    } else {
        rhs = (1.0 - std::exp(-l / (a.value * k))) * f_star;
    }
    return b.at_least(lhs, rhs);
}

BoundReport verify_eq2(const BoundContext& context) {
    Builder b(BoundId::Eq2, context);
    const Instance& instance = instance_of(context);
    const PolicyTree& reference = reference_of(context, BoundId::Eq2);
    const auto a = alpha(instance, context.policy, context.numerics);
    check_greedy(b, a.value, context.numerics);
    const int l = policy_height(context);
    const int k = static_cast<int>(reference.height());
    const auto g = gamma(instance, l, k, context.gamma, context.numerics);
    if (g.vacuous) b.note("no context had a non-negligible policy gain; gamma defaults to 1");
    const double f_star = f_avg(instance, reference, context.numerics);
    const double lhs = f_avg(instance, context.policy, context.numerics);
    b.input("gamma", g.value, g.mode == GammaMode::Exact ? "gamma exact" : "gamma sampled upper bound");
    b.input("l", l, "height of policy");
    b.input("k", k, "height of reference");
    b.input("f_avg_reference", f_star, "f_avg(reference)");
    b.input("f_avg_policy", lhs, "f_avg(policy)");
    const double rhs = k == 0 ? (l > 0 ? f_star : 0.0) : (1.0 - std::exp(-g.value * l / k)) * f_star;
    return b.at_least(lhs, rhs);
}

BoundReport verify_eq3(const BoundContext& context) {
    Builder b(BoundId::Eq3, context);
    const Instance& instance = instance_of(context);
    const PolicyTree& reference = reference_of(context, BoundId::Eq3);
    if (!context.budget) throw PreconditionFailed("eq3 needs the budget l");
    const int l = *context.budget;
    check_canonical(b, context, l);
    check_submodular(b, instance, context.numerics);
    check_greedy(b, alpha(instance, context.policy, context.numerics).value, context.numerics);
    const double c_star = c_avg(instance, reference, context.numerics);
    const double f_star = f_avg(instance, reference, context.numerics);
    const double lhs = f_avg(instance, context.policy, context.numerics);
    b.input("l", l, "budget");
    b.input("c_avg_reference", c_star, "c_avg(reference)");
    b.input("f_avg_reference", f_star, "f_avg(reference)");
    b.input("f_avg_policy", lhs, "f_avg(policy)");
    return b.at_least(lhs, (1.0 - std::exp(-l / (c_star + 1.0))) * f_star);
}

BoundReport verify_eq4(const BoundContext& context) {
    Builder b(BoundId::Eq4, context);
    const Instance& instance = instance_of(context);
    const PolicyTree& reference = reference_of(context, BoundId::Eq4);
    const auto cov = covering_inputs(b, instance, context.numerics);
    b.hard("reference achieves covering", covers(instance, reference, cov.q, context.numerics), "f = Q on every realization");
    check_submodular(b, instance, context.numerics);
    check_greedy(b, alpha(instance, context.policy, context.numerics).value, context.numerics);
    const double v = static_cast<double>(instance.num_elements());
    const double c_star = c_avg(instance, reference, context.numerics);
    const double lhs = c_avg(instance, context.policy, context.numerics);
    b.input("ground_set_size", v, "|V|");
    b.input("c_avg_reference", c_star, "c_avg(reference)");
    b.input("c_avg_policy", lhs, "c_avg(policy)");
    return b.at_most(lhs, eq4_rhs(c_star, v, cov.q, cov.eta));
}

BoundReport verify_lemma2(const BoundContext& context) {
    Builder b(BoundId::Lemma2, context);
    const Instance& instance = instance_of(context);
    const PolicyTree& base = base_of(context.policy);
    const PolicyProfile profile(instance, base, context.numerics);
    const int top = static_cast<int>(std::floor(profile.expected_cost() + context.numerics.tolerance));
    b.input("budgets", top, "floor(c_avg(base))");
    if (top < 1) {
        b.note("base policy has c_avg below 1; no budget to check");
        return b.finish(0.0);
    }
    double slack = kInf;
    int witness = 0;
    double previous = f_avg(instance, Policy{find_threshold_pair(profile, base, 0).policy}, context.numerics);
    for (int i = 1; i <= top; ++i) {
        const auto pair = find_threshold_pair(profile, base, i);
        const double current = f_avg(instance, Policy{pair.policy}, context.numerics);
        const double increment = current - previous;
        const double lower = frontier_gains(profile, base, i).delta_l;
        if (increment - lower < slack) {
            slack = increment - lower;
            witness = i;
            b.report().lhs = increment;
            b.report().rhs = lower;
        }
        previous = current;
    }
    b.input("witness_budget", witness, "budget with the smallest slack");
    return b.finish(slack);
}

BoundReport verify_lemma3(const BoundContext& context) {
    Builder b(BoundId::Lemma3, context);
    const Instance& instance = instance_of(context);
    const auto cov = covering_inputs(b, instance, context.numerics);
    OptimalPolicy pruned;
    OptimalPolicy unpruned;
    try {
        pruned = optimal_coverage(instance, cov.q, CoveragePruning::Pruned, context.numerics);
        unpruned = optimal_coverage(instance, cov.q, CoveragePruning::Unpruned, context.numerics);
    } catch (const CoverageUnreachable& e) {
        b.hard("covering is achievable", false, e.what());
    }
    const double size = static_cast<double>(instance.num_realizations());
    const double h = static_cast<double>(pruned.policy.height());
    b.input("pruned_cost", pruned.value, "optimal_coverage pruned");
    b.input("unpruned_cost", unpruned.value, "optimal_coverage unpruned");
    b.input("num_realizations", size, "|Phi|");
    b.report().lhs = h;
    b.report().rhs = size;
    return b.finish(std::min(size - h, 0.0 - std::abs(pruned.value - unpruned.value)));
}

} // namespace

std::string_view to_string(BoundId id) {
    for (const auto& [key, name] : kNames)
        if (key == id) return name;
    return "unknown";
}

std::optional<BoundId> parse_bound_id(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    for (const auto& [key, name] : kNames)
        if (name == lower) return key;
    return std::nullopt;
}

std::vector<BoundId> all_bound_ids() {
    std::vector<BoundId> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
}

double thm1_rhs(double l, double ratio, double c_star, double f_star) {
    if (!std::isfinite(ratio)) return 0.0;
    return (1.0 - std::exp(-l / (ratio * c_star + 1.0))) * f_star;
}

double thm2_rhs(double ratio, double c_star, double n, double q, double eta) {
    if (!std::isfinite(ratio)) return kInf;
    return (ratio * c_star + 1.0) * std::log(n * q / eta) + 2.0;
}

double thm6_rhs(double ratio, double c_star, double n, double q, double eta) {
    if (!std::isfinite(ratio)) return kInf;
    return 2.0 * (ratio * (c_star + 1.0) + 1.0) * std::log(n * q / eta) + 4.0;
}

double eq4_rhs(double c_star, double ground_set_size, double q, double eta) {
    return (c_star + 1.0) * std::log(ground_set_size * q / eta) + 1.0;
}

BoundReport verify(BoundId id, const BoundContext& context) {
    switch (id) {
    case BoundId::Thm1: return verify_thm1(context);
    case BoundId::Thm2: return verify_thm2(context);
    case BoundId::Thm6: return verify_thm6(context);
    case BoundId::Eq1: return verify_eq1(context);
    case BoundId::Eq2: return verify_eq2(context);
    case BoundId::Eq3: return verify_eq3(context);
    case BoundId::Eq4: return verify_eq4(context);
    case BoundId::Eq5: return verify_eq5(context);
    case BoundId::Lemma2: return verify_lemma2(context);
    case BoundId::Lemma3: return verify_lemma3(context);
    }
    throw InvalidParams("unknown bound");
}

} // namespace maxgain
