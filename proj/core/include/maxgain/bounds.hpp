#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxgain/instance.hpp"
#include "maxgain/metrics.hpp"
#include "maxgain/policy.hpp"

namespace maxgain {

enum class BoundId {
    Thm1,   ///< f_avg guarantee parameterized by β/γ and c_avg(π*)
    Thm2,   ///< min-cost coverage guarantee parameterized by β/γ
    Thm6,   ///< coverage guarantee with parameters taken under the modified prior
    Eq1,    ///< legacy f_avg bound with α and heights
    Eq2,    ///< legacy f_avg bound for greedy with γ
    Eq3,    ///< legacy f_avg bound for threshold-greedy with average costs
    Eq4,    ///< legacy coverage bound for greedy
    Eq5,    ///< active-learning specialization of Thm6
    Lemma2, ///< per-budget utility increments dominate Δ^l
    Lemma3, ///< optimal coverage needs height ≤ |Φ|
};

std::string_view to_string(BoundId id);
std::optional<BoundId> parse_bound_id(std::string_view text);
std::vector<BoundId> all_bound_ids();

struct BoundInput {
    std::string name;
    double value;
    /// Operation that produced the value.
    std::string source;
};

struct PreconditionResult {
    std::string name;
    bool passed;
    /// Hard preconditions throw PreconditionFailed; soft ones are only reported.
    bool hard;
    std::string detail;
};

struct BoundReport {
    BoundId id;
    double lhs = 0.0;
    double rhs = 0.0;
    /// Oriented so that slack ≥ 0 means the inequality holds.
    double slack = 0.0;
    bool holds = false;
    std::vector<BoundInput> inputs;
    std::vector<PreconditionResult> preconditions;
    std::vector<std::string> diagnostics;
};

struct BoundContext {
    /// (f, p). For Thm6/Eq5 this is the utility under the true prior, where costs are measured.
    const Instance* instance = nullptr;
    Policy policy;
    /// π*: the comparison policy. Required by every bound except Lemma2 and Lemma3.
    std::optional<PolicyTree> reference;
    /// l for Thm1/Eq3: the policy must be the canonical π′_l of its base.
    std::optional<int> budget;
    /// (f, p′) for Thm6/Eq5.
    const Instance* modified = nullptr;
    /// Use |V| instead of the policy height as n in the log terms of Thm2/Thm6.
    bool ground_set_log = false;
    GammaOptions gamma;
    Numerics numerics;
};

/// Evaluates both sides of one inequality from library operations and reports slack.
/// Throws PreconditionFailed when a hard precondition is violated.
BoundReport verify(BoundId id, const BoundContext& context);

/// (1 − exp(−l / (ratio · c* + 1))) · f*, with a non-finite ratio giving 0.
double thm1_rhs(double l, double ratio, double c_star, double f_star);
/// (ratio · c* + 1) · log(n Q / η) + 2.
double thm2_rhs(double ratio, double c_star, double n, double q, double eta);
/// 2 (ratio · (c* + 1) + 1) · log(n Q / η) + 4.
double thm6_rhs(double ratio, double c_star, double n, double q, double eta);
/// (c* + 1) · log(|V| Q / η) + 1.
double eq4_rhs(double c_star, double ground_set_size, double q, double eta);

} // namespace maxgain
