#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "../support/oracles.hpp"
#include "fixtures.hpp"

using namespace maxgain;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST(GainRatioTest, Conventions) {
    EXPECT_EQ(gain_ratio(0.0, 0.0), 0.0);
    EXPECT_EQ(gain_ratio(1.0, 0.0), kInf);
    EXPECT_DOUBLE_EQ(gain_ratio(1.0, 4.0), 0.25);
}

TEST(AlphaTest, GreedyChainsAreExact) {
    auto pair = gen_theorem5(4, 0.25);
    EXPECT_DOUBLE_EQ(alpha(pair.instance, pair.policy).value, 1.0);
    EXPECT_DOUBLE_EQ(alpha(pair.instance, PolicyTree::terminal()).value, 1.0);
}

TEST(AlphaTest, PrefixGainWitnessHasRatioTwo) {
    auto pair = gen_theorem4(3);
    auto a = alpha(pair.instance, pair.policy);
    EXPECT_NEAR(a.value, 2.0, 1e-12);
    ASSERT_TRUE(a.witness.has_value());
    ASSERT_EQ(a.witness->size(), 1u);
    EXPECT_EQ(a.witness->observations()[0].element, 0u);
}

TEST(AlphaTest, ZeroGainSelectionWithPositiveAlternativeIsInfinite) {
    Instance structure({"x", "y"}, {"0"}, {{0, 0}}, {1.0});
    UtilityTable table(2, 1);
    table.at(0b01, 0) = 0.0;
    table.at(0b10, 0) = 1.0;
    table.at(0b11, 0) = 1.0;
    auto inst = structure.with_utility(table);
    auto tree = PolicyTree::select(0, {PolicyTree::terminal()});
    EXPECT_EQ(alpha(inst, tree).value, kInf);
}

TEST(AlphaTest, MatchesOracleOnRandomTrees) {
    std::mt19937_64 rng(2);
    for (const auto& inst : fixtures::corpus(40, 4)) {
        auto tree = random_full_policy(inst, rng);
        EXPECT_NEAR(alpha(inst, tree).value, oracle::alpha(inst, tree), 1e-9);
    }
}

TEST(FrontierTest, GeometricWitnessGains) {
    const double eps = 0.25;
    auto pair = gen_theorem5(4, eps);
    for (int i = 1; i <= 4; ++i) {
        auto fg = frontier_gains(pair.instance, pair.policy, i);
        EXPECT_NEAR(fg.delta_l, std::pow(eps, i), 1e-12) << "i=" << i;
        EXPECT_NEAR(fg.delta_u, i < 4 ? std::pow(eps, i + 1) : 0.0, 1e-12) << "i=" << i;
    }
}

TEST(FrontierTest, PrefixGainWitnessGains) {
    auto pair = gen_theorem4(4);
    for (int i = 1; i <= 4; ++i) {
        auto fg = frontier_gains(pair.instance, pair.policy, i);
        EXPECT_NEAR(fg.delta_l, 0.25, 1e-12) << "i=" << i;
        EXPECT_NEAR(fg.delta_u, i < 4 ? 0.25 : 0.0, 1e-12) << "i=" << i;
    }
}

TEST(FrontierTest, BudgetOutsideRangeThrows) {
    auto pair = gen_theorem5(3, 0.5);
    EXPECT_THROW(frontier_gains(pair.instance, pair.policy, 4), BudgetExceedsCost);
}

TEST(BetaTest, GeometricWitnessEqualsEpsilon) {
    for (double eps : {0.1, 0.25, 0.5, 0.9}) {
        auto pair = gen_theorem5(4, eps);
        EXPECT_NEAR(beta(pair.instance, pair.policy).value, eps, 1e-12);
    }
}

TEST(BetaTest, PrefixGainWitnessEqualsOne) {
    auto pair = gen_theorem4(3);
    EXPECT_NEAR(beta(pair.instance, pair.policy).value, 1.0, 1e-12);
}

TEST(BetaTest, EmptyRangeBelowUnitCost) {
    auto pair = gen_theorem5(3, 0.5);
    auto b = beta(pair.instance, threshold_subpolicy(pair.policy, 0.5, 0.5));
    EXPECT_TRUE(b.empty_range);
    EXPECT_EQ(b.value, 0.0);
}

TEST(BetaTest, ThresholdPolicyUsesItsOwnBudgets) {
    auto pair = gen_theorem5(4, 0.25);
    auto pi2 = find_threshold_pair(pair.instance, pair.policy, 2).policy;
    auto b = beta(pair.instance, pi2);
    EXPECT_EQ(b.per_budget.size(), 2u);
    EXPECT_NEAR(b.value, 0.25, 1e-12);
}

TEST(BetaTest, MatchesOracleOnRandomTrees) {
    std::mt19937_64 rng(8);
    for (const auto& inst : fixtures::corpus(40, 4)) {
        auto tree = random_full_policy(inst, rng);
        const double expected = oracle::beta(inst, tree);
        ASSERT_FALSE(std::isnan(expected));
        EXPECT_NEAR(beta(inst, tree).value, expected, 1e-9);
    }
}

TEST(BetaTest, RatioCanExceedAlphaWhenBaseStopsEarly) {
    auto inst = fixtures::early_stop_instance();
    auto tree = fixtures::early_stop_policy();
    EXPECT_NEAR(alpha(inst, tree).value, 1.0, 1e-12);
    auto b = beta(inst, tree);
    EXPECT_NEAR(b.value, 10.0, 1e-12);
    EXPECT_EQ(b.witness_budget, 2);
    EXPECT_NEAR(oracle::beta(inst, tree), 10.0, 1e-12);
    auto report = compute_params(inst, tree, {.n = 1, .k = 1, .gamma = std::nullopt});
    EXPECT_FALSE(report.theorem3_consistent);
}

TEST(BetaTest, DoesNotExceedAlphaForGreedyOnCorpus) {
    for (const auto& inst : fixtures::corpus(30, 4)) {
        auto tree = build_greedy(inst);
        EXPECT_LE(beta(inst, tree).value, alpha(inst, tree).value + 1e-9);
    }
}

TEST(GammaTest, GeometricWitnessIsOne) {
    auto inst = gen_theorem5(3, 0.5).instance;
    auto g = gamma(inst, 2, 2);
    EXPECT_NEAR(g.value, 1.0, 1e-12);
    EXPECT_FALSE(g.anomaly);
}

TEST(GammaTest, PrefixGainWitness) {
    auto inst = gen_theorem4(3).instance;
    EXPECT_NEAR(gamma(inst, 2, 2).value, oracle::gamma(inst, 2, 2), 1e-9);
    EXPECT_NEAR(gamma(inst, 2, 2).value, 2.0 / 3, 1e-9);
}

TEST(GammaTest, ConstantUtilityIsVacuous) {
    Instance inst({"x"}, {"0", "1"}, {{0}, {1}}, {0.5, 0.5}, UtilityTable(1, 2, 1.0));
    auto g = gamma(inst, 1, 1);
    EXPECT_TRUE(g.vacuous);
    EXPECT_EQ(g.value, 1.0);
}

TEST(GammaTest, MatchesExhaustiveOracleOnCorpus) {
    for (const auto& inst : fixtures::corpus(15, 3)) {
        for (auto [n, k] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{2, 2}})
            EXPECT_NEAR(gamma(inst, n, k).value, oracle::gamma(inst, n, k), 1e-9);
    }
}

TEST(GammaTest, SubmodularInstancesHaveUnitRatio) {
    for (auto inst : {fixtures::three_thresholds(), fixtures::two_features()}) {
        ASSERT_TRUE(check_adaptive_submodular(inst).holds);
        EXPECT_NEAR(gamma(inst, 1, 2).value, 1.0, 1e-9);
    }
}

TEST(GammaTest, SampledModeIsAnUpperBound) {
    GammaOptions sampled{GammaMode::SampledUpperBound, 300, 7};
    for (const auto& inst : fixtures::corpus(8, 3)) {
        const double exact = gamma(inst, 1, 2).value;
        auto s = gamma(inst, 1, 2, sampled);
        EXPECT_EQ(s.mode, GammaMode::SampledUpperBound);
        EXPECT_GE(s.value, exact - 1e-9);
    }
}

TEST(GammaTest, BudgetExceededThrows) {
    auto inst = gen_random(5, 3, 1, true);
    Numerics tight;
    tight.enumeration_budget = 10;
    EXPECT_GT(gamma_enumeration_size(inst, 2, 3), 10u);
    EXPECT_THROW(gamma(inst, 2, 3, {}, tight), EnumerationBudgetExceeded);
}

TEST(CoveringTest, TwoFeatureCoverage) {
    auto cp = covering_params(fixtures::two_features());
    EXPECT_NEAR(cp.q, 1.0, 1e-12);
    EXPECT_NEAR(cp.eta, 0.25, 1e-12);
    ASSERT_TRUE(cp.runner_up.has_value());
    EXPECT_NEAR(*cp.runner_up, 0.75, 1e-12);
}

TEST(CoveringTest, ConstantUtilityUsesQAsEta) {
    Instance inst({"x"}, {"0", "1"}, {{0}, {1}}, {0.5, 0.5}, UtilityTable(1, 2, 3.0));
    auto cp = covering_params(inst);
    EXPECT_DOUBLE_EQ(cp.q, 3.0);
    EXPECT_DOUBLE_EQ(cp.eta, 3.0);
    EXPECT_FALSE(cp.runner_up.has_value());
}

TEST(ParamsTest, ReportCollectsEverything) {
    auto pair = gen_theorem5(3, 0.5);
    auto report = compute_params(pair.instance, pair.policy, {.n = 1, .k = 2});
    EXPECT_NEAR(report.alpha.value, 1.0, 1e-12);
    EXPECT_NEAR(report.beta.value, 0.5, 1e-12);
    ASSERT_TRUE(report.gamma.has_value());
    EXPECT_NEAR(report.gamma->value, 1.0, 1e-12);
    EXPECT_NEAR(report.f_avg, 1.875, 1e-12);
    EXPECT_NEAR(report.c_avg, 3.0, 1e-12);
    EXPECT_TRUE(report.theorem3_consistent);
}
