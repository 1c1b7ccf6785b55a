#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "../support/oracles.hpp"
#include "fixtures.hpp"

using namespace maxgain;

TEST(PolicyCountTest, SmallValues) {
    EXPECT_EQ(policy_count(1, 2, 1), 2u);
    EXPECT_EQ(policy_count(2, 2, 1), 3u);
    EXPECT_EQ(policy_count(3, 2, 0), 1u);
    // N(4,3) = 1 + 4·N(3,2)², N(3,2) = 1 + 3·N(2,1)² = 28.
    EXPECT_EQ(policy_count(4, 2, 3), 3137u);
}

TEST(PolicyCountTest, SaturatesInsteadOfOverflowing) {
    EXPECT_EQ(policy_count(20, 3, 10), std::numeric_limits<std::uint64_t>::max());
}

TEST(EnumerationTest, CountsMatchAndTreesAreDistinct) {
    auto inst = gen_theorem5(3, 0.5).instance;
    for (int k = 0; k <= 2; ++k) {
        auto all = all_policies(inst, k);
        EXPECT_EQ(all.size(), policy_count(3, 2, k));
        EXPECT_EQ(all.size(), oracle::trees(inst, 0b111, k).size());
        std::set<std::string> keys;
        for (const auto& t : all) {
            validate(inst, t);
            EXPECT_LE(t.height(), static_cast<std::size_t>(k));
            keys.insert(serialize_policy(t, inst));
        }
        EXPECT_EQ(keys.size(), all.size());
    }
}

TEST(EnumerationTest, ExcludedElementsNeverAppear) {
    auto inst = gen_theorem5(3, 0.5).instance;
    for (const auto& t : all_policies(inst, 2, 0b010)) {
        for (const auto& phi : inst.realizations())
            for (auto e : selections(t, phi)) EXPECT_NE(e, 1u);
    }
    EXPECT_EQ(all_policies(inst, 2, 0b010).size(), policy_count(2, 2, 2));
}

TEST(EnumerationTest, BudgetExceededThrows) {
    auto inst = gen_theorem5(4, 0.5).instance;
    Numerics tight;
    tight.enumeration_budget = 100;
    EXPECT_THROW(all_policies(inst, 3, 0, tight), EnumerationBudgetExceeded);
}

TEST(BudgetOracleTest, ZeroBudgetIsTerminal) {
    auto inst = gen_theorem5(3, 0.5).instance;
    auto opt = optimal_budget(inst, 0);
    EXPECT_TRUE(opt.policy.is_terminal());
    EXPECT_NEAR(opt.value, 1.0, 1e-12);
}

TEST(BudgetOracleTest, GeometricWitnessTwoSteps) {
    auto inst = gen_theorem5(3, 0.5).instance;
    auto opt = optimal_budget(inst, 2);
    EXPECT_NEAR(opt.value, 1.75, 1e-12);
    EXPECT_NEAR(f_avg(inst, opt.policy), opt.value, 1e-12);
    EXPECT_LE(opt.policy.height(), 2u);
}

TEST(BudgetOracleTest, MatchesExhaustiveSearch) {
    for (const auto& inst : fixtures::corpus(15, 3)) {
        for (int k = 1; k <= 2; ++k) {
            auto opt = optimal_budget(inst, k);
            EXPECT_NEAR(opt.value, oracle::best_budget_value(inst, k), 1e-9);
            EXPECT_NEAR(f_avg(inst, opt.policy), opt.value, 1e-9);
        }
    }
}

TEST(BudgetOracleTest, DominatesGreedyPrefixes) {
    for (const auto& inst : fixtures::corpus(20, 4)) {
        auto greedy = build_greedy(inst);
        for (int k = 1; k <= 3; ++k) {
            auto opt = optimal_budget(inst, k);
            for (auto rule : {TerminationRule::Strict}) {
                (void)rule;
                // Greedy cut at depth k: chain of the first k greedy decisions.
                std::function<PolicyTree(const PolicyTree&, int)> cut = [&](const PolicyTree& t, int d) {
                    if (t.is_terminal() || d == 0) return PolicyTree::terminal();
                    std::vector<PolicyTree> children;
                    for (const auto& c : t.children()) children.push_back(cut(c, d - 1));
                    return PolicyTree::select(t.element(), children);
                };
                EXPECT_GE(opt.value, f_avg(inst, cut(greedy, k)) - 1e-9);
            }
        }
    }
}

TEST(CoverageOracleTest, TwoFeaturesNeedBoth) {
    auto inst = fixtures::two_features();
    auto opt = optimal_coverage(inst, 1.0);
    EXPECT_NEAR(opt.value, 2.0, 1e-12);
    EXPECT_TRUE(covers(inst, opt.policy, 1.0));
}

TEST(CoverageOracleTest, ThresholdClassBinarySearch) {
    auto inst = fixtures::three_thresholds();
    auto opt = optimal_coverage(inst, 1.0);
    EXPECT_NEAR(opt.value, 5.0 / 3, 1e-12);
}

TEST(CoverageOracleTest, PrunedAndUnprunedAgreeWithExhaustiveSearch) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto hc = gen_random_hypotheses(3, 5, seed);
        auto structure = instance_from_hypotheses(hc);
        auto inst = structure.with_utility(coverage_utility(structure, structure.prior()));
        const double pruned = optimal_coverage(inst, 1.0, CoveragePruning::Pruned).value;
        const double unpruned = optimal_coverage(inst, 1.0, CoveragePruning::Unpruned).value;
        EXPECT_NEAR(pruned, unpruned, 1e-9);
        EXPECT_NEAR(pruned, oracle::best_coverage_cost(inst, 1.0, 3), 1e-9);
    }
}

TEST(CoverageOracleTest, UnreachableTargetThrows) {
    auto inst = fixtures::two_features();
    EXPECT_THROW(optimal_coverage(inst, 2.0), CoverageUnreachable);
}
