#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"

using namespace maxgain;

TEST(WitnessGeneratorTest, GeometricShape) {
    auto pair = gen_theorem5(4, 0.25);
    EXPECT_EQ(pair.instance.num_elements(), 4u);
    EXPECT_EQ(pair.instance.num_realizations(), 16u);
    EXPECT_NEAR(pair.instance.utility(0b1111, 3), 1 + 0.25 + 0.0625 + 0.015625 + 0.00390625, 1e-12);
    EXPECT_EQ(pair.policy.height(), 4u);
}

TEST(WitnessGeneratorTest, PrefixGainValues) {
    auto inst = gen_theorem4(3).instance;
    // g = 2 only for v3 scanned after exactly {v1}.
    EXPECT_NEAR(inst.utility(0b101, 0), 1.0, 1e-12);
    EXPECT_NEAR(inst.utility(0b100, 0), 1.0 / 3, 1e-12);
    EXPECT_NEAR(inst.utility(0b111, 0), 1.0, 1e-12);
    EXPECT_NEAR(inst.utility(0b011, 0), 2.0 / 3, 1e-12);
}

TEST(WitnessGeneratorTest, RejectsOutOfRangeParameters) {
    EXPECT_THROW(gen_theorem5(0, 0.5), InvalidParams);
    EXPECT_THROW(gen_theorem5(3, 1.0), InvalidParams);
    EXPECT_THROW(gen_theorem5(3, 0.0), InvalidParams);
    EXPECT_THROW(gen_theorem4(2), InvalidParams);
    EXPECT_THROW(gen_theorem4(13), InvalidParams);
}

TEST(RandomGeneratorTest, SameSeedSameInstance) {
    auto a = gen_random(4, 3, 99, true);
    auto b = gen_random(4, 3, 99, true);
    EXPECT_EQ(a.realizations(), b.realizations());
    EXPECT_EQ(a.prior(), b.prior());
    EXPECT_EQ(a.utility_table(), b.utility_table());
    auto c = gen_random(4, 3, 100, true);
    EXPECT_FALSE(a.utility_table() == c.utility_table());
}

TEST(RandomGeneratorTest, MonotoneFlagGivesPositiveIncrements) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto inst = gen_random(4, 2, seed, true);
        EXPECT_GE(inst.num_realizations(), 2u);
        for (ElementSet a = 0; a < 16; ++a)
            for (ElementId e = 0; e < 4; ++e) {
                if (contains(a, e)) continue;
                for (RealizationId r = 0; r < inst.num_realizations(); ++r)
                    EXPECT_GE(inst.utility(with(a, e), r) - inst.utility(a, r), 0.05 - 1e-12);
            }
    }
}

TEST(RandomGeneratorTest, RejectsLargeShapes) {
    EXPECT_THROW(gen_random(6, 2, 0, true), InvalidParams);
    EXPECT_THROW(gen_random(3, 4, 0, true), InvalidParams);
}

TEST(RandomGeneratorTest, HypothesesAreDistinctWithRareMass) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto hc = gen_random_hypotheses(3, 6, seed, 0.001);
        EXPECT_NO_THROW(instance_from_hypotheses(hc));
        EXPECT_DOUBLE_EQ(hc.prior.back(), 0.001);
        double total = 0.0;
        for (double p : hc.prior) total += p;
        EXPECT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(RandomGeneratorTest, RandomFullPolicySelectsEverything) {
    std::mt19937_64 rng(1);
    auto inst = gen_random(5, 2, 3, true);
    auto tree = random_full_policy(inst, rng);
    for (const auto& phi : inst.realizations()) EXPECT_EQ(selections(tree, phi).size(), 5u);
}

TEST(RandomGeneratorTest, UnitDrawRange) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 1000; ++i) {
        const double u = unit_draw(rng);
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}
