#include <gtest/gtest.h>

#include <json.hpp>

#include "fixtures.hpp"

using namespace maxgain;

TEST(InstanceIoTest, TableRoundTrip) {
    auto inst = gen_random(3, 3, 5, true);
    auto back = parse_instance(serialize_instance(inst));
    EXPECT_EQ(back.elements(), inst.elements());
    EXPECT_EQ(back.states(), inst.states());
    EXPECT_EQ(back.realizations(), inst.realizations());
    EXPECT_EQ(back.prior(), inst.prior());
    EXPECT_EQ(back.utility_table(), inst.utility_table());
}

TEST(InstanceIoTest, BuiltinReferencesAreExpanded) {
    auto pair = gen_theorem5(3, 0.5);
    auto text = serialize_instance(pair.instance, BuiltinUtility{"theorem5", {{"epsilon", 0.5}}});
    EXPECT_NE(text.find("\"builtin\""), std::string::npos);
    EXPECT_EQ(parse_instance(text).utility_table(), pair.instance.utility_table());
}

TEST(InstanceIoTest, CoverageBuiltinWithModifiedPrior) {
    const char* text = R"({
      "elements": ["x"], "states": [0, 1],
      "realizations": [{"x": 0}, {"x": 1}], "prior": [0.9, 0.1],
      "utility": {"kind": "builtin", "name": "coverage", "params": {"prior": "modified"}}})";
    auto inst = parse_instance(text);
    EXPECT_NEAR(inst.utility(0, 1), 0.25 / 1.15, 1e-12);
}

TEST(InstanceIoTest, ParseErrors) {
    EXPECT_THROW(parse_instance("{"), ParseError);
    EXPECT_THROW(parse_instance(R"({"elements": ["x"]})"), ParseError);
    EXPECT_THROW(parse_instance(R"({"elements": ["x"], "states": ["0"], "realizations": [{"y": "0"}], "prior": [1]})"),
                 ParseError);
    EXPECT_THROW(parse_instance(R"({"elements": ["x"], "states": ["0"], "realizations": [{"x": "0"}], "prior": [1],
                                    "utility": {"kind": "table", "entries": [{"set": [], "realization": 0, "value": 1}]}})"),
                 ParseError);
    EXPECT_THROW(parse_instance(R"({"elements": ["x"], "states": ["0"], "realizations": [{"x": "0"}], "prior": [1],
                                    "utility": {"kind": "builtin", "name": "nope"}})"),
                 ParseError);
}

TEST(InstanceIoTest, InvalidContentIsNotAParseError) {
    EXPECT_THROW(parse_instance(R"({"elements": ["x"], "states": ["0"], "realizations": [{"x": "0"}], "prior": [0.5]})"),
                 InvalidInstance);
}

TEST(PolicyIoTest, TreeRoundTrip) {
    auto inst = fixtures::three_thresholds();
    auto tree = build_greedy(inst);
    auto back = parse_policy(serialize_policy(tree, inst), inst);
    ASSERT_TRUE(std::holds_alternative<PolicyTree>(back));
    EXPECT_EQ(std::get<PolicyTree>(back), tree);
}

TEST(PolicyIoTest, ThresholdRoundTrip) {
    auto pair = gen_theorem4(3);
    Policy tsp = threshold_subpolicy(pair.policy, 1.0 / 3, 0.25);
    auto back = parse_policy(serialize_policy(tsp, pair.instance), pair.instance);
    ASSERT_TRUE(std::holds_alternative<ThresholdSubPolicy>(back));
    const auto& t = std::get<ThresholdSubPolicy>(back);
    EXPECT_EQ(t.base, pair.policy);
    EXPECT_DOUBLE_EQ(t.tau, 1.0 / 3);
    EXPECT_DOUBLE_EQ(t.rho, 0.25);
}

TEST(PolicyIoTest, MalformedTreesAreRejected) {
    auto inst = fixtures::single_split();
    EXPECT_THROW(parse_policy(R"({"select": "z", "children": {"0": "terminal", "1": "terminal"}})", inst),
                 MalformedPolicy);
    EXPECT_THROW(parse_policy(R"({"select": "x", "children": {"0": "terminal"}})", inst), MalformedPolicy);
    EXPECT_THROW(parse_policy(R"({"select": "x", "children": {"0": {"select": "x", "children": {"0": "terminal", "1": "terminal"}}, "1": "terminal"}})",
                              inst),
                 MalformedPolicy);
    EXPECT_THROW(parse_policy("[1, 2]", inst), ParseError);
}

TEST(HypothesisIoTest, RoundTripAndMixedLabels) {
    auto hc = gen_random_hypotheses(4, 6, 3, 0.01);
    auto back = parse_hypotheses(serialize_hypotheses(hc));
    EXPECT_EQ(back.examples, hc.examples);
    EXPECT_EQ(back.labels, hc.labels);
    EXPECT_EQ(back.prior, hc.prior);
    auto mixed = parse_hypotheses(R"({"examples": ["a"], "labels": [[true], [0]], "prior": [0.5, 0.5]})");
    EXPECT_EQ(mixed.labels[0][0], "1");
    EXPECT_EQ(mixed.labels[1][0], "0");
}

TEST(ReportIoTest, InfinityAndPrecision) {
    EXPECT_DOUBLE_EQ(report_precision(1.0 / 3), 0.333333333333);
    Instance structure({"x", "y"}, {"0"}, {{0, 0}}, {1.0});
    UtilityTable table(2, 1);
    table.at(0b10, 0) = table.at(0b11, 0) = 1.0;
    auto inst = structure.with_utility(table);
    auto report = compute_params(inst, PolicyTree::select(0, {PolicyTree::terminal()}), {.n = 1, .k = 1});
    auto doc = nlohmann::json::parse(to_json(report, inst));
    EXPECT_EQ(doc["alpha"]["value"], "inf");
    EXPECT_EQ(doc["gamma"]["mode"], "exact");
    const std::vector<std::string> keys{"alpha", "beta", "gamma", "Q", "eta", "Q_witness", "f_avg", "c_avg",
                                        "theorem3_consistent"};
    std::vector<std::string> seen;
    for (auto it = doc.begin(); it != doc.end(); ++it) seen.push_back(it.key());
    std::sort(seen.begin(), seen.end());
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(seen, sorted);
}

TEST(ReportIoTest, BoundReportFields) {
    auto pair = gen_theorem5(3, 0.5);
    BoundContext ctx;
    ctx.instance = &pair.instance;
    ctx.policy = pair.policy;
    auto doc = nlohmann::json::parse(to_json(verify(BoundId::Lemma2, ctx)));
    EXPECT_EQ(doc["bound"], "lemma2");
    EXPECT_TRUE(doc["holds"].get<bool>());
    EXPECT_TRUE(doc["inputs"].is_array());
}
