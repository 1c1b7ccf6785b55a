#include "maxgain/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "maxgain/errors.hpp"
#include "maxgain/gen.hpp"

namespace maxgain {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

const json& field(const json& object, const char* name) {
    if (!object.is_object() || !object.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
    return object.at(name);
}

std::string label(const json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number_integer()) return std::to_string(value.get<long long>());
    if (value.is_boolean()) return value.get<bool>() ? "1" : "0";
    throw ParseError("labels must be strings or integers, got " + value.dump());
}

double number(const json& value, const char* what) {
    if (!value.is_number()) throw ParseError(std::string(what) + " must be a number");
    return value.get<double>();
}

std::vector<std::string> string_list(const json& value, const char* what) {
    if (!value.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& item : value) out.push_back(label(item));
    return out;
}

ordered_json reported(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    return report_precision(value);
}

ordered_json psi_json(const Instance& instance, const PartialRealization& psi) {
    ordered_json out = ordered_json::array();
    for (const auto& o : psi.observations())
        out.push_back({{"element", instance.elements()[o.element]}, {"state", instance.states()[o.state]}});
    return out;
}

json tree_json(const PolicyTree& tree, const Instance& instance) {
    if (tree.is_terminal()) return "terminal";
    json children = json::object();
    for (StateId y = 0; y < instance.num_states(); ++y) children[instance.states()[y]] = tree_json(tree.child(y), instance);
    return {{"select", instance.elements()[tree.element()]}, {"children", std::move(children)}};
}

PolicyTree parse_tree(const json& node, const Instance& instance) {
    if (node.is_string() && node.get<std::string>() == "terminal") return PolicyTree::terminal();
    if (node.is_null()) return PolicyTree::terminal();
    if (!node.is_object()) throw ParseError("policy node must be an object or \"terminal\"");
    const auto name = label(field(node, "select"));
    const auto element = instance.find_element(name);
    if (!element) throw MalformedPolicy("policy selects unknown element '" + name + "'");
    const auto& children = field(node, "children");
    if (!children.is_object()) throw ParseError("children must be an object keyed by state");
    std::vector<PolicyTree> out(instance.num_states());
    std::vector<bool> seen(instance.num_states(), false);
    for (const auto& [key, child] : children.items()) {
        const auto state = instance.find_state(key);
        if (!state) throw MalformedPolicy("policy branches on unknown state '" + key + "'");
        out[*state] = parse_tree(child, instance);
        seen[*state] = true;
    }
    for (StateId y = 0; y < seen.size(); ++y)
        if (!seen[y])
            throw MalformedPolicy("selection of " + name + " has no branch for state " + instance.states()[y]);
    return PolicyTree::select(*element, std::move(out));
}

} // namespace

UtilityTable builtin_utility(const Instance& structure, const BuiltinUtility& builtin) {
    auto param = [&](const std::string& key) -> std::optional<double> {
        auto it = builtin.params.find(key);
        if (it == builtin.params.end()) return std::nullopt;
        return it->second;
    };
    if (builtin.name == "coverage") {
        if (param("modified").value_or(0.0) != 0.0) return coverage_utility(structure, modified_prior(structure.prior()).prior);
        return coverage_utility(structure, structure.prior());
    }
    if (builtin.name == "theorem4") {
        if (structure.num_elements() < 3) throw InvalidParams("theorem4 utility needs at least 3 elements");
        return theorem4_utility(structure.num_elements(), structure.num_realizations());
    }
    if (builtin.name == "theorem5") {
        const auto epsilon = param("epsilon");
        if (!epsilon) throw ParseError("theorem5 utility needs params.epsilon");
        if (!(*epsilon > 0.0 && *epsilon < 1.0)) throw InvalidParams("theorem5 needs 0 < epsilon < 1");
        return theorem5_utility(structure.num_elements(), structure.num_realizations(), *epsilon);
    }
    throw ParseError("unknown builtin utility '" + builtin.name + "'");
}

Instance parse_instance(std::string_view json_text) {
    const json doc = parse_json(json_text);
    auto elements = string_list(field(doc, "elements"), "elements");
    auto states = string_list(field(doc, "states"), "states");
    auto index_of = [](const std::vector<std::string>& names, const std::string& name, const char* what) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return i;
        throw ParseError(std::string("unknown ") + what + " '" + name + "'");
    };

    std::vector<Realization> realizations;
    const auto& rows = field(doc, "realizations");
    if (!rows.is_array()) throw ParseError("realizations must be an array");
    for (const auto& row : rows) {
        if (!row.is_object()) throw ParseError("each realization must be an object element -> state");
        Realization phi(elements.size(), 0);
        std::vector<bool> seen(elements.size(), false);
        for (const auto& [key, value] : row.items()) {
            const auto e = index_of(elements, key, "element");
            phi[e] = index_of(states, label(value), "state");
            seen[e] = true;
        }
        for (std::size_t e = 0; e < seen.size(); ++e)
            if (!seen[e]) throw ParseError("realization does not assign element '" + elements[e] + "'");
        realizations.push_back(std::move(phi));
    }
    std::vector<double> prior;
    const auto& prior_json = field(doc, "prior");
    if (!prior_json.is_array()) throw ParseError("prior must be an array");
    for (const auto& p : prior_json) prior.push_back(number(p, "prior entries"));

    Instance structure(elements, states, realizations, prior);
    if (!doc.contains("utility")) return structure;
    const auto& utility = doc.at("utility");
    const auto kind = label(field(utility, "kind"));
    if (kind == "builtin") {
        BuiltinUtility builtin{label(field(utility, "name")), {}};
        if (utility.contains("params"))
            for (const auto& [key, value] : utility.at("params").items()) {
                if (value.is_boolean())
                    builtin.params[key] = value.get<bool>() ? 1.0 : 0.0;
                else if (value.is_string())
                    builtin.params[key] = value.get<std::string>() == "modified" ? 1.0 : 0.0;
                else
                    builtin.params[key] = number(value, "builtin params");
            }
        if (builtin.params.count("prior")) builtin.params["modified"] = builtin.params["prior"];
        return structure.with_utility(builtin_utility(structure, builtin));
    }
    if (kind != "table") throw ParseError("utility kind must be 'table' or 'builtin'");
    UtilityTable table(elements.size(), realizations.size());
    std::vector<bool> filled((std::size_t{1} << elements.size()) * realizations.size(), false);
    const auto& entries = field(utility, "entries");
    if (!entries.is_array()) throw ParseError("utility entries must be an array");
    for (const auto& entry : entries) {
        ElementSet set = 0;
        for (const auto& name : field(entry, "set")) set = with(set, index_of(elements, label(name), "element"));
        const auto& r_json = field(entry, "realization");
        if (!r_json.is_number_integer() || r_json.get<long long>() < 0 ||
            static_cast<std::size_t>(r_json.get<long long>()) >= realizations.size())
            throw ParseError("utility entry has an invalid realization index");
        const auto r = static_cast<RealizationId>(r_json.get<long long>());
        table.at(set, r) = number(field(entry, "value"), "utility values");
        filled[static_cast<std::size_t>(set) * realizations.size() + r] = true;
    }
    for (bool f : filled)
        if (!f) throw ParseError("utility table must define every (subset, realization) pair");
    return structure.with_utility(std::move(table));
}

Instance load_instance(const std::filesystem::path& path) { return parse_instance(read_text_file(path)); }

std::string serialize_instance(const Instance& instance, const std::optional<BuiltinUtility>& builtin) {
    ordered_json doc;
    doc["elements"] = instance.elements();
    doc["states"] = instance.states();
    ordered_json rows = ordered_json::array();
    for (const auto& phi : instance.realizations()) {
        ordered_json row = ordered_json::object();
        for (ElementId e = 0; e < phi.size(); ++e) row[instance.elements()[e]] = instance.states()[phi[e]];
        rows.push_back(std::move(row));
    }
    doc["realizations"] = std::move(rows);
    doc["prior"] = instance.prior();
    if (builtin) {
        ordered_json params = ordered_json::object();
        for (const auto& [key, value] : builtin->params) params[key] = value;
        doc["utility"] = {{"kind", "builtin"}, {"name", builtin->name}, {"params", std::move(params)}};
    } else if (instance.has_utility()) {
        ordered_json entries = ordered_json::array();
        for (std::size_t a = 0; a < (std::size_t{1} << instance.num_elements()); ++a) {
            std::vector<std::string> names;
            for (ElementId e = 0; e < instance.num_elements(); ++e)
                if (contains(static_cast<ElementSet>(a), e)) names.push_back(instance.elements()[e]);
            for (RealizationId r = 0; r < instance.num_realizations(); ++r)
                entries.push_back({{"set", names}, {"realization", r}, {"value", instance.utility(static_cast<ElementSet>(a), r)}});
        }
        doc["utility"] = {{"kind", "table"}, {"entries", std::move(entries)}};
    }
    return doc.dump(2) + "\n";
}

Policy parse_policy(std::string_view json_text, const Instance& instance) {
    const json doc = parse_json(json_text);
    if (doc.is_object() && doc.contains("base")) {
        auto base = parse_tree(doc.at("base"), instance);
        validate(instance, base);
        return threshold_subpolicy(std::move(base), number(field(doc, "tau"), "tau"), number(field(doc, "rho"), "rho"));
    }
    auto tree = parse_tree(doc, instance);
    validate(instance, tree);
    return tree;
}

Policy load_policy(const std::filesystem::path& path, const Instance& instance) {
    return parse_policy(read_text_file(path), instance);
}

std::string serialize_policy(const Policy& policy, const Instance& instance) {
    if (const auto* tree = std::get_if<PolicyTree>(&policy)) return tree_json(*tree, instance).dump(2) + "\n";
    const auto& tsp = std::get<ThresholdSubPolicy>(policy);
    json doc = {{"base", tree_json(tsp.base, instance)}, {"tau", tsp.tau}, {"rho", tsp.rho}};
    return doc.dump(2) + "\n";
}

HypothesisClass parse_hypotheses(std::string_view json_text) {
    const json doc = parse_json(json_text);
    HypothesisClass out;
    out.examples = string_list(field(doc, "examples"), "examples");
    const auto& labels = field(doc, "labels");
    if (!labels.is_array()) throw ParseError("labels must be an array of rows");
    for (const auto& row : labels) out.labels.push_back(string_list(row, "label rows"));
    const auto& prior = field(doc, "prior");
    if (!prior.is_array()) throw ParseError("prior must be an array");
    for (const auto& p : prior) out.prior.push_back(number(p, "prior entries"));
    return out;
}

HypothesisClass load_hypotheses(const std::filesystem::path& path) { return parse_hypotheses(read_text_file(path)); }

std::string serialize_hypotheses(const HypothesisClass& hypotheses) {
    ordered_json doc;
    doc["examples"] = hypotheses.examples;
    doc["labels"] = hypotheses.labels;
    doc["prior"] = hypotheses.prior;
    return doc.dump(2) + "\n";
}

std::string to_json(const ParamReport& report, const Instance& instance) {
    ordered_json doc;
    doc["alpha"] = {{"value", reported(report.alpha.value)},
                    {"witness", report.alpha.witness ? psi_json(instance, *report.alpha.witness) : ordered_json()}};
    ordered_json budgets = ordered_json::array();
    for (const auto& fg : report.beta.per_budget)
        budgets.push_back({{"i", fg.budget},
                           {"delta_u", reported(fg.delta_u)},
                           {"delta_l", reported(fg.delta_l)},
                           {"tau", reported(fg.tau)},
                           {"rho", reported(fg.rho)},
                           {"upper_witness", psi_json(instance, fg.upper_witness)},
                           {"lower_witness", psi_json(instance, fg.lower_witness)}});
    doc["beta"] = {{"value", reported(report.beta.value)},
                   {"witness_budget", report.beta.witness_budget},
                   {"empty_range", report.beta.empty_range},
                   {"per_budget", std::move(budgets)}};
    if (report.gamma) {
        const auto& g = *report.gamma;
        doc["gamma"] = {{"value", reported(g.value)},
                        {"raw_minimum", reported(g.raw_minimum)},
                        {"mode", g.mode == GammaMode::Exact ? "exact" : "sampled-upper-bound"},
                        {"n", g.n},
                        {"k", g.k},
                        {"anomaly", g.anomaly},
                        {"vacuous", g.vacuous},
                        {"policies_evaluated", g.policies_evaluated},
                        {"witness_context", g.witness_context ? psi_json(instance, *g.witness_context) : ordered_json()},
                        {"witness_policy", g.witness_policy ? ordered_json::parse(tree_json(*g.witness_policy, instance).dump())
                                                            : ordered_json()}};
    } else {
        doc["gamma"] = nullptr;
    }
    std::vector<std::string> q_set;
    for (ElementId e = 0; e < instance.num_elements(); ++e)
        if (contains(report.covering.q_set, e)) q_set.push_back(instance.elements()[e]);
    doc["Q"] = reported(report.covering.q);
    doc["eta"] = reported(report.covering.eta);
    doc["Q_witness"] = {{"set", q_set}, {"realization", report.covering.q_realization}};
    doc["f_avg"] = reported(report.f_avg);
    doc["c_avg"] = reported(report.c_avg);
    doc["theorem3_consistent"] = report.theorem3_consistent;
    return doc.dump(2);
}

std::string to_json(const BoundReport& report) {
    ordered_json doc;
    doc["bound"] = std::string(to_string(report.id));
    doc["lhs"] = reported(report.lhs);
    doc["rhs"] = reported(report.rhs);
    doc["slack"] = reported(report.slack);
    doc["holds"] = report.holds;
    ordered_json inputs = ordered_json::array();
    for (const auto& in : report.inputs)
        inputs.push_back({{"name", in.name}, {"value", reported(in.value)}, {"source", in.source}});
    doc["inputs"] = std::move(inputs);
    ordered_json pre = ordered_json::array();
    for (const auto& p : report.preconditions)
        pre.push_back({{"name", p.name}, {"passed", p.passed}, {"hard", p.hard}, {"detail", p.detail}});
    doc["preconditions"] = std::move(pre);
    doc["diagnostics"] = report.diagnostics;
    return doc.dump(2);
}

double report_precision(double value) {
    if (!std::isfinite(value)) return value;
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return std::strtod(buffer, nullptr);
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << content;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace maxgain
