#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "maxgain/maxgain.hpp"

namespace maxgain::cli {

namespace {

struct Globals {
    bool json = false;
    double tolerance = 1e-9;
    std::uint64_t enum_budget = 10'000'000;

    Numerics numerics() const { return {tolerance, enum_budget}; }
};

std::string num(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

void row(std::ostream& out, const std::string& key, const std::string& value, const std::string& note = {}) {
    out << std::left << std::setw(16) << key << std::setw(20) << value;
    if (!note.empty()) out << note;
    out << '\n';
}

std::filesystem::path companion(const std::filesystem::path& path, const std::string& suffix) {
    auto stem = path.stem().string();
    return path.parent_path() / (stem + suffix);
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
    std::string family;
    int k = 3;
    double epsilon = 0.5;
    std::size_t elements = 4;
    std::size_t states = 2;
    std::uint64_t seed = 0;
    bool monotone = false;
    std::string out;
    std::string policy_out;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
    const std::filesystem::path path = a.out;
    std::optional<Policy> policy;
    std::string instance_text;
    if (a.family == "theorem5") {
        auto pair = gen_theorem5(a.k, a.epsilon);
        instance_text = serialize_instance(pair.instance, BuiltinUtility{"theorem5", {{"epsilon", a.epsilon}}});
        policy = pair.policy;
        write_text_file(path, instance_text);
        const auto policy_path = a.policy_out.empty() ? companion(path, ".policy.json") : std::filesystem::path(a.policy_out);
        write_text_file(policy_path, serialize_policy(*policy, pair.instance));
        out << "wrote instance " << path.string() << "\nwrote policy " << policy_path.string() << '\n';
    } else if (a.family == "theorem4") {
        auto pair = gen_theorem4(a.k);
        write_text_file(path, serialize_instance(pair.instance, BuiltinUtility{"theorem4", {}}));
        const auto policy_path = a.policy_out.empty() ? companion(path, ".policy.json") : std::filesystem::path(a.policy_out);
        write_text_file(policy_path, serialize_policy(pair.policy, pair.instance));
        out << "wrote instance " << path.string() << "\nwrote policy " << policy_path.string() << '\n';
    } else if (a.family == "random") {
        const auto instance = gen_random(a.elements, a.states, a.seed, a.monotone);
        write_text_file(path, serialize_instance(instance));
        out << "wrote instance " << path.string() << '\n';
    } else if (a.family == "hypotheses-demo") {
        const auto hypotheses = threshold_hypotheses(static_cast<std::size_t>(std::max(a.k, 1)));
        const auto structure = instance_from_hypotheses(hypotheses);
        write_text_file(path, serialize_instance(structure, BuiltinUtility{"coverage", {}}));
        const auto hyp_path = companion(path, ".hypotheses.json");
        write_text_file(hyp_path, serialize_hypotheses(hypotheses));
        out << "wrote instance " << path.string() << "\nwrote hypotheses " << hyp_path.string() << '\n';
    } else {
        throw InvalidParams("unknown family '" + a.family + "' (theorem4, theorem5, random, hypotheses-demo)");
    }
    return 0;
}

// ---------------------------------------------------------------- params

struct ParamsArgs {
    std::string instance;
    std::string policy;
    bool greedy = false;
    int n = 2;
    int k = 2;
    std::string gamma = "exact";
    std::uint64_t samples = 2000;
    std::uint64_t seed = 0;
};

Policy resolve_policy(const Instance& instance, const std::string& source, const Numerics& numerics) {
    if (source.empty() || source == "greedy") return build_greedy(instance, TieBreak::LexicographicMin, numerics);
    return load_policy(source, instance);
}

int cmd_params(const ParamsArgs& a, const Globals& g, std::ostream& out) {
    const Numerics numerics = g.numerics();
    const Instance instance = load_instance(a.instance);
    if (a.policy.empty() && !a.greedy) throw InvalidParams("params needs --policy <file> or --greedy");
    const Policy policy = a.greedy ? Policy{build_greedy(instance, TieBreak::LexicographicMin, numerics)}
                                   : load_policy(a.policy, instance);
    ParamOptions options{a.n, a.k, std::nullopt};
    if (a.gamma == "exact")
        options.gamma = GammaOptions{GammaMode::Exact, a.samples, a.seed};
    else if (a.gamma == "sampled")
        options.gamma = GammaOptions{GammaMode::SampledUpperBound, a.samples, a.seed};
    else if (a.gamma != "skip")
        throw InvalidParams("--gamma must be exact, sampled or skip");

    ParamReport report;
    try {
        report = compute_params(instance, policy, options, numerics);
    } catch (const EnumerationBudgetExceeded& e) {
        throw EnumerationBudgetExceeded(std::string(e.what()) + " (try --gamma sampled or smaller --n/--k)");
    }
    if (g.json) {
        out << to_json(report, instance) << '\n';
        return 0;
    }
    row(out, "alpha", num(report.alpha.value),
        report.alpha.witness ? "witness " + describe(instance, *report.alpha.witness) : "");
    row(out, "beta", num(report.beta.value),
        report.beta.empty_range ? "empty budget range (c_avg < 1)" : "witness i=" + std::to_string(report.beta.witness_budget));
    for (const auto& fg : report.beta.per_budget)
        row(out, "  i=" + std::to_string(fg.budget), "u=" + num(fg.delta_u) + " l=" + num(fg.delta_l),
            "tau=" + num(fg.tau) + " rho=" + num(fg.rho));
    if (report.gamma) {
        const auto& gm = *report.gamma;
        std::string note = (gm.mode == GammaMode::Exact ? "exact" : "sampled upper bound") + std::string(" n=") +
                           std::to_string(gm.n) + " k=" + std::to_string(gm.k);
        if (gm.vacuous) note += " (vacuous)";
        if (gm.anomaly) note += " (raw minimum " + num(gm.raw_minimum) + ")";
        if (gm.witness_context) note += " witness " + describe(instance, *gm.witness_context);
        row(out, "gamma", num(gm.value), note);
    } else {
        row(out, "gamma", "skipped");
    }
    row(out, "Q", num(report.covering.q));
    row(out, "eta", num(report.covering.eta));
    row(out, "f_avg", num(report.f_avg));
    row(out, "c_avg", num(report.c_avg));
    row(out, "beta<=alpha", report.theorem3_consistent ? "yes" : "no");
    return 0;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
    std::string instance;
    std::string objective;
    std::optional<int> k;
    std::optional<double> q;
    bool unpruned = false;
    std::string out;
};

int cmd_solve(const SolveArgs& a, const Globals& g, std::ostream& out) {
    const Numerics numerics = g.numerics();
    const Instance instance = load_instance(a.instance);
    OptimalPolicy solved;
    std::string label;
    if (a.objective == "budget") {
        if (!a.k) throw InvalidParams("--objective budget needs --k");
        solved = optimal_budget(instance, *a.k, numerics);
        label = "f_avg";
    } else if (a.objective == "coverage") {
        const double q = a.q.value_or(covering_params(instance, numerics).q);
        solved = optimal_coverage(instance, q, a.unpruned ? CoveragePruning::Unpruned : CoveragePruning::Pruned, numerics);
        label = "c_avg";
    } else {
        throw InvalidParams("--objective must be budget or coverage");
    }
    if (!a.out.empty()) write_text_file(a.out, serialize_policy(solved.policy, instance));
    if (g.json) {
        out << "{\"objective\": \"" << a.objective << "\", \"value\": " << num(solved.value)
            << ", \"height\": " << solved.policy.height() << ", \"states_explored\": " << solved.states_explored
            << "}\n";
    } else {
        row(out, label, num(solved.value));
        row(out, "height", std::to_string(solved.policy.height()));
        row(out, "states", std::to_string(solved.states_explored));
        if (!a.out.empty()) out << "wrote policy " << a.out << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string bounds;
    std::string instance;
    std::string policy = "greedy";
    std::optional<int> l;
    std::string reference;
    int oracle_k = 2;
    std::string corpus;
    std::string hypotheses;
    bool ground_set = false;
    std::string gamma = "exact";
    std::size_t elements = 4;
    std::size_t states = 2;
};

std::vector<BoundId> parse_bounds(const std::string& text) {
    if (text.empty() || text == "all") return all_bound_ids();
    std::vector<BoundId> ids;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto id = parse_bound_id(item);
        if (!id) throw InvalidParams("unknown bound '" + item + "'");
        ids.push_back(*id);
    }
    return ids;
}

bool needs_budget_reference(BoundId id) {
    return id == BoundId::Thm1 || id == BoundId::Eq1 || id == BoundId::Eq2 || id == BoundId::Eq3;
}

bool needs_modified(BoundId id) { return id == BoundId::Thm6 || id == BoundId::Eq5; }

// Cheapest covering policy under p that identifies every hypothesis, falling back to the
// optimum under p' when zero-mass hypotheses are left unresolved.
PolicyTree modified_reference(const Instance& instance, const Instance& modified, const Numerics& numerics) {
    const double q = covering_params(modified, numerics).q;
    try {
        auto candidate = optimal_coverage(instance, q, CoveragePruning::Pruned, numerics).policy;
        if (covers(modified, candidate, q, numerics)) return candidate;
    } catch (const CoverageUnreachable&) {
    }
    return optimal_coverage(modified, q, CoveragePruning::Pruned, numerics).policy;
}

struct Target {
    std::string label;
    Instance instance;
    std::optional<Instance> modified;
    Policy policy;
};

Policy cut_to_budget(const Instance& instance, Policy policy, const std::optional<int>& l, const Numerics& numerics) {
    if (!l || !std::holds_alternative<PolicyTree>(policy)) return policy;
    return find_threshold_pair(instance, std::get<PolicyTree>(policy), *l, numerics).policy;
}

bool budget_indexed(BoundId id) { return id == BoundId::Thm1 || id == BoundId::Eq3; }

// --l when given; otherwise every integer budget of a tree policy.
std::vector<int> budgets_for(const Target& t, const VerifyArgs& a, const Numerics& numerics) {
    if (a.l) return {*a.l};
    if (!std::holds_alternative<PolicyTree>(t.policy)) throw InvalidParams("a threshold policy needs --l");
    const double cost = c_avg(t.instance, t.policy, numerics);
    std::vector<int> out;
    for (int l = 1; l <= static_cast<int>(std::floor(cost + numerics.tolerance)); ++l) out.push_back(l);
    return out;
}

std::string bound_label(const BoundReport& report) {
    std::string label(to_string(report.id));
    if (budget_indexed(report.id))
        for (const auto& in : report.inputs)
            if (in.name == "l") label += " l=" + std::to_string(static_cast<int>(in.value));
    return label;
}

std::vector<BoundReport> verify_target(const Target& t, const std::vector<BoundId>& ids, const VerifyArgs& a,
                                       const Numerics& numerics) {
    BoundContext base;
    base.instance = &t.instance;
    base.policy = t.policy;
    base.ground_set_log = a.ground_set;
    base.numerics = numerics;
    if (a.gamma == "sampled")
        base.gamma.mode = GammaMode::SampledUpperBound;
    else if (a.gamma != "exact")
        throw InvalidParams("--gamma must be exact or sampled");
    const Instance modified = t.modified ? *t.modified : t.instance.with_prior(modified_prior(t.instance.prior()).prior);
    base.modified = &modified;

    std::optional<PolicyTree> explicit_reference;
    if (!a.reference.empty()) {
        auto loaded = load_policy(a.reference, t.instance);
        if (!std::holds_alternative<PolicyTree>(loaded)) throw InvalidParams("reference must be a deterministic tree");
        explicit_reference = std::get<PolicyTree>(loaded);
    }
    std::optional<PolicyTree> budget_ref, coverage_ref, modified_ref;
    std::vector<BoundReport> reports;
    for (BoundId id : ids) {
        BoundContext context = base;
        if (explicit_reference) {
            context.reference = explicit_reference;
        } else if (needs_budget_reference(id)) {
            if (!budget_ref) budget_ref = optimal_budget(t.instance, a.oracle_k, numerics).policy;
            context.reference = budget_ref;
        } else if (needs_modified(id)) {
            if (!modified_ref) modified_ref = modified_reference(t.instance, modified, numerics);
            context.reference = modified_ref;
        } else if (id == BoundId::Thm2 || id == BoundId::Eq4) {
            if (!coverage_ref) {
                try {
                    coverage_ref = optimal_coverage(t.instance, covering_params(t.instance, numerics).q,
                                                    CoveragePruning::Pruned, numerics)
                                       .policy;
                } catch (const CoverageUnreachable& e) {
                    throw PreconditionFailed(std::string(to_string(id)) + ": f(V, phi) = Q fails: " + e.what());
                }
            }
            context.reference = coverage_ref;
        }
        if (!budget_indexed(id)) {
            reports.push_back(verify(id, context));
            continue;
        }
        for (int l : budgets_for(t, a, numerics)) {
            context.budget = l;
            context.policy = cut_to_budget(t.instance, t.policy, l, numerics);
            reports.push_back(verify(id, context));
        }
    }
    return reports;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const auto single = std::stoull(text);
            return {single, single + 1};
        }
        return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw InvalidParams("--corpus expects a seed range a..b");
    }
}

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out) {
    const Numerics numerics = g.numerics();
    const auto ids = parse_bounds(a.bounds.empty() && !a.hypotheses.empty() ? "eq5" : a.bounds);
    std::vector<Target> targets;
    if (!a.hypotheses.empty()) {
        auto setup = prepare_active_learning(load_hypotheses(a.hypotheses), numerics);
        Policy policy = a.policy == "greedy" ? Policy{setup.gbs} : load_policy(a.policy, setup.true_prior);
        targets.push_back({std::filesystem::path(a.hypotheses).filename().string(), setup.true_prior, setup.modified, std::move(policy)});
    } else if (!a.corpus.empty()) {
        const auto [first, last] = parse_range(a.corpus);
        for (auto seed = first; seed < last; ++seed) {
            auto instance = gen_random(a.elements, a.states, seed, true);
            Policy policy = build_greedy(instance, TieBreak::LexicographicMin, numerics);
            targets.push_back({"seed " + std::to_string(seed), std::move(instance), std::nullopt, std::move(policy)});
        }
    } else {
        if (a.instance.empty()) throw InvalidParams("verify needs --instance, --hypotheses or --corpus");
        auto instance = load_instance(a.instance);
        Policy policy = resolve_policy(instance, a.policy, numerics);
        targets.push_back({std::filesystem::path(a.instance).filename().string(), std::move(instance), std::nullopt, std::move(policy)});
    }

    int width = 14;
    for (const auto& t : targets) width = std::max(width, static_cast<int>(t.label.size()) + 2);
    bool all_hold = true;
    std::size_t total = 0;
    std::size_t failed = 0;
    if (g.json) out << "[\n";
    bool first_json = true;
    if (!g.json)
        out << std::left << std::setw(width) << "target" << std::setw(12) << "bound" << std::setw(20) << "lhs"
            << std::setw(20) << "rhs" << std::setw(20) << "slack" << "holds\n";
    for (const auto& t : targets) {
        for (const auto& report : verify_target(t, ids, a, numerics)) {
            ++total;
            if (!report.holds) {
                ++failed;
                all_hold = false;
            }
            if (g.json) {
                if (!first_json) out << ",\n";
                first_json = false;
                out << to_json(report);
            } else {
                out << std::left << std::setw(width) << t.label << std::setw(12) << bound_label(report) << std::setw(20)
                    << num(report.lhs) << std::setw(20) << num(report.rhs) << std::setw(20) << num(report.slack)
                    << (report.holds ? "yes" : "NO") << '\n';
                for (const auto& p : report.preconditions)
                    if (!p.passed) out << "    precondition not met: " << p.name << " " << p.detail << '\n';
                for (const auto& d : report.diagnostics) out << "    note: " << d << '\n';
            }
        }
    }
    if (g.json)
        out << "\n]\n";
    else
        out << total - failed << " of " << total << " reports hold\n";
    return all_hold ? 0 : 1;
}

// ---------------------------------------------------------------- active-learning

int cmd_active_learning(const std::string& path, const Globals& g, std::ostream& out) {
    const Numerics numerics = g.numerics();
    const auto hypotheses = load_hypotheses(path);
    const auto setup = prepare_active_learning(hypotheses, numerics);
    const double phi = static_cast<double>(setup.modified.num_realizations());
    const double min_lifted = *std::min_element(setup.modified.prior().begin(), setup.modified.prior().end());
    const auto reference = modified_reference(setup.true_prior, setup.modified, numerics);
    BoundContext context;
    context.instance = &setup.true_prior;
    context.modified = &setup.modified;
    context.policy = setup.gbs;
    context.reference = reference;
    context.numerics = numerics;
    const auto report = verify(BoundId::Eq5, context);
    const double beta_lifted = beta(setup.modified, Policy{setup.gbs}, numerics).value;
    if (g.json) {
        out << "{\n  \"hypotheses\": " << phi << ",\n  \"normalizer\": " << num(setup.normalizer)
            << ",\n  \"min_modified_prior\": " << num(min_lifted)
            << ",\n  \"gbs_c_avg_true\": " << num(c_avg(setup.true_prior, Policy{setup.gbs}, numerics))
            << ",\n  \"gbs_c_avg_modified\": " << num(c_avg(setup.modified, Policy{setup.gbs}, numerics))
            << ",\n  \"optimal_c_avg_true\": " << num(c_avg(setup.true_prior, Policy{reference}, numerics))
            << ",\n  \"beta_modified\": \"" << num(beta_lifted) << "\",\n  \"eq5\": " << to_json(report) << "\n}\n";
        return report.holds ? 0 : 1;
    }
    row(out, "hypotheses", num(phi));
    row(out, "Z", num(setup.normalizer), "bound 1 + 1/|Phi| = " + num(1.0 + 1.0 / phi));
    row(out, "min p'", num(min_lifted), "floor 1/(2|Phi|^2) = " + num(1.0 / (2.0 * phi * phi)));
    row(out, "GBS c_avg p", num(c_avg(setup.true_prior, Policy{setup.gbs}, numerics)));
    row(out, "GBS c_avg p'", num(c_avg(setup.modified, Policy{setup.gbs}, numerics)));
    row(out, "opt c_avg p", num(c_avg(setup.true_prior, Policy{reference}, numerics)));
    row(out, "beta'", num(beta_lifted));
    row(out, "eq5 lhs", num(report.lhs));
    row(out, "eq5 rhs", num(report.rhs));
    row(out, "eq5 holds", report.holds ? "yes" : "NO");
    return report.holds ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Adaptive maximization toolkit: policies, parameters, oracles and bound checks", "maxgain"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "Emit JSON");
    app.add_option("--tolerance", g.tolerance, "Comparison tolerance")->capture_default_str();
    app.add_option("--enum-budget", g.enum_budget, "Limit on enumerated policies / DP states")->capture_default_str();

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Write a witness, random or demo instance");
    generate->add_option("--family", gen.family, "theorem4 | theorem5 | random | hypotheses-demo")->required();
    generate->add_option("--k", gen.k, "Ground set size (witnesses) or demo points")->capture_default_str();
    generate->add_option("--epsilon", gen.epsilon, "Geometric ratio for theorem5")->capture_default_str();
    generate->add_option("--elements", gen.elements, "Elements for random instances")->capture_default_str();
    generate->add_option("--states", gen.states, "States for random instances")->capture_default_str();
    generate->add_option("--seed", gen.seed, "Seed for random instances")->capture_default_str();
    generate->add_flag("--monotone", gen.monotone, "Force an adaptive monotone random utility");
    generate->add_option("--out", gen.out, "Instance output path")->required();
    generate->add_option("--policy-out", gen.policy_out, "Policy output path (default <out>.policy.json)");

    ParamsArgs params;
    auto* params_cmd = app.add_subcommand("params", "Compute alpha, beta, gamma, Q, eta, f_avg and c_avg");
    params_cmd->add_option("--instance", params.instance, "Instance file")->required();
    auto* policy_opt = params_cmd->add_option("--policy", params.policy, "Policy file");
    params_cmd->add_flag("--greedy", params.greedy, "Use the greedy policy")->excludes(policy_opt);
    params_cmd->add_option("--n", params.n, "gamma context size bound")->capture_default_str();
    params_cmd->add_option("--k", params.k, "gamma policy height bound")->capture_default_str();
    params_cmd->add_option("--gamma", params.gamma, "exact | sampled | skip")->capture_default_str();
    params_cmd->add_option("--samples", params.samples, "Sampled policies per context")->capture_default_str();
    params_cmd->add_option("--seed", params.seed, "Sampling seed")->capture_default_str();

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Compute an optimal policy by exhaustive search");
    solve_cmd->add_option("--instance", solve.instance, "Instance file")->required();
    solve_cmd->add_option("--objective", solve.objective, "budget | coverage")->required();
    solve_cmd->add_option("--k", solve.k, "Height bound for the budget objective");
    solve_cmd->add_option("--q", solve.q, "Coverage target (default Q)");
    solve_cmd->add_flag("--unpruned", solve.unpruned, "Consider every element in the coverage search");
    solve_cmd->add_option("--out", solve.out, "Write the optimal policy here");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check approximation guarantees numerically");
    verify_cmd->add_option("--bounds", verify_args.bounds, "Comma list of thm1,thm2,thm6,eq1..eq5,lemma2,lemma3 or all");
    verify_cmd->add_option("--instance", verify_args.instance, "Instance file");
    verify_cmd->add_option("--policy", verify_args.policy, "greedy or a policy file")->capture_default_str();
    verify_cmd->add_option("--l", verify_args.l, "Budget l for thm1/eq3 (default: every l up to c_avg)");
    verify_cmd->add_option("--reference", verify_args.reference, "Reference policy file (default: exact oracle)");
    verify_cmd->add_option("--oracle-k", verify_args.oracle_k, "Height of the budget oracle")->capture_default_str();
    verify_cmd->add_option("--corpus", verify_args.corpus, "Seed range a..b of random monotone instances");
    verify_cmd->add_option("--elements", verify_args.elements, "Corpus instance size")->capture_default_str();
    verify_cmd->add_option("--states", verify_args.states, "Corpus state count")->capture_default_str();
    verify_cmd->add_option("--hypotheses", verify_args.hypotheses, "Hypothesis class file (active-learning bounds)");
    verify_cmd->add_flag("--use-ground-set-size", verify_args.ground_set, "Use |V| instead of the height in log terms");
    verify_cmd->add_option("--gamma", verify_args.gamma, "exact | sampled")->capture_default_str();

    std::string hypotheses_path;
    auto* learn_cmd = app.add_subcommand("active-learning", "Run GBS with the modified prior and check the coverage bound");
    learn_cmd->add_option("--hypotheses", hypotheses_path, "Hypothesis class file")->required();

    std::vector<std::string> argv_storage{"maxgain"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_storage) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*generate) return cmd_generate(gen, out);
        if (*params_cmd) return cmd_params(params, g, out);
        if (*solve_cmd) return cmd_solve(solve, g, out);
        if (*verify_cmd) return cmd_verify(verify_args, g, out);
        if (*learn_cmd) return cmd_active_learning(hypotheses_path, g, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace maxgain::cli
