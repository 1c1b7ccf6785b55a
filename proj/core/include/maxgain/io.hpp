#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "maxgain/bounds.hpp"
#include "maxgain/instance.hpp"
#include "maxgain/learn.hpp"
#include "maxgain/metrics.hpp"
#include "maxgain/policy.hpp"

namespace maxgain {

/// Named utility generator referenced from an instance file instead of a table.
struct BuiltinUtility {
    /// "coverage", "theorem4" or "theorem5".
    std::string name;
    std::map<std::string, double> params;
};

/// Tabulates a builtin utility over the instance's realizations.
/// coverage accepts params {"modified": 1} to use the modified prior.
UtilityTable builtin_utility(const Instance& structure, const BuiltinUtility& builtin);

Instance parse_instance(std::string_view json_text);
Instance load_instance(const std::filesystem::path& path);
/// Table form unless `builtin` is given, in which case the utility is written as a reference.
std::string serialize_instance(const Instance& instance, const std::optional<BuiltinUtility>& builtin = std::nullopt);

/// Tree form {"select": name, "children": {state: ...}} / "terminal", or the threshold
/// form {"base": tree, "tau": x, "rho": y}. The result is validated against the instance.
Policy parse_policy(std::string_view json_text, const Instance& instance);
Policy load_policy(const std::filesystem::path& path, const Instance& instance);
std::string serialize_policy(const Policy& policy, const Instance& instance);

HypothesisClass parse_hypotheses(std::string_view json_text);
HypothesisClass load_hypotheses(const std::filesystem::path& path);
std::string serialize_hypotheses(const HypothesisClass& hypotheses);

std::string to_json(const ParamReport& report, const Instance& instance);
std::string to_json(const BoundReport& report);

/// Value rounded to 12 significant digits, the precision of every report.
double report_precision(double value);

void write_text_file(const std::filesystem::path& path, std::string_view content);
std::string read_text_file(const std::filesystem::path& path);

} // namespace maxgain
