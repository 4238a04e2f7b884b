#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace vlab::cli {

/// Bad invocation: unknown scenario, unknown/mistyped parameter, malformed
/// config file. Mapped to exit code 2 by the tool.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
    std::string scenario;
    nlohmann::json parameters; // object: key -> number | string
    std::filesystem::path output_path;
    std::uint64_t seed{0};
};

enum class ParamType { number, integer, text };

struct ParamSpec {
    std::string key; // underscore form; the flag is --key-with-dashes
    ParamType type;
    nlohmann::json default_value; // null means required
    std::string help;
};

struct ScenarioInfo {
    std::string name;
    std::string description;
    std::vector<ParamSpec> params;
};

const std::vector<ScenarioInfo>& scenario_registry();
const ScenarioInfo* find_scenario(const std::string& name);

/// Defaults overlaid with `values`; unknown keys, missing required keys and
/// type mismatches raise UsageError.
nlohmann::json validate_parameters(const ScenarioInfo& info,
                                   const nlohmann::json& values);

/// Tokens are everything after the `run` subcommand: the scenario name,
/// --config/--out/--seed, and per-scenario --<param> <value> flags. Flag
/// values override config-file values, which override defaults.
ScenarioConfig parse_config(const std::vector<std::string>& tokens);

struct CheckResult {
    std::string name;
    bool passed;
    double value;       // the measured quantity the check gated on
    std::string detail; // includes a reason code on failure
};

struct RunReport {
    std::string scenario;
    double duration_seconds{0.0};
    std::vector<std::filesystem::path> files_written;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    nlohmann::json to_json() const;
};

/// Executes the configured scenario. Output files are a deterministic
/// function of (config, seed): reruns produce byte-identical data files.
RunReport run_scenario(const ScenarioConfig& config);

void print_scenario_list(std::ostream& out);

/// Quick pass over the cross-module invariants (the `check` subcommand).
/// Prints one line per check and returns the number of failures.
int run_embedded_checks(std::ostream& out);

} // namespace vlab::cli
