#include "vlab/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

namespace vlab::cli {

namespace detail {
// Implemented in scenarios.cpp.
void run_lorentz(const ScenarioConfig& config, RunReport& report);
void run_space(const ScenarioConfig& config, RunReport& report);
void run_lattice(const ScenarioConfig& config, RunReport& report);
void run_packet(const ScenarioConfig& config, RunReport& report);
void run_slits(const ScenarioConfig& config, RunReport& report);
} // namespace detail

const std::vector<ScenarioInfo>& scenario_registry() {
    static const std::vector<ScenarioInfo> registry = {
        {"lorentz",
         "ratio invariance of parallel null four-vectors over seeded boosts",
         {
             {"n_boosts", ParamType::integer, 100, "number of random boosts"},
             {"beta_max", ParamType::number, 0.95, "largest |beta| drawn"},
             {"k_magnitude", ParamType::number, 1e7,
              "wave-vector magnitude, rad/m"},
         }},
        {"space",
         "Cauchy-Riemann and Laplacian residual tables for the complex potentials",
         {
             {"h0", ParamType::number, 0.05, "coarsest grid spacing"},
             {"n_refinements", ParamType::integer, 4,
              "number of h -> h/2 halvings"},
             {"charge", ParamType::number, 1.0, "point charge Q"},
             {"sigma", ParamType::number, 1.0 / (2.0 * std::numbers::pi),
              "sheet charge density"},
             {"region_min", ParamType::number, 1.0, "square region lower corner"},
             {"region_max", ParamType::number, 2.0, "square region upper corner"},
         }},
        {"lattice",
         "vacuum-string chain: energy series, drift check, model constant",
         {
             {"n_sites", ParamType::integer, 4096, "chain length"},
             {"d", ParamType::number, 0.01, "site spacing, m"},
             {"m_e", ParamType::number, 1.0, "site mass magnitude, kg"},
             {"K", ParamType::number, 1.0, "spring constant, N/m"},
             {"steps", ParamType::integer, 10000, "velocity-Verlet steps"},
             {"mode", ParamType::integer, 1, "excited standing mode"},
             {"amplitude", ParamType::number, 0.0,
              "mode amplitude, m; 0 selects the calibrated preset"},
             {"boundary", ParamType::text, "periodic", "periodic or fixed"},
             {"record_every", ParamType::integer, 10,
              "energy-series row stride"},
         }},
        {"packet",
         "Gaussian wave packet: spectrum, time-evolution dumps, uncertainty",
         {
             {"k0", ParamType::number, 12.0, "spectral center, rad/m"},
             {"sigma_k", ParamType::number, 1.0, "spectral width, rad/m"},
             {"n_points", ParamType::integer, 1024, "grid size"},
             {"k_max", ParamType::number, 24.0, "grid half-extent, rad/m"},
             {"wave_speed", ParamType::number, 1.0,
              "linear dispersion speed, m/s"},
             {"n_dumps", ParamType::integer, 3, "number of time snapshots"},
             {"t_max", ParamType::number, 2.0, "last snapshot time, s"},
         }},
        {"slits",
         "double-slit estimates and far-field interference pattern",
         {
             {"D", ParamType::number, 1e-3, "slit half-separation, m"},
             {"L", ParamType::number, 1.0, "screen distance, m"},
             {"delta_E", ParamType::number, 1e-26, "energy uncertainty, J"},
             {"gamma", ParamType::number, 100.0, "Lorentz factor"},
             {"wavelength", ParamType::number, 1e-6, "pattern wavelength, m"},
             {"y_max", ParamType::number, 5e-3, "screen half-extent, m"},
             {"n_points", ParamType::integer, 4001, "screen grid size"},
         }},
    };
    return registry;
}

const ScenarioInfo* find_scenario(const std::string& name) {
    for (const auto& info : scenario_registry()) {
        if (info.name == name) {
            return &info;
        }
    }
    return nullptr;
}

namespace {

double parse_number_token(const std::string& text, const std::string& key) {
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return value;
    } catch (const std::exception&) {
        throw UsageError("parameter '" + key + "' expects a number, got '" +
                         text + "'");
    }
}

long long parse_integer_token(const std::string& text, const std::string& key) {
    try {
        std::size_t used = 0;
        const long long value = std::stoll(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return value;
    } catch (const std::exception&) {
        throw UsageError("parameter '" + key + "' expects an integer, got '" +
                         text + "'");
    }
}

const ParamSpec* find_param(const ScenarioInfo& info, const std::string& key) {
    for (const auto& p : info.params) {
        if (p.key == key) {
            return &p;
        }
    }
    return nullptr;
}

nlohmann::json coerce_json_value(const ParamSpec& spec,
                                 const nlohmann::json& value) {
    switch (spec.type) {
    case ParamType::number:
        if (!value.is_number()) {
            throw UsageError("parameter '" + spec.key + "' expects a number");
        }
        return value.get<double>();
    case ParamType::integer:
        if (value.is_number_integer()) {
            return value.get<long long>();
        }
        if (value.is_number_float()) {
            const double d = value.get<double>();
            if (d == std::floor(d)) {
                return static_cast<long long>(d);
            }
        }
        throw UsageError("parameter '" + spec.key + "' expects an integer");
    case ParamType::text:
        if (!value.is_string()) {
            throw UsageError("parameter '" + spec.key + "' expects a string");
        }
        return value;
    }
    throw UsageError("unhandled parameter type");
}

nlohmann::json coerce_flag_value(const ParamSpec& spec, const std::string& text) {
    switch (spec.type) {
    case ParamType::number:
        return parse_number_token(text, spec.key);
    case ParamType::integer:
        return parse_integer_token(text, spec.key);
    case ParamType::text:
        return text;
    }
    throw UsageError("unhandled parameter type");
}

} // namespace

nlohmann::json validate_parameters(const ScenarioInfo& info,
                                   const nlohmann::json& values) {
    nlohmann::json result = nlohmann::json::object();
    for (const auto& spec : info.params) {
        if (!spec.default_value.is_null()) {
            result[spec.key] = spec.default_value;
        }
    }
    if (!values.is_null()) {
        if (!values.is_object()) {
            throw UsageError("parameters must be a JSON object");
        }
        for (const auto& [key, value] : values.items()) {
            const ParamSpec* spec = find_param(info, key);
            if (spec == nullptr) {
                throw UsageError("unknown parameter '" + key +
                                 "' for scenario '" + info.name + "'");
            }
            result[key] = coerce_json_value(*spec, value);
        }
    }
    for (const auto& spec : info.params) {
        if (!result.contains(spec.key)) {
            throw UsageError("missing required parameter '" + spec.key +
                             "' for scenario '" + info.name + "'");
        }
    }
    return result;
}

ScenarioConfig parse_config(const std::vector<std::string>& tokens) {
    if (tokens.empty()) {
        throw UsageError("missing scenario name; try 'list'");
    }
    const std::string& scenario = tokens[0];
    if (scenario.rfind("-", 0) == 0) {
        throw UsageError("expected a scenario name before flags");
    }
    const ScenarioInfo* info = find_scenario(scenario);
    if (info == nullptr) {
        throw UsageError("unknown scenario '" + scenario + "'; try 'list'");
    }

    std::filesystem::path config_file;
    bool have_file = false;
    std::string out_flag;
    bool have_out = false;
    std::string seed_flag;
    bool have_seed = false;
    std::vector<std::pair<std::string, std::string>> flag_params;

    for (std::size_t i = 1; i < tokens.size(); i += 2) {
        const std::string& flag = tokens[i];
        if (flag.rfind("--", 0) != 0 || flag.size() <= 2) {
            throw UsageError("expected a --flag, got '" + flag + "'");
        }
        if (i + 1 >= tokens.size()) {
            throw UsageError("flag '" + flag + "' is missing its value");
        }
        std::string key = flag.substr(2);
        std::replace(key.begin(), key.end(), '-', '_');
        const std::string& value = tokens[i + 1];
        if (key == "config") {
            config_file = value;
            have_file = true;
        } else if (key == "out") {
            out_flag = value;
            have_out = true;
        } else if (key == "seed") {
            seed_flag = value;
            have_seed = true;
        } else {
            flag_params.emplace_back(key, value);
        }
    }

    ScenarioConfig config;
    config.scenario = scenario;
    config.seed = 0;
    nlohmann::json merged = nlohmann::json::object();

    if (have_file) {
        std::ifstream in(config_file);
        if (!in) {
            throw UsageError("cannot read config file: " + config_file.string());
        }
        auto doc = nlohmann::json::parse(in, nullptr, false);
        if (doc.is_discarded() || !doc.is_object()) {
            throw UsageError("malformed config file: " + config_file.string());
        }
        for (const auto& [key, value] : doc.items()) {
            if (key == "scenario") {
                if (!value.is_string() || value.get<std::string>() != scenario) {
                    throw UsageError(
                        "config file scenario does not match the command line");
                }
            } else if (key == "seed") {
                if (!value.is_number_unsigned()) {
                    throw UsageError("config file seed must be unsigned");
                }
                config.seed = value.get<std::uint64_t>();
            } else if (key == "out") {
                if (!value.is_string()) {
                    throw UsageError("config file out must be a string");
                }
                config.output_path = value.get<std::string>();
            } else if (key == "parameters") {
                if (!value.is_object()) {
                    throw UsageError("config file parameters must be an object");
                }
                for (const auto& [pkey, pvalue] : value.items()) {
                    const ParamSpec* spec = find_param(*info, pkey);
                    if (spec == nullptr) {
                        throw UsageError("unknown parameter '" + pkey +
                                         "' in config file");
                    }
                    merged[pkey] = coerce_json_value(*spec, pvalue);
                }
            } else {
                throw UsageError("unknown key '" + key + "' in config file");
            }
        }
    }

    for (const auto& [key, value] : flag_params) {
        const ParamSpec* spec = find_param(*info, key);
        if (spec == nullptr) {
            throw UsageError("unknown flag '--" + key + "' for scenario '" +
                             scenario + "'");
        }
        merged[key] = coerce_flag_value(*spec, value);
    }

    if (have_seed) {
        // stoull silently wraps negatives, so insist on digits only.
        const bool digits_only =
            !seed_flag.empty() &&
            seed_flag.find_first_not_of("0123456789") == std::string::npos;
        try {
            if (!digits_only) {
                throw std::invalid_argument(seed_flag);
            }
            config.seed = std::stoull(seed_flag);
        } catch (const std::exception&) {
            throw UsageError("--seed expects an unsigned integer");
        }
    }
    if (have_out) {
        config.output_path = out_flag;
    }
    if (config.output_path.empty()) {
        config.output_path = scenario;
    }

    config.parameters = validate_parameters(*info, merged);
    return config;
}

bool RunReport::all_passed() const {
    for (const auto& c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

nlohmann::json RunReport::to_json() const {
    nlohmann::json files = nlohmann::json::array();
    for (const auto& f : files_written) {
        files.push_back(f.string());
    }
    nlohmann::json check_list = nlohmann::json::array();
    for (const auto& c : checks) {
        check_list.push_back({{"name", c.name},
                              {"passed", c.passed},
                              {"value", c.value},
                              {"detail", c.detail}});
    }
    return {{"scenario", scenario},
            {"duration_seconds", duration_seconds},
            {"files", files},
            {"checks", check_list},
            {"status", all_passed() ? "ok" : "check_failed"}};
}

RunReport run_scenario(const ScenarioConfig& config) {
    RunReport report;
    report.scenario = config.scenario;
    const auto start = std::chrono::steady_clock::now();

    if (config.scenario == "lorentz") {
        detail::run_lorentz(config, report);
    } else if (config.scenario == "space") {
        detail::run_space(config, report);
    } else if (config.scenario == "lattice") {
        detail::run_lattice(config, report);
    } else if (config.scenario == "packet") {
        detail::run_packet(config, report);
    } else if (config.scenario == "slits") {
        detail::run_slits(config, report);
    } else {
        throw UsageError("unknown scenario '" + config.scenario + "'");
    }

    const auto end = std::chrono::steady_clock::now();
    report.duration_seconds =
        std::chrono::duration<double>(end - start).count();
    return report;
}

void print_scenario_list(std::ostream& out) {
    for (const auto& info : scenario_registry()) {
        out << info.name << "  -  " << info.description << '\n';
        for (const auto& p : info.params) {
            std::string flag = p.key;
            std::replace(flag.begin(), flag.end(), '_', '-');
            out << "    --" << flag << "  " << p.help;
            if (!p.default_value.is_null()) {
                out << " (default " << p.default_value.dump() << ")";
            }
            out << '\n';
        }
    }
}

} // namespace vlab::cli
