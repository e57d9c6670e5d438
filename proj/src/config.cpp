#include "ergm/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>

#include "ergm/errors.hpp"
#include "ergm/graphspace.hpp"

namespace ergm {

namespace {

using nlohmann::json;

constexpr struct {
    RunMode mode;
    std::string_view name;
} kModeNames[] = {
    {RunMode::Hull, "hull"},   {RunMode::Check, "check"}, {RunMode::Fit, "fit"},
    {RunMode::Degeneracy, "degeneracy"}, {RunMode::Probe, "probe"}, {RunMode::All, "all"},
};

void reject_unknown_keys(const json& j, std::initializer_list<std::string_view> allowed,
                         const std::string& prefix) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const bool known = std::any_of(allowed.begin(), allowed.end(),
                                       [&](std::string_view a) { return a == it.key(); });
        if (!known) throw ConfigError(prefix + it.key(), "unknown field");
    }
}

std::int64_t require_integer(const json& j, const std::string& path) {
    if (!j.is_number_integer())
        throw ConfigError(path, "expected an integer, got " + std::string(j.type_name()));
    return j.get<std::int64_t>();
}

// Accepts JSON numbers and numeric strings (the report echo renders every
// float as a %.17g string, and echoes must parse back).
double require_number(const json& j, const std::string& path) {
    double v = 0;
    if (j.is_number()) {
        v = j.get<double>();
    } else if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t used = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw ConfigError(path, "'" + s + "' is not a number");
        }
        if (used != s.size()) throw ConfigError(path, "'" + s + "' is not a number");
    } else {
        throw ConfigError(path, "expected a number, got " + std::string(j.type_name()));
    }
    if (!std::isfinite(v)) throw ConfigError(path, "must be finite");
    return v;
}

std::string require_string(const json& j, const std::string& path) {
    if (!j.is_string())
        throw ConfigError(path, "expected a string, got " + std::string(j.type_name()));
    return j.get<std::string>();
}

const json& require_array(const json& j, const std::string& path) {
    if (!j.is_array())
        throw ConfigError(path, "expected an array, got " + std::string(j.type_name()));
    return j;
}

/// Accepts exact "p/q" strings and JSON numbers (doubles convert exactly).
Rat rational_entry(const json& j, const std::string& path) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
        if (j.is_number_float()) return rational_from_double(j.get<double>());
    } catch (const Error& e) {
        throw ConfigError(path, e.what());
    }
    throw ConfigError(path, "expected a number or a \"p/q\" string, got " +
                                std::string(j.type_name()));
}

void parse_fit_section(const json& j, RunConfig& config) {
    if (!j.is_object()) throw ConfigError("fit", "expected an object");
    reject_unknown_keys(j, {"grad_tol", "max_iters", "armijo_c", "backtrack", "init"},
                        "fit.");
    if (j.contains("grad_tol")) config.fit.grad_tol = require_number(j["grad_tol"], "fit.grad_tol");
    if (j.contains("max_iters"))
        config.fit.max_iters = static_cast<int>(require_integer(j["max_iters"], "fit.max_iters"));
    if (j.contains("armijo_c")) config.fit.armijo_c = require_number(j["armijo_c"], "fit.armijo_c");
    if (j.contains("backtrack"))
        config.fit.backtrack = require_number(j["backtrack"], "fit.backtrack");
    if (j.contains("init")) {
        const json& arr = require_array(j["init"], "fit.init");
        config.fit.init.resize(static_cast<Eigen::Index>(arr.size()));
        for (std::size_t i = 0; i < arr.size(); ++i)
            config.fit.init[static_cast<Eigen::Index>(i)] =
                require_number(arr[i], "fit.init[" + std::to_string(i) + "]");
    }
}

}  // namespace

std::string_view run_mode_name(RunMode mode) {
    for (const auto& entry : kModeNames)
        if (entry.mode == mode) return entry.name;
    return "unknown";
}

std::optional<RunMode> run_mode_from_name(std::string_view name) {
    for (const auto& entry : kModeNames)
        if (entry.name == name) return entry.mode;
    return std::nullopt;
}

RunConfig parse_config(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("$", "configuration must be a JSON object");
    reject_unknown_keys(j,
                        {"mode", "k", "statistics", "target", "cache", "seed",
                         "r_schedule", "probe_trials", "fit"},
                        "");

    RunConfig config;

    if (j.contains("mode")) {
        const std::string name = require_string(j["mode"], "mode");
        const auto mode = run_mode_from_name(name);
        if (!mode) throw ConfigError("mode", "unknown mode '" + name + "'");
        config.mode = *mode;
    }

    if (!j.contains("k")) throw ConfigError("k", "required field is missing");
    config.k = static_cast<int>(require_integer(j["k"], "k"));

    if (!j.contains("statistics")) throw ConfigError("statistics", "required field is missing");
    for (const json& entry : require_array(j["statistics"], "statistics"))
        config.statistics.push_back(require_string(
            entry, "statistics[" + std::to_string(config.statistics.size()) + "]"));

    if (j.contains("target")) {
        RatVec t;
        for (const json& entry : require_array(j["target"], "target"))
            t.push_back(rational_entry(entry, "target[" + std::to_string(t.size()) + "]"));
        config.target = std::move(t);
    }

    if (j.contains("cache")) config.cache_path = require_string(j["cache"], "cache");

    if (j.contains("seed")) {
        if (j["seed"].is_number_unsigned()) {
            config.seed = j["seed"].get<std::uint64_t>();
        } else {
            const std::int64_t s = require_integer(j["seed"], "seed");
            if (s < 0) throw ConfigError("seed", "must be nonnegative");
            config.seed = static_cast<std::uint64_t>(s);
        }
    }

    if (j.contains("r_schedule")) {
        const json& arr = require_array(j["r_schedule"], "r_schedule");
        for (std::size_t i = 0; i < arr.size(); ++i)
            config.r_schedule.push_back(
                require_number(arr[i], "r_schedule[" + std::to_string(i) + "]"));
    }

    if (j.contains("probe_trials"))
        config.probe_trials = static_cast<int>(require_integer(j["probe_trials"], "probe_trials"));

    if (j.contains("fit")) parse_fit_section(j["fit"], config);

    validate_config(config);
    return config;
}

void validate_config(const RunConfig& config) {
    if (config.k < 1) throw ConfigError("k", "must be at least 1");
    if (config.k > kMaxVertices)
        throw CapacityExceeded("k = " + std::to_string(config.k) + " exceeds the " +
                               std::to_string(kMaxVertices) + "-vertex enumeration limit");

    if (config.statistics.empty())
        throw ConfigError("statistics", "at least one statistic is required");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < config.statistics.size(); ++i) {
        const std::string& name = config.statistics[i];
        if (!stat_kind_from_name(name))
            throw ConfigError("statistics[" + std::to_string(i) + "]",
                              "unknown statistic '" + name + "'");
        if (!seen.insert(name).second)
            throw ConfigError("statistics", "duplicate statistic '" + name + "'");
    }

    const bool needs_target = config.mode == RunMode::Check || config.mode == RunMode::Fit ||
                              config.mode == RunMode::Degeneracy || config.mode == RunMode::All;
    if (needs_target && !config.target)
        throw ConfigError("target", std::string("required for mode '") +
                                        std::string(run_mode_name(config.mode)) + "'");
    if (config.target && config.target->size() != config.statistics.size())
        throw ConfigError("target",
                          "expected " + std::to_string(config.statistics.size()) +
                              " entries, got " + std::to_string(config.target->size()));

    for (std::size_t i = 0; i < config.r_schedule.size(); ++i) {
        const std::string path = "r_schedule[" + std::to_string(i) + "]";
        if (!std::isfinite(config.r_schedule[i]) || config.r_schedule[i] <= 0)
            throw ConfigError(path, "must be positive and finite");
        if (i > 0 && config.r_schedule[i] <= config.r_schedule[i - 1])
            throw ConfigError(path, "schedule must be strictly increasing");
    }

    if (config.probe_trials < 1 || config.probe_trials > 100000)
        throw ConfigError("probe_trials", "must be between 1 and 100000");

    if (!(config.fit.grad_tol > 0) || !std::isfinite(config.fit.grad_tol))
        throw ConfigError("fit.grad_tol", "must be positive and finite");
    if (config.fit.max_iters < 1) throw ConfigError("fit.max_iters", "must be at least 1");
    if (!(config.fit.armijo_c > 0 && config.fit.armijo_c < 1))
        throw ConfigError("fit.armijo_c", "must lie strictly between 0 and 1");
    if (!(config.fit.backtrack > 0 && config.fit.backtrack < 1))
        throw ConfigError("fit.backtrack", "must lie strictly between 0 and 1");
    if (config.fit.init.size() != 0 &&
        static_cast<std::size_t>(config.fit.init.size()) != config.statistics.size())
        throw ConfigError("fit.init",
                          "expected " + std::to_string(config.statistics.size()) +
                              " entries, got " + std::to_string(config.fit.init.size()));
    for (Eigen::Index i = 0; i < config.fit.init.size(); ++i)
        if (!std::isfinite(config.fit.init[i]))
            throw ConfigError("fit.init[" + std::to_string(i) + "]", "must be finite");
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path, "cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path, e.what());
    }
}

std::string format_double(double value) {
    if (value == 0.0) return "0";  // folds -0 into 0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

nlohmann::json config_to_json(const RunConfig& config) {
    json j;
    j["mode"] = std::string(run_mode_name(config.mode));
    j["k"] = config.k;
    j["statistics"] = config.statistics;
    if (config.target) {
        json t = json::array();
        for (const Rat& r : *config.target) t.push_back(to_fraction_string(r));
        j["target"] = std::move(t);
    }
    if (config.cache_path) j["cache"] = *config.cache_path;
    j["seed"] = config.seed;
    if (!config.r_schedule.empty()) {
        json arr = json::array();
        for (double r : config.r_schedule) arr.push_back(format_double(r));
        j["r_schedule"] = std::move(arr);
    }
    j["probe_trials"] = config.probe_trials;
    json fit;
    fit["grad_tol"] = format_double(config.fit.grad_tol);
    fit["max_iters"] = config.fit.max_iters;
    fit["armijo_c"] = format_double(config.fit.armijo_c);
    fit["backtrack"] = format_double(config.fit.backtrack);
    if (config.fit.init.size() != 0) {
        json arr = json::array();
        for (Eigen::Index i = 0; i < config.fit.init.size(); ++i)
            arr.push_back(format_double(config.fit.init[i]));
        fit["init"] = std::move(arr);
    }
    j["fit"] = std::move(fit);
    return j;
}

}  // namespace ergm
