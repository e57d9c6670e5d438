#pragma once

#include "ergm/likelihood.hpp"
#include "ergm/rational.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ergm {

enum class RunMode { Hull, Check, Fit, Degeneracy, Probe, All };

std::string_view run_mode_name(RunMode mode);
std::optional<RunMode> run_mode_from_name(std::string_view name);

/// Everything one invocation needs. `target` is required by the modes that
/// evaluate a target (check, fit, degeneracy, all) and ignored elsewhere.
struct RunConfig {
    RunMode mode = RunMode::All;
    int k = 0;
    std::vector<std::string> statistics;
    std::optional<RatVec> target;
    std::optional<std::string> cache_path;
    std::uint64_t seed = 0;
    std::vector<double> r_schedule;  // empty means the built-in doubling schedule
    int probe_trials = 20;
    FitConfig fit;
};

/// Builds and validates a RunConfig from a JSON object. Unknown keys, type
/// mismatches, and out-of-range values raise ConfigError carrying the field
/// path; k beyond the enumeration limit raises CapacityExceeded instead so
/// oversize requests are reported as capacity, not configuration.
RunConfig parse_config(const nlohmann::json& j);

/// Re-checks invariants on an already-built RunConfig (the CLI constructs
/// configs from flags and funnels them through here).
void validate_config(const RunConfig& config);

/// Reads a JSON object from disk; IO and parse failures raise ConfigError.
nlohmann::json load_json_file(const std::string& path);

/// Deterministic echo of the configuration for inclusion in reports.
/// Rationals render as "p/q" strings, floating-point values as %.17g strings.
nlohmann::json config_to_json(const RunConfig& config);

/// %.17g rendering used for every floating-point value that enters a JSON
/// report (round-trips exactly; -0 is folded into "0").
std::string format_double(double value);

}  // namespace ergm
