// Command-line front end: exact convex-hull analysis, maximum-likelihood
// fitting, and degeneracy trajectories for small-graph exponential families.
//
// Exit codes:
//   0 success
//   2 configuration or input rejected
//   3 request exceeds a hard capacity limit
//   4 no MLE exists (certificate in the error payload)
//   5 optimizer ran out of iterations (best iterate in the error payload)
//   6 no separating direction (target is inside the hull)
//   7 cache failure (reserved; the pipeline recovers from cache defects)
//   8 internal invariant violated

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ergm/config.hpp"
#include "ergm/errors.hpp"
#include "ergm/pipeline.hpp"

namespace {

using nlohmann::json;

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = csv.find(',', start);
        out.push_back(csv.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

json csv_to_number_array(const std::string& csv, const std::string& field) {
    json arr = json::array();
    for (const std::string& token : split_csv(csv)) {
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            arr.push_back(v);
        } catch (const std::exception&) {
            throw ergm::ConfigError(field, "'" + token + "' is not a number");
        }
    }
    return arr;
}

int emit_error(const char* type, const std::string& message, int code,
               const json& extra = json()) {
    json payload;
    payload["schema_version"] = 1;
    json err;
    err["type"] = type;
    err["message"] = message;
    if (!extra.is_null())
        for (auto it = extra.begin(); it != extra.end(); ++it) err[it.key()] = it.value();
    payload["error"] = std::move(err);
    std::cout << payload.dump(2) << '\n';
    std::cerr << "ergmx: " << message << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact hull geometry, MLE existence, and degeneracy analysis\n"
                 "for exponential families over all graphs on up to 8 vertices"};
    app.set_version_flag("--version", "ergmx 1.0.0");
    app.require_subcommand(1);

    std::string config_path;
    int k = 0;
    std::string stats_csv;
    std::string target_csv;
    std::string cache_path;
    std::uint64_t seed = 0;
    std::string r_schedule_csv;
    int probe_trials = 0;
    double grad_tol = 0, armijo_c = 0, backtrack = 0;
    int max_iters = 0;
    std::string init_csv;
    bool compact = false;

    struct SubcommandSpec {
        const char* name;
        const char* description;
    };
    constexpr SubcommandSpec kSubcommands[] = {
        {"hull", "enumerate realizable statistic vectors and their hull geometry"},
        {"check", "locate a target relative to the hull, with an exact certificate"},
        {"fit", "compute the MLE for a target in the relative interior"},
        {"degeneracy", "walk the diverging trajectory for a target outside the hull"},
        {"probe", "spot-check flat directions and concavity at random parameters"},
        {"all", "hull + check, then fit or degeneracy depending on the verdict"},
    };

    std::vector<CLI::Option*> opt_k, opt_stats, opt_target, opt_cache, opt_seed, opt_sched,
        opt_trials, opt_grad_tol, opt_max_iters, opt_armijo, opt_backtrack, opt_init;
    for (const auto& spec : kSubcommands) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.description);
        sub->add_option("--config", config_path, "JSON config file; flags override its fields");
        opt_k.push_back(sub->add_option("--k", k, "number of vertices (1..8)"));
        opt_stats.push_back(
            sub->add_option("--stats", stats_csv,
                            "comma-separated statistics: edges, triangles, two_stars, "
                            "mean_degree, isolates, max_degree"));
        opt_target.push_back(sub->add_option(
            "--target", target_csv, "comma-separated target vector; entries like 3, 1/2, 0.25"));
        opt_cache.push_back(
            sub->add_option("--cache", cache_path, "cache file for the enumerated point set"));
        opt_seed.push_back(sub->add_option("--seed", seed, "RNG seed for probe mode"));
        opt_sched.push_back(sub->add_option("--r-schedule", r_schedule_csv,
                                            "comma-separated increasing ray multipliers"));
        opt_trials.push_back(
            sub->add_option("--probe-trials", probe_trials, "random trials in probe mode"));
        opt_grad_tol.push_back(
            sub->add_option("--grad-tol", grad_tol, "gradient sup-norm stopping tolerance"));
        opt_max_iters.push_back(sub->add_option("--max-iters", max_iters, "Newton iteration cap"));
        opt_armijo.push_back(
            sub->add_option("--armijo-c", armijo_c, "sufficient-increase fraction in (0,1)"));
        opt_backtrack.push_back(
            sub->add_option("--backtrack", backtrack, "step shrink factor in (0,1)"));
        opt_init.push_back(
            sub->add_option("--init", init_csv, "comma-separated starting parameter vector"));
        sub->add_flag("--compact", compact, "single-line JSON output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        json cfg = config_path.empty() ? json::object() : ergm::load_json_file(config_path);
        if (!cfg.is_object())
            throw ergm::ConfigError(config_path, "configuration must be a JSON object");

        cfg["mode"] = app.get_subcommands().at(0)->get_name();
        const auto given = [](const std::vector<CLI::Option*>& opts) {
            for (const CLI::Option* o : opts)
                if (o->count() > 0) return true;
            return false;
        };
        if (given(opt_k)) cfg["k"] = k;
        if (given(opt_stats)) cfg["statistics"] = split_csv(stats_csv);
        if (given(opt_target)) cfg["target"] = split_csv(target_csv);
        if (given(opt_cache)) cfg["cache"] = cache_path;
        if (given(opt_seed)) cfg["seed"] = seed;
        if (given(opt_sched)) cfg["r_schedule"] = csv_to_number_array(r_schedule_csv, "r_schedule");
        if (given(opt_trials)) cfg["probe_trials"] = probe_trials;
        if (given(opt_grad_tol)) cfg["fit"]["grad_tol"] = grad_tol;
        if (given(opt_max_iters)) cfg["fit"]["max_iters"] = max_iters;
        if (given(opt_armijo)) cfg["fit"]["armijo_c"] = armijo_c;
        if (given(opt_backtrack)) cfg["fit"]["backtrack"] = backtrack;
        if (given(opt_init)) cfg["fit"]["init"] = csv_to_number_array(init_csv, "fit.init");

        const ergm::RunConfig run_config = ergm::parse_config(cfg);
        const json report = ergm::run_pipeline(run_config);

        if (report.contains("realizable") && report["realizable"].contains("cache") &&
            report["realizable"]["cache"].contains("warning"))
            std::cerr << "ergmx: warning: "
                      << report["realizable"]["cache"]["warning"].get<std::string>() << '\n';

        std::cout << report.dump(compact ? -1 : 2) << '\n';
        return 0;
    } catch (const ergm::ConfigError& e) {
        return emit_error("CONFIG", e.what(), 2);
    } catch (const ergm::InvalidInput& e) {
        return emit_error("INVALID_INPUT", e.what(), 2);
    } catch (const ergm::CapacityExceeded& e) {
        return emit_error("CAPACITY", e.what(), 3);
    } catch (const ergm::NoMleError& e) {
        json extra;
        extra["certificate"] = ergm::certificate_to_json(e.certificate());
        return emit_error("NO_MLE", e.what(), 4, extra);
    } catch (const ergm::NonConvergenceError& e) {
        json extra;
        extra["best"] = ergm::fit_result_to_json(e.best());
        return emit_error("NON_CONVERGENCE", e.what(), 5, extra);
    } catch (const ergm::NotSeparable& e) {
        return emit_error("NOT_SEPARABLE", e.what(), 6);
    } catch (const ergm::CacheError& e) {
        return emit_error("CACHE", e.what(), 7);
    } catch (const ergm::ViolatedBound& e) {
        return emit_error("VIOLATED_BOUND", e.what(), 8);
    } catch (const ergm::InternalError& e) {
        return emit_error("INTERNAL", e.what(), 8);
    } catch (const std::exception& e) {
        return emit_error("INTERNAL", e.what(), 8);
    }
}
