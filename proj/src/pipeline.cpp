#include "ergm/pipeline.hpp"

#include <chrono>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "ergm/cache.hpp"
#include "ergm/errors.hpp"

namespace ergm {

namespace {

using nlohmann::json;

// Reports stay readable in an editor; beyond this the coordinates are
// summarized by their count only.
constexpr std::size_t kMaxListedPoints = 4096;

json rat_array(const RatVec& v) {
    json arr = json::array();
    for (const Rat& r : v) arr.push_back(to_fraction_string(r));
    return arr;
}

json rat_matrix(const RatMat& m) {
    json arr = json::array();
    for (const RatVec& row : m) arr.push_back(rat_array(row));
    return arr;
}

json double_array(const Eigen::VectorXd& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(format_double(v[i]));
    return arr;
}

json index_array(const std::vector<std::size_t>& v) {
    json arr = json::array();
    for (std::size_t i : v) arr.push_back(i);
    return arr;
}

class StageTimer {
public:
    explicit StageTimer(json& timings) : timings_(timings) {}

    void stage(const char* name) {
        using namespace std::chrono;
        const auto now = steady_clock::now();
        if (current_ != nullptr)
            timings_[current_] = duration_cast<duration<double, std::milli>>(now - start_).count();
        current_ = name;
        start_ = now;
    }

    void finish() { stage(nullptr); }

private:
    json& timings_;
    const char* current_ = nullptr;
    std::chrono::steady_clock::time_point start_{};
};

json realizable_to_json(const RealizableSet& set, const CacheOutcome& cache) {
    json j;
    j["k"] = set.k;
    json names = json::array();
    for (const auto& spec : set.specs) names.push_back(std::string(stat_kind_name(spec.kind)));
    j["statistics"] = std::move(names);
    j["point_count"] = set.points.size();
    j["total_graphs"] = set.total_graphs;
    if (set.points.size() <= kMaxListedPoints) {
        json points = json::array();
        for (std::size_t i = 0; i < set.points.size(); ++i) {
            json pt;
            pt["coords"] = rat_array(set.points[i]);
            pt["multiplicity"] = set.multiplicities[i];
            points.push_back(std::move(pt));
        }
        j["points"] = std::move(points);
    } else {
        j["points_omitted"] = true;
    }
    if (cache.attempted) {
        json c;
        c["path"] = cache.path;
        c["hit"] = cache.hit;
        c["stored"] = cache.stored;
        if (!cache.warning.empty()) c["warning"] = cache.warning;
        j["cache"] = std::move(c);
    }
    return j;
}

json geometry_to_json(const AffineGeometry& geometry) {
    json j;
    j["affine_dimension"] = geometry.dim();
    j["span_basis"] = rat_matrix(geometry.bases.span_basis);
    j["perp_basis"] = rat_matrix(geometry.bases.perp_basis);
    j["hull_vertex_count"] = geometry.vertex_indices.size();
    if (geometry.vertex_indices.size() <= kMaxListedPoints)
        j["hull_vertex_indices"] = index_array(geometry.vertex_indices);
    return j;
}

/// Exact mean of the statistic vector under the uniform distribution on all
/// graphs; the probe target when the configuration does not name one.
RatVec uniform_mean(const RealizableSet& set) {
    RatVec mean(set.dimension(), Rat(0));
    for (std::size_t i = 0; i < set.points.size(); ++i) {
        const Rat mult = make_rational(static_cast<long long>(set.multiplicities[i]));
        for (std::size_t d = 0; d < mean.size(); ++d) mean[d] += mult * set.points[i][d];
    }
    const Rat total = make_rational(static_cast<long long>(set.total_graphs));
    for (Rat& m : mean) m /= total;
    return mean;
}

json probe_to_json(const RunConfig& config, const RealizableSet& set,
                   const AffineBases& bases) {
    const RatVec target = config.target ? *config.target : uniform_mean(set);
    const std::size_t n = set.dimension();

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> theta_dist(-2.0, 2.0);
    std::uniform_int_distribution<int> coeff_dist(-3, 3);
    std::uniform_real_distribution<double> tau_dist(0.0, 1.0);

    const auto random_theta = [&] {
        Eigen::VectorXd theta(static_cast<Eigen::Index>(n));
        for (Eigen::Index i = 0; i < theta.size(); ++i) theta[i] = theta_dist(rng);
        return theta;
    };

    json j;
    j["target"] = rat_array(target);
    j["trials"] = config.probe_trials;

    // Flat directions: integer combinations of the exact perp basis keep the
    // orthogonality exact even in double precision.
    json perp;
    const bool perp_applicable = !bases.perp_basis.empty();
    perp["applicable"] = perp_applicable;
    if (perp_applicable) {
        int checks = 0;
        bool all_hold = true;
        double max_abs_error = 0;
        for (int trial = 0; trial < config.probe_trials; ++trial) {
            const Eigen::VectorXd theta = random_theta();
            Eigen::VectorXd direction = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
            bool nonzero = false;
            while (!nonzero) {
                direction.setZero();
                for (const RatVec& row : bases.perp_basis) {
                    const int c = coeff_dist(rng);
                    if (c == 0) continue;
                    nonzero = true;
                    for (std::size_t d = 0; d < n; ++d)
                        direction[static_cast<Eigen::Index>(d)] += c * to_double(row[d]);
                }
            }
            for (const double scale : {1.0, -1.0, 10.0, -10.0}) {
                const InvarianceReport report =
                    perp_invariance_check(theta, target, set, scale * direction);
                ++checks;
                all_hold = all_hold && report.holds;
                max_abs_error =
                    std::max(max_abs_error, std::fabs(report.measured - report.predicted));
            }
        }
        perp["checks"] = checks;
        perp["all_hold"] = all_hold;
        perp["max_abs_error"] = format_double(max_abs_error);
    }
    j["perp_invariance"] = std::move(perp);

    json concavity;
    int strict_checked = 0;
    bool midpoint_all_hold = true;
    bool strict_all_hold = true;
    for (int trial = 0; trial < config.probe_trials; ++trial) {
        const Eigen::VectorXd theta1 = random_theta();
        const Eigen::VectorXd theta2 = random_theta();
        const double tau = tau_dist(rng);
        const ConcavityReport report = concavity_probe(theta1, theta2, tau, target, set);
        midpoint_all_hold = midpoint_all_hold && report.midpoint_holds;
        if (report.strict_applicable) {
            ++strict_checked;
            strict_all_hold = strict_all_hold && report.strict_holds;
        }
    }
    concavity["trials"] = config.probe_trials;
    concavity["midpoint_all_hold"] = midpoint_all_hold;
    concavity["strict_checked"] = strict_checked;
    concavity["strict_all_hold"] = strict_all_hold;
    j["concavity"] = std::move(concavity);
    return j;
}

}  // namespace

nlohmann::json certificate_to_json(const RintCertificate& cert) {
    json j;
    j["verdict"] = std::string(rint_verdict_name(cert.verdict));
    if (!cert.weights.empty()) j["weights"] = rat_array(cert.weights);
    if (cert.min_weight) j["min_weight"] = to_fraction_string(*cert.min_weight);
    if (!cert.separator.empty()) j["separator"] = rat_array(cert.separator);
    if (cert.margin) j["margin"] = to_fraction_string(*cert.margin);
    if (!cert.affine_residual.empty()) j["affine_residual"] = rat_array(cert.affine_residual);
    if (cert.witness_point_index) j["witness_point_index"] = *cert.witness_point_index;
    return j;
}

nlohmann::json fit_result_to_json(const FitResult& fit) {
    json j;
    j["performed"] = true;
    j["theta_hat"] = double_array(fit.theta_hat);
    j["iterations"] = fit.iterations;
    j["final_grad_norm"] = format_double(fit.final_grad_norm);
    j["log_likelihood"] = format_double(fit.log_likelihood_at_opt);
    json path = json::array();
    for (const auto& [theta, value] : fit.path) path.push_back(format_double(value));
    j["path_log_likelihoods"] = std::move(path);
    return j;
}

nlohmann::json degeneracy_to_json(const DegeneracyReport& report) {
    json j;
    j["direction"] = rat_array(report.direction);
    j["margin"] = to_fraction_string(report.margin);
    j["case"] = report.which_case;
    j["face_indices"] = index_array(report.face_indices);
    j["face_gap"] = to_fraction_string(report.face_gap);
    json rows = json::array();
    for (const TrajectoryRow& row : report.rows) {
        json r;
        r["r"] = format_double(row.r);
        r["log_likelihood"] = format_double(row.log_likelihood);
        r["mass_on_face"] = format_double(row.mass_on_face);
        r["lower_bound"] = format_double(row.lower_bound);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

nlohmann::json run_pipeline(const RunConfig& config) {
    validate_config(config);

    json report;
    report["schema_version"] = 1;
    report["config"] = config_to_json(config);

    json timings;
    StageTimer timer(timings);

    timer.stage("enumerate_ms");
    const auto specs = specs_from_names(config.statistics);
    CacheOutcome cache_outcome;
    const RealizableSet set = realizable_set_cached(config.k, specs, config.cache_path,
                                                    &cache_outcome);
    report["realizable"] = realizable_to_json(set, cache_outcome);

    timer.stage("geometry_ms");
    const AffineGeometry geometry = affine_geometry(set);
    report["geometry"] = geometry_to_json(geometry);

    const auto membership = [&](const RatVec& t) {
        return rint_membership(t, set, geometry.bases);
    };

    const auto degeneracy_section = [&](const RatVec& t) {
        const DegeneracyReport traj = degeneracy_trajectory(t, set, config.r_schedule);
        json section = degeneracy_to_json(traj);
        const BoundaryWitness witness = boundary_witness(traj.face_indices, set);
        json w;
        w["applicable"] = witness.applicable;
        w["all_on_boundary"] = witness.all_on_boundary;
        json verdicts = json::array();
        for (const RintVerdict v : witness.verdicts)
            verdicts.push_back(std::string(rint_verdict_name(v)));
        w["verdicts"] = std::move(verdicts);
        section["boundary_witness"] = std::move(w);
        return section;
    };

    switch (config.mode) {
        case RunMode::Hull:
            break;

        case RunMode::Check: {
            timer.stage("membership_ms");
            report["membership"] = certificate_to_json(membership(*config.target));
            break;
        }

        case RunMode::Fit: {
            timer.stage("membership_ms");
            const RintCertificate cert = membership(*config.target);
            report["membership"] = certificate_to_json(cert);
            if (cert.verdict != RintVerdict::RelativeInterior) throw NoMleError(cert);
            timer.stage("fit_ms");
            const FitResult fit = fit_mle(*config.target, set, config.fit);
            json section = fit_result_to_json(fit);
            section["mean_at_theta_hat"] = double_array(mean_statistic(fit.theta_hat, set));
            report["fit"] = std::move(section);
            break;
        }

        case RunMode::Degeneracy: {
            timer.stage("membership_ms");
            const RintCertificate cert = membership(*config.target);
            report["membership"] = certificate_to_json(cert);
            timer.stage("degeneracy_ms");
            report["degeneracy"] = degeneracy_section(*config.target);
            break;
        }

        case RunMode::Probe: {
            timer.stage("probe_ms");
            report["probe"] = probe_to_json(config, set, geometry.bases);
            break;
        }

        case RunMode::All: {
            timer.stage("membership_ms");
            const RintCertificate cert = membership(*config.target);
            report["membership"] = certificate_to_json(cert);
            if (cert.verdict == RintVerdict::RelativeInterior) {
                timer.stage("fit_ms");
                const FitResult fit = fit_mle(*config.target, set, config.fit);
                json section = fit_result_to_json(fit);
                section["mean_at_theta_hat"] = double_array(mean_statistic(fit.theta_hat, set));
                report["fit"] = std::move(section);
            } else if (cert.verdict == RintVerdict::RelativeBoundary) {
                json section;
                section["performed"] = false;
                section["reason"] =
                    "no MLE: the target sits on the relative boundary; the zero-weight "
                    "pattern of the membership certificate names its face";
                report["fit"] = std::move(section);
            } else {
                json section;
                section["performed"] = false;
                section["reason"] = "no MLE: the target lies outside the hull; see degeneracy";
                report["fit"] = std::move(section);
                timer.stage("degeneracy_ms");
                report["degeneracy"] = degeneracy_section(*config.target);
            }
            break;
        }
    }

    timer.finish();
    report["timings"] = std::move(timings);
    return report;
}

}  // namespace ergm
