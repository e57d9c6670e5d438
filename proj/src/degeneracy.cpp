#include "ergm/degeneracy.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ergm/errors.hpp"

namespace ergm {

namespace {

// Exact scores direction . p_i for every realizable point.
std::vector<Rat> point_scores(const RatVec& direction, const RealizableSet& set) {
    std::vector<Rat> scores;
    scores.reserve(set.points.size());
    for (const auto& pt : set.points) scores.push_back(dot(direction, pt));
    return scores;
}

std::vector<std::size_t> face_of_scores(const std::vector<Rat>& scores, const Rat& top) {
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < scores.size(); ++i)
        if (scores[i] == top) face.push_back(i);
    return face;
}

}  // namespace

SeparatingDirection separating_direction(const RatVec& t, const RealizableSet& set) {
    const RintCertificate cert = rint_membership(t, set);
    if (cert.verdict == RintVerdict::RelativeInterior ||
        cert.verdict == RintVerdict::RelativeBoundary) {
        throw NotSeparable("target is in the hull (" +
                           std::string(rint_verdict_name(cert.verdict)) +
                           "); no separating direction exists");
    }
    SeparatingDirection out;
    out.direction = cert.separator;
    out.margin = *cert.margin;
    if (!(out.margin > 0)) throw InternalError("separating margin is not positive");
    return out;
}

std::vector<std::size_t> argmax_face(const RatVec& direction, const RealizableSet& set) {
    if (direction.size() != set.specs.size())
        throw InvalidInput("direction dimension does not match the statistic count");
    if (set.points.empty()) throw InvalidInput("empty realizable set");
    const std::vector<Rat> scores = point_scores(direction, set);
    const Rat top = *std::max_element(scores.begin(), scores.end());
    return face_of_scores(scores, top);
}

DegeneracyReport degeneracy_trajectory(const RatVec& t, const RealizableSet& set,
                                       const std::vector<double>& r_schedule) {
    for (std::size_t i = 0; i < r_schedule.size(); ++i) {
        if (!std::isfinite(r_schedule[i]) || r_schedule[i] <= 0)
            throw InvalidInput("r schedule entries must be positive and finite");
        if (i > 0 && r_schedule[i] <= r_schedule[i - 1])
            throw InvalidInput("r schedule must be strictly increasing");
    }

    const SeparatingDirection sep = separating_direction(t, set);

    DegeneracyReport report;
    report.direction = sep.direction;
    report.margin = sep.margin;

    const Rat theta_dot_t = dot(sep.direction, t);
    report.which_case = theta_dot_t > 0 ? 1 : 2;

    const std::vector<Rat> scores = point_scores(sep.direction, set);
    const Rat top = *std::max_element(scores.begin(), scores.end());
    report.face_indices = face_of_scores(scores, top);

    report.face_gap = Rat(0);
    bool have_runner_up = false;
    Rat runner_up;
    for (const Rat& s : scores) {
        if (s == top) continue;
        if (!have_runner_up || s > runner_up) {
            runner_up = s;
            have_runner_up = true;
        }
    }
    if (have_runner_up) report.face_gap = top - runner_up;

    // Exact score deltas s_i - s_max: exactly zero on the face, strictly
    // negative elsewhere, so the float exponentials never cancel.
    const std::size_t m = set.points.size();
    std::vector<double> delta(m);
    for (std::size_t i = 0; i < m; ++i) delta[i] = to_double(scores[i] - top);
    const double top_d = to_double(top);
    const double theta_dot_t_d = to_double(theta_dot_t);
    const double margin_d = to_double(sep.margin);
    const double log_total = std::log(static_cast<double>(set.total_graphs));

    const auto evaluate_row = [&](double r) {
        TrajectoryRow row;
        row.r = r;
        double denom = 0;    // sum_i m_i exp(r * delta_i)
        double on_face = 0;  // face share of the same sum (exponent exactly 0)
        for (std::size_t i = 0; i < m; ++i) {
            const double w = static_cast<double>(set.multiplicities[i]) *
                             std::exp(r * delta[i]);
            denom += w;
            if (scores[i] == top) on_face += w;
        }
        const double log_normalizer = r * top_d + std::log(denom);
        row.log_likelihood = r * theta_dot_t_d - log_normalizer;
        row.mass_on_face = on_face / denom;
        row.lower_bound = r * margin_d - log_total;
        const double slack = 1e-9 * std::max(1.0, std::fabs(row.lower_bound));
        if (row.log_likelihood < row.lower_bound - slack) {
            throw ViolatedBound("trajectory row at r=" + std::to_string(r) +
                                " fell below the guaranteed lower bound");
        }
        return row;
    };

    if (!r_schedule.empty()) {
        for (double r : r_schedule) report.rows.push_back(evaluate_row(r));
    } else {
        for (double r = 1; r <= 1048576.0; r *= 2) {
            report.rows.push_back(evaluate_row(r));
            if (report.rows.back().mass_on_face > 1 - 1e-12) break;
        }
    }

    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const double mass = report.rows[i].mass_on_face;
        if (!(mass > 0) || mass > 1 + 1e-12)
            throw InternalError("face mass escaped (0, 1]");
        if (i > 0 && mass < report.rows[i - 1].mass_on_face - 1e-12)
            throw InternalError("face mass decreased along the trajectory");
    }
    return report;
}

BoundaryWitness boundary_witness(const std::vector<std::size_t>& face,
                                 const RealizableSet& set) {
    if (face.empty()) throw InvalidInput("empty face");
    for (std::size_t idx : face)
        if (idx >= set.points.size()) throw InvalidInput("face index out of range");

    BoundaryWitness witness;
    witness.applicable = face.size() < set.points.size();
    witness.verdicts.reserve(face.size());
    bool all_boundary = true;
    for (std::size_t idx : face) {
        const RintCertificate cert = rint_membership(set.points[idx], set);
        witness.verdicts.push_back(cert.verdict);
        all_boundary = all_boundary && cert.verdict == RintVerdict::RelativeBoundary;
    }
    witness.all_on_boundary = all_boundary;
    return witness;
}

}  // namespace ergm
