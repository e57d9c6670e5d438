#include "ergm/likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ergm {

namespace {

struct DensePoints {
    Eigen::MatrixXd points;  // one row per distinct point
    Eigen::VectorXd mult;

    explicit DensePoints(const RealizableSet& set) {
        const auto m = static_cast<Eigen::Index>(set.points.size());
        const auto n = static_cast<Eigen::Index>(set.dimension());
        points.resize(m, n);
        mult.resize(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            mult(i) = static_cast<double>(set.multiplicities[static_cast<std::size_t>(i)]);
            for (Eigen::Index d = 0; d < n; ++d)
                points(i, d) =
                    to_double(set.points[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)]);
        }
    }
};

void check_theta(const Eigen::VectorXd& theta, const RealizableSet& set) {
    if (static_cast<std::size_t>(theta.size()) != set.dimension())
        throw InvalidInput("likelihood: theta has length " + std::to_string(theta.size()) +
                           ", statistics have length " + std::to_string(set.dimension()));
    for (Eigen::Index i = 0; i < theta.size(); ++i)
        if (!std::isfinite(theta(i))) throw InvalidInput("likelihood: theta is not finite");
}

/// Shifted exponential weights: scores a_i = theta . p_i, shift M = max a_i,
/// weights w_i = m_i exp(a_i - M) (unnormalized), Z = sum w_i.
struct Softmax {
    Eigen::VectorXd scores;
    double shift;
    Eigen::VectorXd weights;
    double z;

    Softmax(const Eigen::VectorXd& theta, const DensePoints& dense) {
        scores = dense.points * theta;
        shift = scores.maxCoeff();
        weights = dense.mult.array() * (scores.array() - shift).exp();
        z = weights.sum();
    }

    double log_normalizer() const { return shift + std::log(z); }
};

double log_normalizer_dense(const Eigen::VectorXd& theta, const DensePoints& dense) {
    return Softmax(theta, dense).log_normalizer();
}

Eigen::VectorXd mean_dense(const Eigen::VectorXd& theta, const DensePoints& dense) {
    Softmax soft(theta, dense);
    return dense.points.transpose() * (soft.weights / soft.z);
}

Eigen::MatrixXd hessian_dense(const Eigen::VectorXd& theta, const DensePoints& dense) {
    Softmax soft(theta, dense);
    Eigen::VectorXd probs = soft.weights / soft.z;
    Eigen::VectorXd mu = dense.points.transpose() * probs;
    Eigen::MatrixXd centered = dense.points.rowwise() - mu.transpose();
    return -(centered.transpose() * probs.asDiagonal() * centered);
}

double dot_double(const Eigen::VectorXd& a, const RatVec& b) {
    double s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        s += a(i) * to_double(b[static_cast<std::size_t>(i)]);
    return s;
}

}  // namespace

double log_normalizer(const Eigen::VectorXd& theta, const RealizableSet& set) {
    check_theta(theta, set);
    return log_normalizer_dense(theta, DensePoints(set));
}

double log_likelihood(const Eigen::VectorXd& theta, const RatVec& t, const RealizableSet& set) {
    check_theta(theta, set);
    if (t.size() != set.dimension()) throw InvalidInput("likelihood: target length mismatch");
    return dot_double(theta, t) - log_normalizer_dense(theta, DensePoints(set));
}

Eigen::VectorXd mean_statistic(const Eigen::VectorXd& theta, const RealizableSet& set) {
    check_theta(theta, set);
    return mean_dense(theta, DensePoints(set));
}

Eigen::VectorXd gradient(const Eigen::VectorXd& theta, const RatVec& t,
                         const RealizableSet& set) {
    check_theta(theta, set);
    if (t.size() != set.dimension()) throw InvalidInput("likelihood: target length mismatch");
    Eigen::VectorXd g = -mean_dense(theta, DensePoints(set));
    for (Eigen::Index d = 0; d < g.size(); ++d) g(d) += to_double(t[static_cast<std::size_t>(d)]);
    return g;
}

Eigen::MatrixXd hessian(const Eigen::VectorXd& theta, const RealizableSet& set) {
    check_theta(theta, set);
    return hessian_dense(theta, DensePoints(set));
}

FitResult fit_mle(const RatVec& t, const RealizableSet& set, const FitConfig& cfg) {
    if (t.size() != set.dimension()) throw InvalidInput("fit_mle: target length mismatch");
    if (cfg.max_iters < 1) throw InvalidInput("fit_mle: max_iters must be positive");
    if (cfg.grad_tol <= 0) throw InvalidInput("fit_mle: grad_tol must be positive");
    if (cfg.armijo_c <= 0 || cfg.armijo_c >= 1)
        throw InvalidInput("fit_mle: armijo_c must be in (0, 1)");
    if (cfg.backtrack <= 0 || cfg.backtrack >= 1)
        throw InvalidInput("fit_mle: backtrack must be in (0, 1)");

    AffineBases bases = affine_bases(set);
    RintCertificate cert = rint_membership(t, set, bases);
    if (cert.verdict != RintVerdict::RelativeInterior) throw NoMleError(std::move(cert));

    const auto n = static_cast<Eigen::Index>(set.dimension());
    const auto dim = static_cast<Eigen::Index>(bases.dim);
    DensePoints dense(set);

    Eigen::VectorXd t_d(n);
    for (Eigen::Index d = 0; d < n; ++d) t_d(d) = to_double(t[static_cast<std::size_t>(d)]);

    FitResult result;
    result.certificate = std::move(cert);

    if (dim == 0) {
        // All graphs share one statistic vector; the likelihood is constant
        // and the origin is the canonical maximizer.
        result.theta_hat = Eigen::VectorXd::Zero(n);
        result.log_likelihood_at_opt =
            dot_double(result.theta_hat, t) - log_normalizer_dense(result.theta_hat, dense);
        result.path.emplace_back(result.theta_hat, result.log_likelihood_at_opt);
        return result;
    }

    // Orthonormal columns spanning the difference space; Newton runs in
    // these coordinates so flat directions never enter.
    Eigen::MatrixXd span(n, dim);
    for (Eigen::Index c = 0; c < dim; ++c)
        for (Eigen::Index r = 0; r < n; ++r)
            span(r, c) =
                to_double(bases.span_basis[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(span);
    Eigen::MatrixXd q_basis = qr.householderQ() * Eigen::MatrixXd::Identity(n, dim);

    Eigen::VectorXd init = cfg.init;
    if (init.size() == 0) init = Eigen::VectorXd::Zero(n);
    if (init.size() != n) throw InvalidInput("fit_mle: init length mismatch");
    Eigen::VectorXd phi = q_basis.transpose() * init;

    auto value_at = [&](const Eigen::VectorXd& phi_pt) {
        Eigen::VectorXd theta = q_basis * phi_pt;
        return dot_double(theta, t) - log_normalizer_dense(theta, dense);
    };

    double value = value_at(phi);
    for (int iter = 0; iter <= cfg.max_iters; ++iter) {
        Eigen::VectorXd theta = q_basis * phi;
        result.theta_hat = theta;
        result.log_likelihood_at_opt = value;
        result.iterations = iter;
        result.path.emplace_back(theta, value);

        Eigen::VectorXd grad_full = t_d - mean_dense(theta, dense);
        Eigen::VectorXd grad = q_basis.transpose() * grad_full;
        result.final_grad_norm = grad.lpNorm<Eigen::Infinity>();
        if (result.final_grad_norm <= cfg.grad_tol) return result;
        if (iter == cfg.max_iters) break;

        // Newton direction from the negated restricted Hessian, which is
        // positive definite; fall back to the gradient if factorization
        // degenerates in floating point.
        Eigen::MatrixXd neg_hess =
            -(q_basis.transpose() * hessian_dense(theta, dense) * q_basis);
        Eigen::VectorXd step;
        Eigen::LLT<Eigen::MatrixXd> llt(neg_hess);
        if (llt.info() == Eigen::Success) {
            step = llt.solve(grad);
        } else {
            Eigen::LDLT<Eigen::MatrixXd> ldlt(neg_hess);
            step = ldlt.info() == Eigen::Success ? ldlt.solve(grad).eval() : grad;
        }
        if (!step.allFinite() || grad.dot(step) <= 0) step = grad;

        double slope = grad.dot(step);
        double alpha = 1.0;
        bool moved = false;
        while (alpha >= 1e-16) {
            Eigen::VectorXd candidate = phi + alpha * step;
            double candidate_value = value_at(candidate);
            if (candidate_value >= value + cfg.armijo_c * alpha * slope) {
                phi = candidate;
                value = candidate_value;
                moved = true;
                break;
            }
            alpha *= cfg.backtrack;
        }
        if (!moved)
            throw NonConvergenceError(std::move(result),
                                      "fit_mle: line search stalled before reaching grad_tol");
    }
    throw NonConvergenceError(std::move(result),
                              "fit_mle: exceeded max_iters before reaching grad_tol");
}

InvarianceReport perp_invariance_check(const Eigen::VectorXd& theta, const RatVec& t,
                                       const RealizableSet& set,
                                       const Eigen::VectorXd& direction) {
    check_theta(theta, set);
    if (t.size() != set.dimension() ||
        static_cast<std::size_t>(direction.size()) != set.dimension())
        throw InvalidInput("invariance: dimension mismatch");

    AffineBases bases = affine_bases(set);
    for (const RatVec& v : bases.span_basis) {
        double d = 0;
        for (Eigen::Index i = 0; i < direction.size(); ++i)
            d += direction(i) * to_double(v[static_cast<std::size_t>(i)]);
        if (std::abs(d) > 1e-12)
            throw InvalidInput("invariance: direction is not orthogonal to the point span");
    }

    InvarianceReport report;
    RatVec diff = subtract(t, set.points[0]);
    report.t_in_affine_hull = true;
    for (const RatVec& u : bases.perp_basis)
        if (dot(u, diff) != 0) {
            report.t_in_affine_hull = false;
            break;
        }

    report.base = log_likelihood(theta, t, set);
    report.shifted = log_likelihood(theta + direction, t, set);
    report.measured = report.shifted - report.base;
    double predicted = 0;
    for (Eigen::Index i = 0; i < direction.size(); ++i)
        predicted += direction(i) * to_double(diff[static_cast<std::size_t>(i)]);
    report.predicted = predicted;

    if (report.t_in_affine_hull)
        report.holds = std::abs(report.measured) <= 1e-12;
    else
        report.holds =
            std::abs(report.measured - report.predicted) <= 1e-9 * std::max(1.0, std::abs(predicted));
    return report;
}

ConcavityReport concavity_probe(const Eigen::VectorXd& theta1, const Eigen::VectorXd& theta2,
                                double tau, const RatVec& t, const RealizableSet& set) {
    check_theta(theta1, set);
    check_theta(theta2, set);
    if (!(tau > 0 && tau < 1)) throw InvalidInput("concavity: tau must be in (0, 1)");
    if ((theta1.array() == theta2.array()).all())
        throw InvalidInput("concavity: parameter points coincide");

    ConcavityReport report;
    Eigen::VectorXd combo = tau * theta1 + (1 - tau) * theta2;
    report.lhs = log_likelihood(combo, t, set);
    report.rhs = tau * log_likelihood(theta1, t, set) + (1 - tau) * log_likelihood(theta2, t, set);
    report.midpoint_holds = report.lhs >= report.rhs - 1e-12;

    // Exact strictness prediction: doubles are rationals, so the spread of
    // (theta1 - theta2) . p over the points is an exact yes/no question.
    RatVec diff(set.dimension());
    for (std::size_t i = 0; i < set.dimension(); ++i)
        diff[i] = rational_from_double(theta1(static_cast<Eigen::Index>(i)) -
                                       theta2(static_cast<Eigen::Index>(i)));
    Rat lo = dot(diff, set.points[0]);
    Rat hi = lo;
    for (const RatVec& p : set.points) {
        Rat v = dot(diff, p);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    report.strict_predicted = hi != lo;
    report.strict_applicable =
        report.strict_predicted && (theta1 - theta2).norm() >= 0.1;
    report.strict_holds = !report.strict_applicable || report.lhs > report.rhs + 1e-9;
    return report;
}

}  // namespace ergm
