#pragma once

#include "ergm/errors.hpp"
#include "ergm/geometry.hpp"
#include "ergm/graphspace.hpp"

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace ergm {

/// log of the normalizing constant: log sum over all graphs of
/// exp(theta . z(g)), evaluated over distinct points with multiplicities
/// and stabilized by shifting with max_i theta . p_i. Finite for any
/// finite theta.
double log_normalizer(const Eigen::VectorXd& theta, const RealizableSet& set);

/// theta . t - log_normalizer(theta).
double log_likelihood(const Eigen::VectorXd& theta, const RatVec& t, const RealizableSet& set);

/// Expectation of the statistic vector under theta (softmax-weighted mean).
Eigen::VectorXd mean_statistic(const Eigen::VectorXd& theta, const RealizableSet& set);

/// Gradient of the log likelihood: t - mean_statistic(theta).
Eigen::VectorXd gradient(const Eigen::VectorXd& theta, const RatVec& t,
                         const RealizableSet& set);

/// Hessian of the log likelihood: minus the covariance of the statistic
/// vector under theta. Always negative semidefinite; definite exactly on
/// the span of the point differences.
Eigen::MatrixXd hessian(const Eigen::VectorXd& theta, const RealizableSet& set);

struct FitConfig {
    Eigen::VectorXd init;     // starting point; empty means the origin
    double grad_tol = 1e-10;  // sup norm of the span-restricted gradient
    int max_iters = 200;
    double armijo_c = 1e-4;    // sufficient-increase fraction
    double backtrack = 0.5;    // step shrink factor
};

struct FitResult {
    Eigen::VectorXd theta_hat;  // lies in the span of point differences
    int iterations = 0;
    double final_grad_norm = 0;
    double log_likelihood_at_opt = 0;
    RintCertificate certificate;  // the RelativeInterior certificate for t
    std::vector<std::pair<Eigen::VectorXd, double>> path;  // iterate, value
};

/// Thrown when t is not in the relative interior of the hull, so no
/// maximizer exists; carries the exact certificate saying why.
class NoMleError : public Error {
public:
    explicit NoMleError(RintCertificate cert)
        : Error("no MLE: target is " + std::string(rint_verdict_name(cert.verdict))),
          cert_(std::move(cert)) {}
    const RintCertificate& certificate() const { return cert_; }

private:
    RintCertificate cert_;
};

/// Thrown when Newton iterations run out before reaching grad_tol; carries
/// the best iterate found.
class NonConvergenceError : public Error {
public:
    explicit NonConvergenceError(FitResult best, const std::string& what)
        : Error(what), best_(std::move(best)) {}
    const FitResult& best() const { return best_; }

private:
    FitResult best_;
};

/// Computes the MLE by damped Newton ascent restricted to the span of the
/// point differences (the likelihood is flat across its orthogonal
/// complement). Requires t in the relative interior, throws NoMleError
/// otherwise; ascent is monotone by Armijo backtracking.
FitResult fit_mle(const RatVec& t, const RealizableSet& set, const FitConfig& cfg = {});

struct InvarianceReport {
    double base = 0;          // log likelihood at theta
    double shifted = 0;       // log likelihood at theta + direction
    double measured = 0;      // shifted - base
    double predicted = 0;     // direction . (t - p_0)
    bool t_in_affine_hull = false;  // decided exactly in rational arithmetic
    bool holds = false;
};

/// Shifting theta by a direction orthogonal to all point differences moves
/// the log likelihood by exactly direction . (t - p_0), which is zero when
/// t lies in the affine hull. direction must be orthogonal to every span
/// basis vector within 1e-12 or InvalidInput is thrown.
InvarianceReport perp_invariance_check(const Eigen::VectorXd& theta, const RatVec& t,
                                       const RealizableSet& set,
                                       const Eigen::VectorXd& direction);

struct ConcavityReport {
    double lhs = 0;  // value at the convex combination of parameters
    double rhs = 0;  // convex combination of the endpoint values
    bool midpoint_holds = false;      // lhs >= rhs - 1e-12
    bool strict_predicted = false;    // theta1 - theta2 spreads the points (exact)
    bool strict_applicable = false;   // predicted and |theta1 - theta2| >= 0.1
    bool strict_holds = false;        // lhs > rhs + 1e-9 whenever applicable
};

/// Tests concavity of the log likelihood along one parameter pair. The
/// strictness prediction converts theta1 - theta2 to exact rationals and
/// asks whether any two points differ along it.
ConcavityReport concavity_probe(const Eigen::VectorXd& theta1, const Eigen::VectorXd& theta2,
                                double tau, const RatVec& t, const RealizableSet& set);

}  // namespace ergm
