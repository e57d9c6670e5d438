#include "ergm/geometry.hpp"

#include "ergm/errors.hpp"
#include "ergm/linalg.hpp"
#include "ergm/lp.hpp"

#include <algorithm>
#include <string>

namespace ergm {

namespace {

void check_set(const RealizableSet& set) {
    if (set.points.empty()) throw InvalidInput("geometry: realizable set is empty");
    const std::size_t n = set.dimension();
    if (n == 0 || n > kMaxGeometryDim)
        throw CapacityExceeded("geometry: statistic dimension " + std::to_string(n) +
                               " outside 1.." + std::to_string(kMaxGeometryDim));
    for (const RatVec& p : set.points)
        if (p.size() != n) throw InvalidInput("geometry: point dimension mismatch");
}

void check_target(const RatVec& t, const RealizableSet& set) {
    if (t.size() != set.dimension())
        throw InvalidInput("geometry: target has length " + std::to_string(t.size()) +
                           ", statistics have length " + std::to_string(set.dimension()));
}

Rat max_separator_value(const RatVec& separator, const RealizableSet& set) {
    Rat best = dot(separator, set.points[0]);
    for (std::size_t i = 1; i < set.points.size(); ++i)
        best = std::max(best, dot(separator, set.points[i]));
    return best;
}

/// Component of d orthogonal to the span rows, i.e. its projection onto
/// the space spanned by the (independent) perp rows.
RatVec perp_projection(const RatVec& d, const RatMat& perp) {
    const std::size_t b = perp.size();
    RatMat gram(b, RatVec(b));
    RatVec rhs(b);
    for (std::size_t a = 0; a < b; ++a) {
        rhs[a] = dot(perp[a], d);
        for (std::size_t c = 0; c < b; ++c) gram[a][c] = dot(perp[a], perp[c]);
    }
    auto coeffs = solve_square(std::move(gram), std::move(rhs));
    if (!coeffs) throw InternalError("geometry: perpendicular basis is degenerate");
    RatVec out(d.size(), Rat(0));
    for (std::size_t a = 0; a < b; ++a)
        for (std::size_t j = 0; j < d.size(); ++j) out[j] += (*coeffs)[a] * perp[a][j];
    return out;
}

}  // namespace

AffineBases affine_bases(const RealizableSet& set) {
    check_set(set);
    const std::size_t n = set.dimension();

    RatMat diffs;
    diffs.reserve(set.points.size() - 1);
    for (std::size_t i = 1; i < set.points.size(); ++i)
        diffs.push_back(subtract(set.points[i], set.points[0]));

    AffineBases bases;
    RatMat reduced = diffs;
    std::size_t rank = rref_in_place(reduced).size();
    bases.dim = static_cast<int>(rank);
    for (std::size_t i = 0; i < rank; ++i)
        bases.span_basis.push_back(integer_canonical(reduced[i]));
    for (RatVec& v : nullspace_basis(std::move(diffs), n))
        bases.perp_basis.push_back(integer_canonical(v));

    if (bases.span_basis.size() + bases.perp_basis.size() != n)
        throw InternalError("geometry: basis dimensions do not add up");
    for (const RatVec& u : bases.perp_basis)
        for (const RatVec& v : bases.span_basis)
            if (dot(u, v) != 0) throw InternalError("geometry: bases are not orthogonal");
    return bases;
}

std::vector<std::size_t> hull_vertices(const RealizableSet& set) {
    check_set(set);
    const std::size_t m = set.points.size();
    const std::size_t n = set.dimension();

    std::vector<char> is_vertex(m, 0);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t raw = 0; raw < static_cast<std::int64_t>(m); ++raw) {
        try {
            auto i = static_cast<std::size_t>(raw);
            LinearProgram lp;
            lp.A.assign(n + 1, RatVec(m - 1));
            lp.b.assign(n + 1, Rat(0));
            std::size_t col = 0;
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i) continue;
                for (std::size_t d = 0; d < n; ++d) lp.A[d][col] = set.points[j][d];
                lp.A[n][col] = 1;
                ++col;
            }
            for (std::size_t d = 0; d < n; ++d) lp.b[d] = set.points[i][d];
            lp.b[n] = 1;
            lp.c.assign(m - 1, Rat(0));
            is_vertex[i] = (lp_solve(lp).status == LpStatus::Infeasible);
        } catch (...) {
#pragma omp critical(ergm_hull_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<std::size_t> vertices;
    for (std::size_t i = 0; i < m; ++i)
        if (is_vertex[i]) vertices.push_back(i);
    return vertices;
}

AffineGeometry affine_geometry(const RealizableSet& set) {
    AffineGeometry geo;
    geo.bases = affine_bases(set);
    geo.vertex_indices = hull_vertices(set);
    return geo;
}

std::string_view rint_verdict_name(RintVerdict verdict) {
    switch (verdict) {
        case RintVerdict::RelativeInterior: return "RELATIVE_INTERIOR";
        case RintVerdict::RelativeBoundary: return "RELATIVE_BOUNDARY";
        case RintVerdict::OutsideHull: return "OUTSIDE_HULL";
        case RintVerdict::OutsideAffineHull: return "OUTSIDE_AFFINE_HULL";
    }
    return "UNKNOWN";
}

void check_certificate(const RintCertificate& cert, const RatVec& t, const RealizableSet& set) {
    check_set(set);
    check_target(t, set);
    const std::size_t m = set.points.size();
    const std::size_t n = set.dimension();

    switch (cert.verdict) {
        case RintVerdict::RelativeInterior:
        case RintVerdict::RelativeBoundary: {
            if (cert.weights.size() != m)
                throw InternalError("certificate: weight count mismatch");
            if (!cert.min_weight)
                throw InternalError("certificate: missing minimum weight");
            Rat total = 0;
            Rat smallest = cert.weights.empty() ? Rat(0) : cert.weights[0];
            RatVec combo(n, Rat(0));
            for (std::size_t i = 0; i < m; ++i) {
                const Rat& w = cert.weights[i];
                if (w < 0) throw InternalError("certificate: negative convex weight");
                total += w;
                smallest = std::min(smallest, w);
                for (std::size_t d = 0; d < n; ++d) combo[d] += w * set.points[i][d];
            }
            if (total != 1) throw InternalError("certificate: weights do not sum to 1");
            if (combo != t) throw InternalError("certificate: weights do not reproduce t");
            if (smallest != *cert.min_weight)
                throw InternalError("certificate: minimum weight mismatch");
            bool interior = cert.verdict == RintVerdict::RelativeInterior;
            if (interior && *cert.min_weight <= 0)
                throw InternalError("certificate: interior verdict needs positive weights");
            if (!interior && *cert.min_weight != 0)
                throw InternalError("certificate: boundary verdict needs a zero weight");
            if (cert.witness_point_index) {
                if (*cert.witness_point_index >= m ||
                    set.points[*cert.witness_point_index] != t)
                    throw InternalError("certificate: witness index does not match t");
            }
            break;
        }
        case RintVerdict::OutsideHull:
        case RintVerdict::OutsideAffineHull: {
            if (cert.separator.size() != n || is_zero(cert.separator))
                throw InternalError("certificate: separator missing or zero");
            for (const Rat& v : cert.separator)
                if (denominator(v) != 1)
                    throw InternalError("certificate: separator is not integral");
            if (!cert.margin) throw InternalError("certificate: missing margin");
            Rat gap = dot(cert.separator, t) - max_separator_value(cert.separator, set);
            if (gap != *cert.margin) throw InternalError("certificate: margin mismatch");
            if (gap <= 0) throw InternalError("certificate: separator fails to separate");
            if (cert.verdict == RintVerdict::OutsideAffineHull) {
                if (is_zero(cert.affine_residual))
                    throw InternalError("certificate: missing affine residual");
                if (integer_primitive(cert.affine_residual) != cert.separator)
                    throw InternalError("certificate: separator is not the residual direction");
            }
            break;
        }
    }
}

RintCertificate rint_membership(const RatVec& t, const RealizableSet& set) {
    return rint_membership(t, set, affine_bases(set));
}

RintCertificate rint_membership(const RatVec& t, const RealizableSet& set,
                                const AffineBases& bases) {
    check_set(set);
    check_target(t, set);
    const std::size_t m = set.points.size();
    const std::size_t n = set.dimension();

    RintCertificate cert;
    RatVec d = subtract(t, set.points[0]);

    // Stage 1: t must lie in the affine hull at all, which is an exact
    // residual question, not an LP.
    bool off_hull = false;
    for (const RatVec& u : bases.perp_basis)
        if (dot(u, d) != 0) {
            off_hull = true;
            break;
        }
    if (off_hull) {
        cert.verdict = RintVerdict::OutsideAffineHull;
        cert.affine_residual = perp_projection(d, bases.perp_basis);
        cert.separator = integer_primitive(cert.affine_residual);
        if (is_zero(cert.separator))
            throw InternalError("geometry: zero residual for a point off the affine hull");
        cert.margin = dot(cert.separator, t) - max_separator_value(cert.separator, set);
        check_certificate(cert, t, set);
        return cert;
    }

    // Stage 2: maximize the smallest convex weight. Variables are the m
    // weight slacks s_i = lambda_i - eps plus eps itself (last column).
    LinearProgram lp;
    lp.A.assign(n + 1, RatVec(m + 1, Rat(0)));
    lp.b.assign(n + 1, Rat(0));
    for (std::size_t d_row = 0; d_row < n; ++d_row) {
        for (std::size_t i = 0; i < m; ++i) {
            lp.A[d_row][i] = set.points[i][d_row];
            lp.A[d_row][m] += set.points[i][d_row];
        }
        lp.b[d_row] = t[d_row];
    }
    for (std::size_t i = 0; i < m; ++i) lp.A[n][i] = 1;
    lp.A[n][m] = Rat(static_cast<long>(m));
    lp.b[n] = 1;
    lp.c.assign(m + 1, Rat(0));
    lp.c[m] = 1;

    LpResult res = lp_solve(lp);
    if (res.status == LpStatus::Unbounded)
        throw InternalError("geometry: membership program cannot be unbounded");

    if (res.status == LpStatus::Infeasible) {
        // The statistic rows of the Farkas vector separate t from every
        // realizable point; the convexity row shifts but cannot tilt.
        cert.verdict = RintVerdict::OutsideHull;
        RatVec direction(res.farkas.begin(), res.farkas.begin() + static_cast<long>(n));
        cert.separator = integer_primitive(direction);
        if (is_zero(cert.separator))
            throw InternalError("geometry: farkas vector has no statistic component");
        cert.margin = dot(cert.separator, t) - max_separator_value(cert.separator, set);
        check_certificate(cert, t, set);
        return cert;
    }

    Rat eps = res.objective;
    cert.weights.resize(m);
    for (std::size_t i = 0; i < m; ++i) cert.weights[i] = res.x[i] + eps;
    cert.min_weight = eps;
    cert.verdict = eps > 0 ? RintVerdict::RelativeInterior : RintVerdict::RelativeBoundary;
    for (std::size_t i = 0; i < m; ++i)
        if (set.points[i] == t) {
            cert.witness_point_index = i;
            break;
        }
    check_certificate(cert, t, set);
    return cert;
}

}  // namespace ergm
