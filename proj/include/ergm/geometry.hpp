#pragma once

#include "ergm/graphspace.hpp"
#include "ergm/rational.hpp"

#include <optional>
#include <vector>

namespace ergm {

/// Statistic dimension cap for the exact geometry; LP tableaus are dense.
inline constexpr std::size_t kMaxGeometryDim = 12;

/// Exact bases attached to the realizable points: span_basis spans the
/// differences p_i - p_0 (the direction space of the affine hull),
/// perp_basis its orthogonal complement. Rows are integer vectors with
/// gcd 1 and positive leading entry, so they are unique for a given set.
struct AffineBases {
    int dim = 0;
    RatMat span_basis;
    RatMat perp_basis;
};

struct AffineGeometry {
    AffineBases bases;
    std::vector<std::size_t> vertex_indices;  // hull vertices, ascending

    int dim() const { return bases.dim; }
};

AffineBases affine_bases(const RealizableSet& set);

/// Indices of points that are vertices of the convex hull: point i is a
/// vertex iff no convex combination of the other points reproduces it,
/// decided by one exact feasibility LP per point. Points are independent,
/// so the loop is OpenMP-parallel.
std::vector<std::size_t> hull_vertices(const RealizableSet& set);

AffineGeometry affine_geometry(const RealizableSet& set);

enum class RintVerdict {
    RelativeInterior,
    RelativeBoundary,
    OutsideHull,
    OutsideAffineHull,
};

std::string_view rint_verdict_name(RintVerdict verdict);

/// Exact, checkable answer to "where does t sit relative to the hull".
///  - RelativeInterior / RelativeBoundary: weights is a convex combination
///    reproducing t whose smallest entry equals min_weight (> 0 interior,
///    = 0 boundary).
///  - OutsideHull / OutsideAffineHull: separator is an integer vector with
///    separator.t > max_i separator.p_i by exactly margin > 0. For
///    OutsideAffineHull the separator is the component of t - p_0
///    orthogonal to the affine hull, kept in affine_residual.
struct RintCertificate {
    RintVerdict verdict = RintVerdict::RelativeInterior;
    RatVec weights;
    std::optional<Rat> min_weight;
    RatVec separator;
    std::optional<Rat> margin;
    RatVec affine_residual;
    std::optional<std::size_t> witness_point_index;  // set when t is itself realizable
};

/// Re-derives every claim in the certificate from (t, set) alone and throws
/// InternalError on any mismatch. rint_membership always runs this before
/// returning, so callers can also use it on deserialized certificates.
void check_certificate(const RintCertificate& cert, const RatVec& t, const RealizableSet& set);

/// Locates t relative to the convex hull of the realizable points: first an
/// exact residual test against the affine hull, then one LP that maximizes
/// the smallest convex weight over all points.
RintCertificate rint_membership(const RatVec& t, const RealizableSet& set);
RintCertificate rint_membership(const RatVec& t, const RealizableSet& set,
                                const AffineBases& bases);

}  // namespace ergm
