#pragma once

#include "ergm/geometry.hpp"
#include "ergm/graphspace.hpp"
#include "ergm/rational.hpp"

#include <vector>

namespace ergm {

struct SeparatingDirection {
    RatVec direction;  // integer entries, gcd 1
    Rat margin;        // direction.t - max_i direction.p_i, strictly positive
};

/// Integer direction along which t beats every realizable point, extracted
/// from the membership certificate. Throws NotSeparable when t lies in the
/// hull (no such direction exists).
SeparatingDirection separating_direction(const RatVec& t, const RealizableSet& set);

/// Indices of the points maximizing direction . p, decided exactly.
std::vector<std::size_t> argmax_face(const RatVec& direction, const RealizableSet& set);

struct TrajectoryRow {
    double r = 0;
    double log_likelihood = 0;  // value at r * direction
    double mass_on_face = 0;    // model probability of the argmax face
    double lower_bound = 0;     // r * margin - log(total graphs)
};

struct DegeneracyReport {
    RatVec direction;
    Rat margin;
    int which_case = 1;  // 1 when direction.t > 0, otherwise 2
    std::vector<std::size_t> face_indices;
    Rat face_gap;  // distance to the runner-up score; 0 when every point is on the face
    std::vector<TrajectoryRow> rows;
};

/// Walks the ray r * direction for a target outside the hull: the log
/// likelihood grows without bound (it always dominates r * margin minus the
/// log graph count, checked per row, ViolatedBound otherwise) while the
/// model collapses onto the argmax face (mass must be nondecreasing).
/// An empty schedule means powers of two from 1, truncated after face mass
/// first exceeds 1 - 1e-12 and capped at 2^20.
DegeneracyReport degeneracy_trajectory(const RatVec& t, const RealizableSet& set,
                                       const std::vector<double>& r_schedule = {});

struct BoundaryWitness {
    bool applicable = false;  // false when the face is the whole point set
    bool all_on_boundary = false;
    std::vector<RintVerdict> verdicts;  // one per face index
};

/// Re-checks, point by point, that the collapse face lies on the relative
/// boundary of the hull. Not applicable when the face is everything (then
/// the direction is flat across the points and nothing is squeezed out).
BoundaryWitness boundary_witness(const std::vector<std::size_t>& face,
                                 const RealizableSet& set);

}  // namespace ergm
