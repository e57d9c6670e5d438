#pragma once

#include "ergm/rational.hpp"

#include <vector>

namespace ergm {

/// maximize c.x subject to A x = b and x >= lower (componentwise).
/// lower may be empty, meaning all zeros. All data exact rationals.
struct LinearProgram {
    RatMat A;      // equality rows
    RatVec b;      // right-hand side, one entry per row
    RatVec c;      // objective
    RatVec lower;  // per-variable lower bounds; empty = zeros
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Optimal;

    // Optimal
    RatVec x;
    Rat objective;

    // Infeasible: y with y.(A col j) <= 0 for every column j and y.b' > 0,
    // where b' = b - A.lower, proving no x >= lower satisfies A x = b.
    RatVec farkas;

    // Unbounded: feasible x plus direction d with A d = 0, d >= 0, c.d > 0.
    RatVec ray;
};

/// Dense-tableau simplex over exact rationals. Bland's pivot rule (smallest
/// eligible index enters, smallest-index basic variable leaves ties), so no
/// cycling on degenerate bases. Certificates are re-verified exactly before
/// returning; a failed check throws InternalError.
LpResult lp_solve(const LinearProgram& lp);

}  // namespace ergm
