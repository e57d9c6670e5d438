#pragma once

#include "ergm/rational.hpp"

#include <optional>
#include <vector>

namespace ergm {

/// Reduces M to reduced row echelon form in place (leading 1s, zeros above
/// and below each pivot) and returns the pivot column indices; the rank is
/// their count. Rows below the rank come out all zero.
std::vector<std::size_t> rref_in_place(RatMat& M);

/// Basis of {x : M x = 0} for a matrix given by rows over ncols columns.
/// Standard free-variable construction from the RREF, one vector per free
/// column, deterministic. Empty when the kernel is trivial.
RatMat nullspace_basis(RatMat M, std::size_t ncols);

/// Solves the square system A x = b exactly. nullopt when A is singular.
std::optional<RatVec> solve_square(RatMat A, RatVec b);

}  // namespace ergm
