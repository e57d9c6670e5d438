#include "ergm/linalg.hpp"

#include "ergm/errors.hpp"

#include <algorithm>

namespace ergm {

std::vector<std::size_t> rref_in_place(RatMat& M) {
    std::vector<std::size_t> pivots;
    if (M.empty()) return pivots;
    const std::size_t rows = M.size();
    const std::size_t cols = M[0].size();
    for (const RatVec& row : M)
        if (row.size() != cols) throw InvalidInput("rref: ragged matrix");

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && M[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(M[r], M[pivot]);

        Rat inv = M[r][c];
        for (std::size_t j = c; j < cols; ++j) M[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rat f = M[i][c];
            for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

RatMat nullspace_basis(RatMat M, std::size_t ncols) {
    for (const RatVec& row : M)
        if (row.size() != ncols) throw InvalidInput("nullspace: row length mismatch");
    std::vector<std::size_t> pivots = rref_in_place(M);

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    RatMat basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(ncols, Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -M[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> solve_square(RatMat A, RatVec b) {
    const std::size_t n = A.size();
    if (b.size() != n) throw InvalidInput("solve_square: size mismatch");
    for (RatVec& row : A) {
        if (row.size() != n) throw InvalidInput("solve_square: matrix not square");
    }
    for (std::size_t i = 0; i < n; ++i) A[i].push_back(b[i]);

    std::vector<std::size_t> pivots = rref_in_place(A);
    // A full set of pivots inside the coefficient block; a pivot in the
    // appended column would mean an inconsistent system.
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = A[i][n];
    return x;
}

}  // namespace ergm
