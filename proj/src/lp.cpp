#include "ergm/lp.hpp"

#include "ergm/errors.hpp"

#include <algorithm>
#include <limits>

namespace ergm {

namespace {

constexpr std::size_t kNoVar = std::numeric_limits<std::size_t>::max();

// Hard stop for the pivot loop. Bland's rule terminates on its own; this
// only turns a latent bug into a clean error instead of a hang.
constexpr std::size_t kMaxPivots = 1u << 20;

/// Simplex working state on the shifted problem (all variables >= 0).
/// Columns 0..nvars-1 are structural, nvars..nvars+rows-1 artificial.
struct Tableau {
    std::size_t rows;
    std::size_t nvars;
    RatMat body;                  // rows x (nvars + rows), structural then artificial
    RatVec rhs;                   // kept nonnegative
    std::vector<std::size_t> basis;  // column basic in each row
    RatVec obj;                   // reduced-cost row over all columns
    std::vector<bool> enterable;  // artificial columns get disabled in phase 2

    std::size_t cols() const { return nvars + rows; }

    void pivot(std::size_t r, std::size_t e) {
        Rat p = body[r][e];
        for (Rat& v : body[r]) v /= p;
        rhs[r] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || body[i][e] == 0) continue;
            Rat f = body[i][e];
            for (std::size_t j = 0; j < cols(); ++j) body[i][j] -= f * body[r][j];
            rhs[i] -= f * rhs[r];
        }
        if (obj[e] != 0) {
            Rat f = obj[e];
            for (std::size_t j = 0; j < cols(); ++j) obj[j] -= f * body[r][j];
        }
        basis[r] = e;
    }

    /// Resets the reduced-cost row for objective coefficients cost.
    void set_objective(const RatVec& cost) {
        obj.assign(cols(), Rat(0));
        for (std::size_t j = 0; j < cost.size(); ++j) obj[j] = cost[j];
        for (std::size_t i = 0; i < rows; ++i) {
            Rat cb = basis[i] < cost.size() ? cost[basis[i]] : Rat(0);
            if (cb == 0) continue;
            for (std::size_t j = 0; j < cols(); ++j) obj[j] -= cb * body[i][j];
        }
    }

    /// Runs Bland pivots until optimal or unbounded. Returns the entering
    /// column that witnessed unboundedness, or kNoVar once optimal.
    std::size_t optimize() {
        for (std::size_t step = 0; step < kMaxPivots; ++step) {
            std::size_t enter = kNoVar;
            for (std::size_t j = 0; j < cols(); ++j) {
                if (enterable[j] && obj[j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == kNoVar) return kNoVar;

            std::size_t leave = kNoVar;
            Rat best_ratio;
            for (std::size_t i = 0; i < rows; ++i) {
                if (body[i][enter] <= 0) continue;
                Rat ratio = rhs[i] / body[i][enter];
                if (leave == kNoVar || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == kNoVar) return enter;  // unbounded along this column
            pivot(leave, enter);
        }
        throw InternalError("lp_solve: pivot limit hit; simplex did not terminate");
    }
};

void verify_optimal(const LinearProgram& lp, const RatVec& x, const Rat& objective) {
    for (std::size_t i = 0; i < lp.A.size(); ++i)
        if (dot(lp.A[i], x) != lp.b[i])
            throw InternalError("lp_solve: reported optimum violates row " + std::to_string(i));
    for (std::size_t j = 0; j < x.size(); ++j) {
        Rat lo = lp.lower.empty() ? Rat(0) : lp.lower[j];
        if (x[j] < lo) throw InternalError("lp_solve: reported optimum below lower bound");
    }
    if (dot(lp.c, x) != objective)
        throw InternalError("lp_solve: objective value inconsistent with solution");
}

void verify_farkas(const LinearProgram& lp, const RatVec& y) {
    const std::size_t nvars = lp.c.size();
    RatVec shifted_b = lp.b;
    if (!lp.lower.empty())
        for (std::size_t i = 0; i < lp.A.size(); ++i)
            shifted_b[i] -= dot(lp.A[i], lp.lower);
    for (std::size_t j = 0; j < nvars; ++j) {
        Rat col = 0;
        for (std::size_t i = 0; i < lp.A.size(); ++i) col += y[i] * lp.A[i][j];
        if (col > 0) throw InternalError("lp_solve: farkas certificate fails on a column");
    }
    if (dot(y, shifted_b) <= 0)
        throw InternalError("lp_solve: farkas certificate has nonpositive witness value");
}

void verify_ray(const LinearProgram& lp, const RatVec& d) {
    for (std::size_t i = 0; i < lp.A.size(); ++i)
        if (dot(lp.A[i], d) != 0) throw InternalError("lp_solve: ray leaves the feasible set");
    for (const Rat& v : d)
        if (v < 0) throw InternalError("lp_solve: ray has a negative component");
    if (dot(lp.c, d) <= 0) throw InternalError("lp_solve: ray does not improve the objective");
}

}  // namespace

LpResult lp_solve(const LinearProgram& lp) {
    const std::size_t rows = lp.A.size();
    const std::size_t nvars = lp.c.size();
    if (lp.b.size() != rows) throw InvalidInput("lp_solve: row count mismatch");
    for (const RatVec& row : lp.A)
        if (row.size() != nvars) throw InvalidInput("lp_solve: column count mismatch");
    if (!lp.lower.empty() && lp.lower.size() != nvars)
        throw InvalidInput("lp_solve: lower bound count mismatch");

    // Shift x = lower + x' so every variable is nonnegative.
    RatVec shifted_b = lp.b;
    if (!lp.lower.empty())
        for (std::size_t i = 0; i < rows; ++i) shifted_b[i] -= dot(lp.A[i], lp.lower);

    Tableau t;
    t.rows = rows;
    t.nvars = nvars;
    t.body.assign(rows, RatVec(nvars + rows, Rat(0)));
    t.rhs.assign(rows, Rat(0));
    t.basis.resize(rows);
    t.enterable.assign(nvars + rows, true);

    std::vector<int> row_sign(rows, 1);
    for (std::size_t i = 0; i < rows; ++i) {
        int sign = shifted_b[i] < 0 ? -1 : 1;
        row_sign[i] = sign;
        for (std::size_t j = 0; j < nvars; ++j) t.body[i][j] = sign * lp.A[i][j];
        t.body[i][nvars + i] = 1;
        t.rhs[i] = sign * shifted_b[i];
        t.basis[i] = nvars + i;
    }

    // Phase 1: drive the artificial variables to zero.
    RatVec phase1_cost(nvars + rows, Rat(0));
    for (std::size_t i = 0; i < rows; ++i) phase1_cost[nvars + i] = -1;
    t.set_objective(phase1_cost);
    if (t.optimize() != kNoVar)
        throw InternalError("lp_solve: phase 1 reported unbounded");

    Rat infeasibility = 0;
    for (std::size_t i = 0; i < rows; ++i)
        if (t.basis[i] >= nvars) infeasibility += t.rhs[i];

    LpResult result;
    if (infeasibility > 0) {
        // Dual prices off the final reduced costs of the artificial
        // columns give a Farkas separator for the shifted system.
        result.status = LpStatus::Infeasible;
        result.farkas.resize(rows);
        for (std::size_t i = 0; i < rows; ++i)
            result.farkas[i] = row_sign[i] * (Rat(1) + t.obj[nvars + i]);
        verify_farkas(lp, result.farkas);
        return result;
    }

    // Pivot leftover artificial variables (all at value zero) out of the
    // basis; a row with no structural coefficient left is redundant and
    // harmless, its artificial stays basic at zero but may not re-enter.
    for (std::size_t i = 0; i < rows; ++i) {
        if (t.basis[i] < nvars) continue;
        std::size_t col = kNoVar;
        for (std::size_t j = 0; j < nvars; ++j)
            if (t.body[i][j] != 0) {
                col = j;
                break;
            }
        if (col != kNoVar) t.pivot(i, col);
    }
    for (std::size_t j = 0; j < rows; ++j) t.enterable[nvars + j] = false;

    // Phase 2 on the real objective.
    RatVec phase2_cost(nvars + rows, Rat(0));
    for (std::size_t j = 0; j < nvars; ++j) phase2_cost[j] = lp.c[j];
    t.set_objective(phase2_cost);
    std::size_t unbounded_col = t.optimize();

    auto structural_solution = [&]() {
        RatVec x(nvars, Rat(0));
        for (std::size_t i = 0; i < rows; ++i)
            if (t.basis[i] < nvars) x[t.basis[i]] = t.rhs[i];
        if (!lp.lower.empty())
            for (std::size_t j = 0; j < nvars; ++j) x[j] += lp.lower[j];
        return x;
    };

    if (unbounded_col != kNoVar) {
        result.status = LpStatus::Unbounded;
        result.x = structural_solution();
        result.ray.assign(nvars, Rat(0));
        result.ray[unbounded_col] = 1;
        for (std::size_t i = 0; i < rows; ++i)
            if (t.basis[i] < nvars) result.ray[t.basis[i]] = -t.body[i][unbounded_col];
        verify_ray(lp, result.ray);
        return result;
    }

    result.status = LpStatus::Optimal;
    result.x = structural_solution();
    result.objective = dot(lp.c, result.x);
    verify_optimal(lp, result.x, result.objective);
    return result;
}

}  // namespace ergm
