#include "skillgeo/simplex_lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

namespace skillgeo {

namespace {

constexpr double kReducedCostTol = 1e-10;
constexpr double kPivotTol = 1e-11;

struct Tableau {
    std::size_t m, n;                     // rows, structural + artificial columns
    std::vector<std::vector<double>> t;   // m x n, current B^-1 A
    std::vector<double> rhs;              // B^-1 b
    std::vector<int> basis;               // basic variable per row

    void pivot(std::size_t row, std::size_t col) {
        double piv = t[row][col];
        for (std::size_t j = 0; j < n; ++j) t[row][j] /= piv;
        rhs[row] /= piv;
        t[row][col] = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row) continue;
            double f = t[i][col];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) t[i][j] -= f * t[row][j];
            rhs[i] -= f * rhs[row];
            t[i][col] = 0.0;
            if (rhs[i] < 0.0 && rhs[i] > -1e-13) rhs[i] = 0.0;
        }
        basis[row] = static_cast<int>(col);
    }
};

// Runs simplex iterations on the tableau for cost vector `cost` restricted to
// columns [0, limit). Returns false on iteration cap.
bool run_simplex(Tableau& tab, const std::vector<double>& cost, std::size_t limit, int max_iterations,
                 int& iterations, bool& unbounded) {
    unbounded = false;
    std::vector<double> reduced(limit);
    while (iterations < max_iterations) {
        // reduced costs r_j = c_j - c_B' T_j
        std::vector<double> cb(tab.m);
        for (std::size_t i = 0; i < tab.m; ++i) cb[i] = cost[static_cast<std::size_t>(tab.basis[i])];
        int enter = -1;
        for (std::size_t j = 0; j < limit; ++j) {
            double r = cost[j];
            for (std::size_t i = 0; i < tab.m; ++i) {
                double tij = tab.t[i][j];
                if (tij != 0.0) r -= cb[i] * tij;
            }
            if (r < -kReducedCostTol) {
                enter = static_cast<int>(j);  // Bland: first negative index
                break;
            }
        }
        if (enter < 0) return true;  // optimal

        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < tab.m; ++i) {
            double a = tab.t[i][static_cast<std::size_t>(enter)];
            if (a > kPivotTol) {
                double ratio = tab.rhs[i] / a;
                if (ratio < best_ratio - 1e-15 ||
                    (std::abs(ratio - best_ratio) <= 1e-15 &&
                     (leave < 0 || tab.basis[i] < tab.basis[static_cast<std::size_t>(leave)]))) {
                    best_ratio = ratio;
                    leave = static_cast<int>(i);
                }
            }
        }
        if (leave < 0) {
            unbounded = true;
            return true;
        }
        tab.pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
        ++iterations;
    }
    return false;
}

}  // namespace

LpResult solve_lp(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                  const std::vector<double>& c, int max_iterations) {
    LpResult res;
    const std::size_t m = a.size();
    const std::size_t n = c.size();

    Tableau tab;
    tab.m = m;
    tab.n = n + m;  // structural + one artificial per row
    tab.t.assign(m, std::vector<double>(tab.n, 0.0));
    tab.rhs.resize(m);
    tab.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        double sign = (b[i] < 0.0) ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = sign * a[i][j];
        tab.rhs[i] = sign * b[i];
        tab.t[i][n + i] = 1.0;
        tab.basis[i] = static_cast<int>(n + i);
    }

    // Phase 1: minimize the sum of artificials.
    std::vector<double> phase1_cost(tab.n, 0.0);
    for (std::size_t i = 0; i < m; ++i) phase1_cost[n + i] = 1.0;
    bool unbounded = false;
    if (!run_simplex(tab, phase1_cost, tab.n, max_iterations, res.iterations, unbounded)) {
        res.status = LpResult::Status::iteration_limit;
        return res;
    }
    double infeas = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis[i] >= static_cast<int>(n)) infeas += tab.rhs[i];
    res.phase1_objective = infeas;
    if (infeas > 1e-7) {
        res.status = LpResult::Status::infeasible;
        return res;
    }

    // Drive any artificials still basic at level zero out of the basis.
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < static_cast<int>(n)) continue;
        int col = -1;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(tab.t[i][j]) > 1e-9) {
                col = static_cast<int>(j);
                break;
            }
        }
        if (col >= 0) tab.pivot(i, static_cast<std::size_t>(col));
        // else: redundant row; the artificial stays basic at ~0, harmless.
    }

    // Phase 2 over structural columns only.
    std::vector<double> phase2_cost(tab.n, 0.0);
    for (std::size_t j = 0; j < n; ++j) phase2_cost[j] = c[j];
    for (std::size_t i = 0; i < m; ++i) phase2_cost[n + i] = 0.0;
    if (!run_simplex(tab, phase2_cost, n, max_iterations, res.iterations, unbounded)) {
        res.status = LpResult::Status::iteration_limit;
        return res;
    }
    if (unbounded) {
        res.status = LpResult::Status::unbounded;
        return res;
    }

    res.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < static_cast<int>(n)) {
            double v = tab.rhs[i];
            res.x[static_cast<std::size_t>(tab.basis[i])] = (v < 0.0 && v > -1e-12) ? 0.0 : v;
        }
    }
    res.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
    res.status = LpResult::Status::optimal;
    return res;
}

}  // namespace skillgeo
