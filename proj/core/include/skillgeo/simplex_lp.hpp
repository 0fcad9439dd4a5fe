#pragma once

#include <vector>

namespace skillgeo {

/// Outcome of a dense two-phase simplex solve.
struct LpResult {
    enum class Status { optimal, infeasible, unbounded, iteration_limit };
    Status status = Status::optimal;
    std::vector<double> x;
    double objective = 0.0;
    /// Residual infeasibility left by phase 1 (sum of artificial variables).
    double phase1_objective = 0.0;
    int iterations = 0;

    bool ok() const { return status == Status::optimal; }
};

/// Solves  min c'x  s.t.  A x = b, x >= 0  with a dense tableau simplex.
///
/// Pivoting is Bland's rule throughout (lowest eligible index enters, ratio
/// ties resolved toward the lowest basic index), so the solve is cycling-free
/// and deterministic for a fixed variable ordering. Problem sizes here are
/// tiny (tens of rows), so no factorization machinery is needed.
LpResult solve_lp(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                  const std::vector<double>& c, int max_iterations = 200000);

}  // namespace skillgeo
