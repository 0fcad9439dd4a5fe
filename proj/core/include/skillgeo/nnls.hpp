#pragma once

#include <vector>

namespace skillgeo {

/// Lawson-Hanson nonnegative least squares:  min || A x - y ||_2, x >= 0.
/// `columns[j]` is the j-th column of A.
std::vector<double> nnls(const std::vector<std::vector<double>>& columns,
                         const std::vector<double>& y);

struct SimplexLsqResult {
    std::vector<double> coefficients;  // nonnegative, sums to 1
    double residual = 0.0;             // L2 norm of  sum_j coeff_j * point_j - target
};

/// Solves  min || sum_j lambda_j * points[j] - target ||_2  over the simplex
/// (lambda >= 0, sum lambda = 1). The sum constraint rides as a weighted
/// augmented row; the returned coefficients are renormalized exactly and the
/// residual is recomputed from them.
SimplexLsqResult simplex_constrained_lsq(const std::vector<std::vector<double>>& points,
                                         const std::vector<double>& target);

}  // namespace skillgeo
