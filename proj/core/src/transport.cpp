#include "skillgeo/transport.hpp"

#include <cmath>

#include "skillgeo/errors.hpp"
#include "skillgeo/simplex_lp.hpp"

namespace skillgeo {

CostMatrix::CostMatrix(Mat costs, bool symmetric, bool metric)
    : costs_(std::move(costs)), symmetric_(symmetric), metric_(metric) {
    const std::size_t n = costs_.size();
    if (n == 0) throw Error(ErrorCode::invalid_argument, "cost matrix must be nonempty");
    for (std::size_t i = 0; i < n; ++i) {
        if (costs_[i].size() != n)
            throw Error(ErrorCode::invalid_argument, "cost matrix must be square");
        if (costs_[i][i] != 0.0)
            throw Error(ErrorCode::invalid_argument, "cost matrix diagonal must be zero");
        for (double v : costs_[i])
            if (v < 0.0) throw Error(ErrorCode::invalid_argument, "cost entries must be >= 0");
    }
    if (symmetric_) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (std::abs(costs_[i][j] - costs_[j][i]) > 1e-12)
                    throw Error(ErrorCode::invalid_argument, "cost matrix is not symmetric");
    }
    if (metric_) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (costs_[i][k] > costs_[i][j] + costs_[j][k] + 1e-9)
                        throw Error(ErrorCode::invalid_argument,
                                    "cost matrix violates the triangle inequality");
    }
}

CostMatrix CostMatrix::unit(std::size_t n) {
    Mat c(n, Vec(n, 1.0));
    for (std::size_t i = 0; i < n; ++i) c[i][i] = 0.0;
    return CostMatrix(std::move(c), true, true);
}

CostMatrix CostMatrix::euclidean_one_hot(std::size_t n) {
    const double d = std::sqrt(2.0);
    Mat c(n, Vec(n, d));
    for (std::size_t i = 0; i < n; ++i) c[i][i] = 0.0;
    return CostMatrix(std::move(c), true, true);
}

TransportPlan wasserstein(const OccupancyMeasure& p, const OccupancyMeasure& q,
                          const CostMatrix& c) {
    const std::size_t n = p.size();
    if (q.size() != n || c.size() != n)
        throw Error(ErrorCode::dimension_mismatch, "transport dimension mismatch");

    // Transportation LP: variables T[i][j] flattened row-major.
    // Row-sum constraints (n) then column sums (n - 1); the last column
    // constraint is redundant because both marginals sum to one.
    const std::size_t nvars = n * n;
    std::vector<Vec> a;
    Vec b;
    a.reserve(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        Vec row(nvars, 0.0);
        for (std::size_t j = 0; j < n; ++j) row[i * n + j] = 1.0;
        a.push_back(std::move(row));
        b.push_back(p[i]);
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        Vec row(nvars, 0.0);
        for (std::size_t i = 0; i < n; ++i) row[i * n + j] = 1.0;
        a.push_back(std::move(row));
        b.push_back(q[j]);
    }
    Vec cost(nvars);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cost[i * n + j] = c(i, j);

    LpResult lp = solve_lp(a, b, cost);
    if (!lp.ok())
        throw Error(ErrorCode::non_convergent, "transportation LP did not reach optimality");

    TransportPlan out;
    out.plan.assign(n, Vec(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.plan[i][j] = lp.x[i * n + j];
    out.cost = lp.objective;
    return out;
}

double wasserstein_distance(const OccupancyMeasure& p, const OccupancyMeasure& q,
                            const CostMatrix& c) {
    return wasserstein(p, q, c).cost;
}

double total_variation(const OccupancyMeasure& p, const OccupancyMeasure& q) {
    double sum = 0.0;
    for (std::size_t s = 0; s < p.size(); ++s) sum += std::abs(p[s] - q[s]);
    return 0.5 * sum;
}

double wsep(const SkillSet& ss, const CostMatrix& c) {
    double sum = 0.0;
    for (std::size_t i = 0; i < ss.size(); ++i) {
        if (!ss.weight_positive(i)) continue;
        for (std::size_t j = 0; j < ss.size(); ++j) {
            if (i == j || !ss.weight_positive(j)) continue;
            sum += wasserstein_distance(ss.skills()[i], ss.skills()[j], c);
        }
    }
    return sum;
}

}  // namespace skillgeo
