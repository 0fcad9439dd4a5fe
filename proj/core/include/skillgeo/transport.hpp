#pragma once

#include <vector>

#include "skillgeo/divergences.hpp"
#include "skillgeo/mdp.hpp"

namespace skillgeo {

/// Ground transport costs between states: nonnegative entries, zero diagonal.
/// The symmetric and metric flags are validated when set.
class CostMatrix {
  public:
    CostMatrix(Mat costs, bool symmetric, bool metric);

    /// Unit cost: 1 off the diagonal. Wasserstein under it equals total
    /// variation distance.
    static CostMatrix unit(std::size_t n);

    /// Euclidean distances between one-hot embeddings: sqrt(2) off-diagonal.
    static CostMatrix euclidean_one_hot(std::size_t n);

    const Mat& costs() const { return costs_; }
    std::size_t size() const { return costs_.size(); }
    bool symmetric() const { return symmetric_; }
    bool metric() const { return metric_; }
    double operator()(std::size_t i, std::size_t j) const { return costs_[i][j]; }

  private:
    Mat costs_;
    bool symmetric_;
    bool metric_;
};

struct TransportPlan {
    Mat plan;          // plan[i][j] = mass moved from state i to state j
    double cost = 0.0;
};

/// Exact discrete optimal transport between p and q under ground cost c,
/// solved as a transportation LP with Bland's rule (deterministic plans).
TransportPlan wasserstein(const OccupancyMeasure& p, const OccupancyMeasure& q,
                          const CostMatrix& c);

/// Wasserstein distance only (optimal cost).
double wasserstein_distance(const OccupancyMeasure& p, const OccupancyMeasure& q,
                            const CostMatrix& c);

/// Total variation distance, the unit-cost Wasserstein closed form.
double total_variation(const OccupancyMeasure& p, const OccupancyMeasure& q);

/// Ordered double sum of pairwise Wasserstein distances over weight-positive
/// skills; every unordered pair contributes twice.
double wsep(const SkillSet& ss, const CostMatrix& c);

}  // namespace skillgeo
