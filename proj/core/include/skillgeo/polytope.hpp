#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skillgeo/mdp.hpp"

namespace skillgeo {

struct HullResult {
    bool inside = false;
    Vec coefficients;     // convex weights over the basis (meaningful when inside)
    double distance = 0;  // L2 residual of the best convex fit
};

/// Tests whether `point` is a convex combination of `basis` by solving the
/// simplex-constrained least-squares feasibility program. inside iff the
/// optimal residual is at most `tol`.
HullResult hull_membership(const OccupancyMeasure& point,
                           const std::vector<OccupancyMeasure>& basis, double tol = 1e-7);

/// Deduplicated extreme points of the feasible state-distribution set,
/// optionally carrying one realizing deterministic policy per vertex.
class Polytope {
  public:
    Polytope(std::vector<OccupancyMeasure> vertices, std::vector<std::optional<Policy>> provenance);

    const std::vector<OccupancyMeasure>& vertices() const { return vertices_; }
    const std::vector<std::optional<Policy>>& provenance() const { return provenance_; }
    std::size_t size() const { return vertices_.size(); }
    std::size_t dim() const { return vertices_.front().size(); }

  private:
    std::vector<OccupancyMeasure> vertices_;
    std::vector<std::optional<Policy>> provenance_;
};

/// Deduplicates `points` under Linf < dedupe_tol (first occurrence kept),
/// then drops every point expressible as a convex combination of the others.
Polytope extreme_points(const std::vector<OccupancyMeasure>& points, double dedupe_tol = 1e-8,
                        double hull_tol = 1e-7);

/// As above, keeping the policy that realized each surviving point.
Polytope extreme_points(const std::vector<std::pair<Policy, OccupancyMeasure>>& points,
                        double dedupe_tol = 1e-8, double hull_tol = 1e-7);

/// Enumerates deterministic policies and filters to the vertex set.
Polytope vertex_polytope(const TabularMdp& mdp, std::uint64_t cap = 1000000);

/// argmax over vertices of <p_v, reward>, ties toward the lowest index.
std::pair<int, double> optimal_vertex(const Polytope& polytope, const Vec& reward);

}  // namespace skillgeo
