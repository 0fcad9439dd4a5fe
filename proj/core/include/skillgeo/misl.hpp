#pragma once

#include <cstdint>
#include <vector>

#include "skillgeo/divergences.hpp"
#include "skillgeo/polytope.hpp"

namespace skillgeo {

/// Minimax-KL center of the feasible polytope: the unique mixture that
/// minimizes the largest KL divergence from any vertex, together with the
/// attained radius (the optimal mutual information) and the vertex set on
/// the maximal "circle".
struct MislSolution {
    OccupancyMeasure center;
    double radius = 0.0;
    std::vector<int> active;  // vertex indices within active_tol of the radius
    Vec weights;              // mixture weights over `active` realizing the center
    int iterations = 0;
    double gap = 0.0;         // final duality gap certificate
};

/// Solves min over q in the hull of max over vertices v of KL(p_v || q).
///
/// The mixture weights are driven by annealed multiplicative (entropic
/// mirror) updates, which double as a dual ascent and give a duality-gap
/// certificate each sweep; once the gap is small the near-active set is
/// polished by a damped Gauss-Newton solve of the equal-divergence
/// conditions, restoring the true (unsmoothed) max for the certificate and
/// the active-set extraction. `seed` only varies the starting weights.
MislSolution misl_center(const Polytope& polytope, double tol = 1e-7, double active_tol = 1e-4,
                         std::uint64_t seed = 0);

/// Feasible mixture weights over `active_vertices` reproducing `center`,
/// found by phase-1 linear programming (deterministic). Throws Infeasible if
/// the center is not in the hull (tolerance 1e-6).
Vec misl_weights(const std::vector<OccupancyMeasure>& active_vertices,
                 const OccupancyMeasure& center);

/// Brute-force minimax-KL center for |S| <= 3: scans the hull on a grid at
/// the given resolution and refines twice around the best cell. Independent
/// of the mirror-descent/Newton path; used for cross-validation.
OccupancyMeasure misl_center_grid_oracle(const Polytope& polytope, double resolution = 1e-3);

struct TiebreakResult {
    Vec weights;             // best feasible weights found
    double lsepin_value = 0.0;
    Vec heuristic_weights;   // max-min-weight LP point, reported for comparison
    double heuristic_lsepin = 0.0;
};

/// Among feasible mixture weights realizing the center, locally maximizes
/// the minimum indicator information over the supported skills. Multi-start
/// projected gradient plus per-support bisection; the max-min-weight LP
/// heuristic is also reported. Local search only, no global claim.
TiebreakResult lsepin_tiebreak(const std::vector<OccupancyMeasure>& active_vertices,
                               const OccupancyMeasure& center, double radius);

struct NecessaryConditionsReport {
    bool mixtures_match = false;
    bool divergences_match = false;
    bool shared_skill_matches = false;
    double worst_mixture_deviation = 0.0;
    double worst_divergence_deviation = 0.0;
    double worst_shared_deviation = 0.0;

    bool all_pass() const { return mixtures_match && divergences_match && shared_skill_matches; }
};

/// Verifies the common-mixture / equal-divergence / shared-skill conditions
/// under which indicator information comparisons across skill sets are valid.
NecessaryConditionsReport check_necessary_conditions(const std::vector<SkillSet>& sets,
                                                     const std::vector<int>& shared_skill,
                                                     double tol = 1e-9);

}  // namespace skillgeo
