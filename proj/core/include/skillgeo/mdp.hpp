#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skillgeo/errors.hpp"

namespace skillgeo {

using Vec = std::vector<double>;
using Mat = std::vector<std::vector<double>>;

enum class OccupancyKind { discounted, stationary };

/// A point on the state-distribution simplex. Construction clamps tiny
/// numerical negatives (down to -1e-9) to zero and normalizes; anything
/// worse is rejected.
class OccupancyMeasure {
  public:
    explicit OccupancyMeasure(Vec probs);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const Vec& probs() const { return probs_; }

    double linf_distance(const OccupancyMeasure& other) const;

  private:
    Vec probs_;
};

struct Policy {
    enum class Kind { deterministic, stochastic };
    Kind kind = Kind::deterministic;
    std::vector<int> actions;  // deterministic: one action index per state
    Mat action_probs;          // stochastic: |S| x |A| row-stochastic

    static Policy make_deterministic(std::vector<int> actions);
    static Policy make_stochastic(Mat action_probs);
};

/// Finite MDP with per-action transition matrices.
/// transitions[a][s][s'] = P(s' | s, a); rows are probability vectors.
struct TabularMdp {
    int num_states = 0;
    int num_actions = 0;
    std::vector<Mat> transitions;
    Vec initial;
    double gamma = 0.95;
    OccupancyKind occupancy_kind = OccupancyKind::discounted;

    /// Enforces the structural invariants; throws MalformedSpec or
    /// StochasticityViolation. Row sums within 1e-6 of one are renormalized.
    void validate_and_normalize();
};

/// State-to-state transition matrix induced by a policy.
Mat policy_transition_matrix(const TabularMdp& mdp, const Policy& policy);

/// Occupancy measure of a policy.
///
/// Discounted mode solves the flow system p = (1-gamma) p0 + gamma M'p
/// directly. Stationary mode runs power iteration on M' to an Linf residual
/// of 1e-12; if the chain is periodic and plain iteration stalls, iteration
/// continues on the window-averaged kernel (I/|S|) sum_{k=1..|S|} M^k, which
/// has the same invariant distributions and is aperiodic. NonConvergent is
/// raised only if both fail within the iteration cap.
OccupancyMeasure occupancy(const TabularMdp& mdp, const Policy& policy);

/// All |A|^|S| deterministic policies with their occupancy measures, ordered
/// by mixed-radix policy index (state 0 fastest). No deduplication.
std::vector<std::pair<Policy, OccupancyMeasure>> enumerate_policy_occupancies(
    const TabularMdp& mdp, std::uint64_t cap = 1000000);

}  // namespace skillgeo
