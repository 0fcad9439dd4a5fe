#include "skillgeo/mdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace skillgeo {

namespace {

void check_probability_row(const Vec& row, double sum_tol, const char* what) {
    double sum = 0.0;
    for (double v : row) {
        if (v < -1e-12)
            throw Error(ErrorCode::stochasticity_violation,
                        std::string(what) + " has a negative entry");
        sum += v;
    }
    if (std::abs(sum - 1.0) > sum_tol)
        throw Error(ErrorCode::stochasticity_violation,
                    std::string(what) + " sums to " + std::to_string(sum) + ", expected 1");
}

void normalize_row(Vec& row) {
    double sum = 0.0;
    for (double& v : row) {
        if (v < 0.0) v = 0.0;
        sum += v;
    }
    for (double& v : row) v /= sum;
}

// Solves the dense linear system A x = b in place (partial pivoting).
Vec solve_dense(Mat a, Vec b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        double const d = a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            double f = a[i][col] / d;
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    Vec x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

// One transpose-application step: out = M' p.
Vec step(const Mat& m, const Vec& p) {
    const std::size_t n = p.size();
    Vec out(n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
        double ps = p[s];
        if (ps == 0.0) continue;
        for (std::size_t t = 0; t < n; ++t) out[t] += ps * m[s][t];
    }
    return out;
}

double linf_diff(const Vec& a, const Vec& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

OccupancyMeasure::OccupancyMeasure(Vec probs) : probs_(std::move(probs)) {
    if (probs_.empty())
        throw Error(ErrorCode::invalid_argument, "occupancy measure must be nonempty");
    double sum = 0.0;
    for (double& v : probs_) {
        if (v < -1e-9)
            throw Error(ErrorCode::invalid_argument,
                        "occupancy measure entry below -1e-9: " + std::to_string(v));
        if (v < 0.0) v = 0.0;
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw Error(ErrorCode::invalid_argument,
                    "occupancy measure sums to " + std::to_string(sum) + ", expected 1");
    for (double& v : probs_) v /= sum;
}

double OccupancyMeasure::linf_distance(const OccupancyMeasure& other) const {
    return linf_diff(probs_, other.probs_);
}

Policy Policy::make_deterministic(std::vector<int> actions) {
    Policy p;
    p.kind = Kind::deterministic;
    p.actions = std::move(actions);
    return p;
}

Policy Policy::make_stochastic(Mat action_probs) {
    Policy p;
    p.kind = Kind::stochastic;
    for (const auto& row : action_probs) check_probability_row(row, 1e-9, "policy row");
    p.action_probs = std::move(action_probs);
    return p;
}

void TabularMdp::validate_and_normalize() {
    if (num_states <= 0 || num_actions <= 0)
        throw Error(ErrorCode::malformed_spec, "num_states and num_actions must be positive");
    if (gamma < 0.0 || gamma >= 1.0)
        throw Error(ErrorCode::malformed_spec, "gamma must lie in [0, 1)");
    if (static_cast<int>(transitions.size()) != num_actions)
        throw Error(ErrorCode::malformed_spec, "transitions must hold one matrix per action");
    for (auto& per_action : transitions) {
        if (static_cast<int>(per_action.size()) != num_states)
            throw Error(ErrorCode::malformed_spec, "transition matrix has wrong row count");
        for (auto& row : per_action) {
            if (static_cast<int>(row.size()) != num_states)
                throw Error(ErrorCode::malformed_spec, "transition row has wrong length");
            check_probability_row(row, 1e-6, "transition row");
            normalize_row(row);
        }
    }
    if (static_cast<int>(initial.size()) != num_states)
        throw Error(ErrorCode::malformed_spec, "initial distribution has wrong length");
    check_probability_row(initial, 1e-6, "initial distribution");
    normalize_row(initial);
}

Mat policy_transition_matrix(const TabularMdp& mdp, const Policy& policy) {
    const std::size_t n = static_cast<std::size_t>(mdp.num_states);
    Mat m(n, Vec(n, 0.0));
    if (policy.kind == Policy::Kind::deterministic) {
        if (policy.actions.size() != n)
            throw Error(ErrorCode::dimension_mismatch, "policy has wrong number of states");
        for (std::size_t s = 0; s < n; ++s) {
            int a = policy.actions[s];
            if (a < 0 || a >= mdp.num_actions)
                throw Error(ErrorCode::invalid_argument, "policy action index out of range");
            m[s] = mdp.transitions[static_cast<std::size_t>(a)][s];
        }
    } else {
        if (policy.action_probs.size() != n ||
            static_cast<int>(policy.action_probs[0].size()) != mdp.num_actions)
            throw Error(ErrorCode::dimension_mismatch, "policy matrix does not match mdp");
        for (std::size_t s = 0; s < n; ++s)
            for (int a = 0; a < mdp.num_actions; ++a) {
                double pa = policy.action_probs[s][static_cast<std::size_t>(a)];
                if (pa == 0.0) continue;
                const Vec& row = mdp.transitions[static_cast<std::size_t>(a)][s];
                for (std::size_t t = 0; t < n; ++t) m[s][t] += pa * row[t];
            }
    }
    return m;
}

OccupancyMeasure occupancy(const TabularMdp& mdp, const Policy& policy) {
    const std::size_t n = static_cast<std::size_t>(mdp.num_states);
    Mat m = policy_transition_matrix(mdp, policy);

    if (mdp.occupancy_kind == OccupancyKind::discounted) {
        // (I - gamma M') p = (1 - gamma) p0
        Mat a(n, Vec(n, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a[i][j] = (i == j ? 1.0 : 0.0) - mdp.gamma * m[j][i];
        Vec b(n);
        for (std::size_t i = 0; i < n; ++i) b[i] = (1.0 - mdp.gamma) * mdp.initial[i];
        return OccupancyMeasure(solve_dense(std::move(a), std::move(b)));
    }

    constexpr double kResidual = 1e-12;
    constexpr std::uint64_t kMaxIters = 1000000;
    Vec p = mdp.initial;
    std::uint64_t iters = 0;
    const std::uint64_t plain_budget = std::min<std::uint64_t>(kMaxIters / 2, 100000);
    while (iters < plain_budget) {
        Vec next = step(m, p);
        ++iters;
        if (linf_diff(next, p) <= kResidual) return OccupancyMeasure(std::move(next));
        p = std::move(next);
    }

    // Periodic or slowly mixing chain: iterate the window-averaged kernel.
    Mat avg(n, Vec(n, 0.0));
    Mat power(n, Vec(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) power[i][i] = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        Mat next(n, Vec(n, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                double f = power[i][l];
                if (f == 0.0) continue;
                for (std::size_t j = 0; j < n; ++j) next[i][j] += f * m[l][j];
            }
        power = std::move(next);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) avg[i][j] += power[i][j] / static_cast<double>(n);
    }
    while (iters < kMaxIters) {
        Vec next = step(avg, p);
        ++iters;
        if (linf_diff(next, p) <= kResidual) {
            // The averaged fixed point is invariant for M as well; report it
            // once the residual against M itself meets the target.
            Vec check = step(m, next);
            if (linf_diff(check, next) <= 10 * kResidual) return OccupancyMeasure(std::move(next));
        }
        p = std::move(next);
    }
    throw Error(ErrorCode::non_convergent,
                "stationary occupancy did not reach residual 1e-12 within iteration cap");
}

std::vector<std::pair<Policy, OccupancyMeasure>> enumerate_policy_occupancies(
    const TabularMdp& mdp, std::uint64_t cap) {
    const int n = mdp.num_states;
    const int na = mdp.num_actions;
    double count_f = std::pow(static_cast<double>(na), n);
    if (count_f > static_cast<double>(cap))
        throw Error(ErrorCode::too_large, "deterministic policy count " + std::to_string(count_f) +
                                              " exceeds cap " + std::to_string(cap));
    std::uint64_t count = 1;
    for (int s = 0; s < n; ++s) count *= static_cast<std::uint64_t>(na);

    std::vector<std::pair<Policy, OccupancyMeasure>> out;
    out.reserve(count);
    std::vector<int> actions(static_cast<std::size_t>(n), 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t rem = idx;
        for (int s = 0; s < n; ++s) {
            actions[static_cast<std::size_t>(s)] = static_cast<int>(rem % na);
            rem /= static_cast<std::uint64_t>(na);
        }
        Policy pi = Policy::make_deterministic(actions);
        OccupancyMeasure occ = occupancy(mdp, pi);
        out.emplace_back(std::move(pi), std::move(occ));
    }
    return out;
}

}  // namespace skillgeo
