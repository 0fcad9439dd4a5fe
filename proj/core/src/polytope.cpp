#include "skillgeo/polytope.hpp"

#include <cmath>

#include "skillgeo/errors.hpp"
#include "skillgeo/nnls.hpp"

namespace skillgeo {

HullResult hull_membership(const OccupancyMeasure& point,
                           const std::vector<OccupancyMeasure>& basis, double tol) {
    if (basis.empty()) throw Error(ErrorCode::invalid_argument, "hull basis must be nonempty");
    std::vector<Vec> cols;
    cols.reserve(basis.size());
    for (const auto& b : basis) {
        if (b.size() != point.size())
            throw Error(ErrorCode::dimension_mismatch, "hull basis dimension mismatch");
        cols.push_back(b.probs());
    }
    SimplexLsqResult fit = simplex_constrained_lsq(cols, point.probs());
    HullResult out;
    out.distance = fit.residual;
    out.inside = fit.residual <= tol;
    out.coefficients = std::move(fit.coefficients);
    return out;
}

Polytope::Polytope(std::vector<OccupancyMeasure> vertices,
                   std::vector<std::optional<Policy>> provenance)
    : vertices_(std::move(vertices)), provenance_(std::move(provenance)) {
    if (vertices_.empty()) throw Error(ErrorCode::invalid_argument, "polytope must be nonempty");
    if (provenance_.empty()) provenance_.assign(vertices_.size(), std::nullopt);
    if (provenance_.size() != vertices_.size())
        throw Error(ErrorCode::invalid_argument, "provenance length mismatch");
}

namespace {

Polytope extreme_points_impl(std::vector<OccupancyMeasure> pts,
                             std::vector<std::optional<Policy>> prov, double dedupe_tol,
                             double hull_tol) {
    if (pts.empty()) throw Error(ErrorCode::invalid_argument, "extreme_points needs input points");

    // Dedupe, keeping the first representative of each Linf cluster.
    std::vector<OccupancyMeasure> uniq;
    std::vector<std::optional<Policy>> uniq_prov;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dup = false;
        for (const auto& u : uniq)
            if (pts[i].linf_distance(u) < dedupe_tol) {
                dup = true;
                break;
            }
        if (!dup) {
            uniq.push_back(pts[i]);
            uniq_prov.push_back(prov.empty() ? std::nullopt : prov[i]);
        }
    }

    // Single pass: a point inside the hull of the other survivors is
    // redundant, and removing it leaves that hull unchanged.
    std::vector<bool> keep(uniq.size(), true);
    for (std::size_t i = 0; i < uniq.size(); ++i) {
        std::vector<OccupancyMeasure> others;
        for (std::size_t j = 0; j < uniq.size(); ++j)
            if (j != i && keep[j]) others.push_back(uniq[j]);
        if (others.empty()) continue;
        if (hull_membership(uniq[i], others, hull_tol).inside) keep[i] = false;
    }

    std::vector<OccupancyMeasure> verts;
    std::vector<std::optional<Policy>> verts_prov;
    for (std::size_t i = 0; i < uniq.size(); ++i)
        if (keep[i]) {
            verts.push_back(uniq[i]);
            verts_prov.push_back(uniq_prov[i]);
        }
    return Polytope(std::move(verts), std::move(verts_prov));
}

}  // namespace

Polytope extreme_points(const std::vector<OccupancyMeasure>& points, double dedupe_tol,
                        double hull_tol) {
    return extreme_points_impl(points, {}, dedupe_tol, hull_tol);
}

Polytope extreme_points(const std::vector<std::pair<Policy, OccupancyMeasure>>& points,
                        double dedupe_tol, double hull_tol) {
    std::vector<OccupancyMeasure> pts;
    std::vector<std::optional<Policy>> prov;
    pts.reserve(points.size());
    for (const auto& [policy, occ] : points) {
        pts.push_back(occ);
        prov.push_back(policy);
    }
    return extreme_points_impl(std::move(pts), std::move(prov), dedupe_tol, hull_tol);
}

Polytope vertex_polytope(const TabularMdp& mdp, std::uint64_t cap) {
    return extreme_points(enumerate_policy_occupancies(mdp, cap));
}

std::pair<int, double> optimal_vertex(const Polytope& polytope, const Vec& reward) {
    if (reward.size() != polytope.dim())
        throw Error(ErrorCode::dimension_mismatch, "reward dimension mismatch");
    for (double r : reward)
        if (!std::isfinite(r)) throw Error(ErrorCode::invalid_argument, "reward must be finite");
    int best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < polytope.size(); ++v) {
        double value = 0.0;
        for (std::size_t s = 0; s < reward.size(); ++s) value += polytope.vertices()[v][s] * reward[s];
        if (value > best_value + 1e-15) {
            best_value = value;
            best = static_cast<int>(v);
        }
    }
    return {best, best_value};
}

}  // namespace skillgeo
