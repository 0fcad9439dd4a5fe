#include "skillgeo/divergences.hpp"

#include <cmath>
#include <limits>

#include "skillgeo/errors.hpp"

namespace skillgeo {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double kl(const OccupancyMeasure& p, const OccupancyMeasure& q) {
    if (p.size() != q.size()) throw Error(ErrorCode::dimension_mismatch, "kl dimension mismatch");
    double sum = 0.0;
    for (std::size_t s = 0; s < p.size(); ++s) {
        double ps = p[s];
        if (ps == 0.0) continue;
        double qs = q[s];
        if (qs == 0.0) return kInf;
        sum += ps * std::log(ps / qs);
    }
    return sum;
}

double entropy(const OccupancyMeasure& p) {
    double h = 0.0;
    for (std::size_t s = 0; s < p.size(); ++s) {
        double ps = p[s];
        if (ps > 0.0) h -= ps * std::log(ps);
    }
    return h;
}

SkillSet::SkillSet(std::vector<OccupancyMeasure> skills, Vec weights)
    : skills_(std::move(skills)),
      weights_(std::move(weights)),
      mixture_([&] {
          if (skills_.empty())
              throw Error(ErrorCode::invalid_argument, "skill set must be nonempty");
          if (weights_.size() != skills_.size())
              throw Error(ErrorCode::invalid_argument, "weights length mismatch");
          double total = 0.0;
          for (double w : weights_) {
              if (w < -1e-12)
                  throw Error(ErrorCode::invalid_argument, "skill weights must be nonnegative");
              total += w;
          }
          if (std::abs(total - 1.0) > 1e-9)
              throw Error(ErrorCode::invalid_argument, "skill weights must sum to 1");
          bool any = false;
          for (double w : weights_)
              if (w > 1e-9) any = true;
          if (!any) throw Error(ErrorCode::invalid_argument, "no skill has positive weight");
          const std::size_t d = skills_.front().size();
          Vec mix(d, 0.0);
          for (std::size_t z = 0; z < skills_.size(); ++z) {
              if (skills_[z].size() != d)
                  throw Error(ErrorCode::dimension_mismatch, "skill dimension mismatch");
              for (std::size_t s = 0; s < d; ++s) mix[s] += weights_[z] * skills_[z][s];
          }
          return OccupancyMeasure(std::move(mix));
      }()) {}

SkillSet SkillSet::uniform(std::vector<OccupancyMeasure> skills) {
    Vec w(skills.size(), 1.0 / static_cast<double>(skills.size()));
    return SkillSet(std::move(skills), std::move(w));
}

double skill_mutual_information(const SkillSet& ss) {
    double mi = 0.0;
    for (std::size_t z = 0; z < ss.size(); ++z) {
        double w = ss.weights()[z];
        if (w <= 1e-9) continue;
        mi += w * kl(ss.skills()[z], ss.mixture());
    }
    return mi;
}

double indicator_mi_given(const OccupancyMeasure& skill, const OccupancyMeasure& mixture,
                          double pz) {
    if (pz <= 0.0 || pz > 1.0)
        throw Error(ErrorCode::invalid_argument, "indicator weight must lie in (0, 1]");
    if (pz >= 1.0 - 1e-15) return 0.0;

    Vec comp(mixture.size());
    for (std::size_t s = 0; s < mixture.size(); ++s) {
        double c = (mixture[s] - pz * skill[s]) / (1.0 - pz);
        if (c < -1e-9)
            throw Error(ErrorCode::degenerate_complement,
                        "complement distribution entry below -1e-9; inconsistent skill set");
        comp[s] = c < 0.0 ? 0.0 : c;
    }
    OccupancyMeasure complement{std::move(comp)};
    return pz * kl(skill, mixture) + (1.0 - pz) * kl(complement, mixture);
}

double indicator_mi(const SkillSet& ss, std::size_t z) {
    if (z >= ss.size()) throw Error(ErrorCode::invalid_argument, "skill index out of range");
    return indicator_mi_given(ss.skills()[z], ss.mixture(), ss.weights()[z]);
}

LsepinResult lsepin(const SkillSet& ss) {
    LsepinResult out;
    out.value = kInf;
    out.argmin = -1;
    for (std::size_t z = 0; z < ss.size(); ++z) {
        if (!ss.weight_positive(z)) continue;
        double v = indicator_mi(ss, z);
        if (v < out.value - 1e-15 || out.argmin < 0) {
            out.value = v;
            out.argmin = static_cast<int>(z);
        }
    }
    return out;
}

double klsep(const SkillSet& ss) {
    double sum = 0.0;
    for (std::size_t i = 0; i < ss.size(); ++i) {
        if (!ss.weight_positive(i)) continue;
        for (std::size_t j = 0; j < ss.size(); ++j) {
            if (i == j || !ss.weight_positive(j)) continue;
            double d = kl(ss.skills()[i], ss.skills()[j]);
            if (std::isinf(d)) return kInf;
            sum += d;
        }
    }
    return sum;
}

}  // namespace skillgeo
