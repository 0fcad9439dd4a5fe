#pragma once

#include <vector>

#include "skillgeo/mdp.hpp"

namespace skillgeo {

/// KL divergence in nats with exact zero handling: 0 ln(0/q) = 0, and the
/// result is +infinity whenever q_s = 0 < p_s. No smoothing.
double kl(const OccupancyMeasure& p, const OccupancyMeasure& q);

/// Shannon entropy in nats, 0 ln 0 = 0.
double entropy(const OccupancyMeasure& p);

/// A weighted family of skill state distributions p(S|z) with prior p(Z).
/// The mixture p(S) = sum_z p(z) p(S|z) is computed on construction.
class SkillSet {
  public:
    SkillSet(std::vector<OccupancyMeasure> skills, Vec weights);

    static SkillSet uniform(std::vector<OccupancyMeasure> skills);

    const std::vector<OccupancyMeasure>& skills() const { return skills_; }
    const Vec& weights() const { return weights_; }
    const OccupancyMeasure& mixture() const { return mixture_; }
    std::size_t size() const { return skills_.size(); }

    /// p(z) > 1e-9 marks a skill as learned.
    bool weight_positive(std::size_t z) const { return weights_[z] > 1e-9; }

  private:
    std::vector<OccupancyMeasure> skills_;
    Vec weights_;
    OccupancyMeasure mixture_;
};

/// I(S;Z) = sum_z p(z) KL(p(S|z) || p(S)).
double skill_mutual_information(const SkillSet& ss);

/// I(S;1_z) for the indicator of skill z, computed from the complement
/// distribution p(S|Z!=z) = (p(S) - p(z) p(S|z)) / (1 - p(z)).
/// Returns 0 when p(z) = 1. Throws DegenerateComplement if the complement
/// has an entry below -1e-9.
double indicator_mi(const SkillSet& ss, std::size_t z);

/// Same two-term indicator information for a free (skill, mixture, weight)
/// triple, holding the skill and mixture fixed while p(z) varies.
double indicator_mi_given(const OccupancyMeasure& skill, const OccupancyMeasure& mixture,
                          double pz);

struct LsepinResult {
    double value = 0.0;
    int argmin = 0;  // skill index attaining the min, ties toward lowest index
};

/// min over weight-positive skills of I(S;1_z).
LsepinResult lsepin(const SkillSet& ss);

/// Ordered double sum of pairwise KL divergences over weight-positive skills.
/// +infinity propagates from any support-violating pair.
double klsep(const SkillSet& ss);

}  // namespace skillgeo
