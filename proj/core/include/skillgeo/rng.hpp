#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace skillgeo {

/// Deterministic, platform-stable pseudo-random stream (splitmix64).
/// Substreams derived from (seed, stream) agree between serial and
/// fanned-out execution, which keeps seeded sweeps reproducible.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL) {}

    /// Substream constructor: independent stream per (seed, stream) pair.
    Rng(std::uint64_t seed, std::uint64_t stream) : Rng(mix(seed) ^ mix(stream * 0xd1342543de82ef95ULL + 1)) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

    /// Standard normal via Marsaglia polar method.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

    /// Flat Dirichlet draw of dimension n (normalized exponentials).
    std::vector<double> dirichlet(std::size_t n) {
        std::vector<double> x(n);
        double total = 0.0;
        for (auto& xi : x) {
            double u = uniform();
            if (u <= 0.0) u = 0x1.0p-53;
            xi = -std::log(u);
            total += xi;
        }
        for (auto& xi : x) xi /= total;
        return x;
    }

    /// Sample an index from an unnormalized nonnegative weight vector.
    std::size_t discrete(const std::vector<double>& weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        double u = uniform() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return i;
        }
        return weights.empty() ? 0 : weights.size() - 1;
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace skillgeo
