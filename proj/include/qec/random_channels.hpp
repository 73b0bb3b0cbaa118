// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "qec/chi_matrix.hpp"

namespace qec {

/// Seeded random stream with explicit uniform/normal transforms, so draws are
/// identical across standard library implementations.
class RandomSource {
  public:
    explicit RandomSource(uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; draws are consumed in pairs.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }
    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Width convention for the random-rotation angle distribution N(mu, mu): the
/// second parameter read as a variance (default) or as a standard deviation.
enum class NormalWidth { Variance, StdDev };

/// A rotation exp(-i pi/2 delta n.sigma) with n uniform on the sphere and
/// delta ~ N(mu_delta, mu_delta). Negative delta draws are kept; they flip
/// the rotation sense.
ChiMatrix random_axis_rotation(RandomSource& rng, double mu_delta,
                               NormalWidth width = NormalWidth::Variance);

/// Random CPTP map from three-qubit unitary dynamics: U = exp(-i H t) with H
/// drawn from the Gaussian unitary ensemble, applied to system x |00> and the
/// ancillas traced out. Output is validated against the chi invariants.
ChiMatrix random_cptp(RandomSource& rng, double t);

}  // namespace qec
