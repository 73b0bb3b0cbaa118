// SPDX-License-Identifier: Apache-2.0
#include "qec/zrot.hpp"

#include <cmath>
#include <stdexcept>

namespace qec {

ZRotClosedForms zrot_closed_forms(double omega) {
    auto sin2 = [](double x) {
        double s = std::sin(x);
        return s * s;
    };
    ZRotClosedForms f;
    f.r_raw_l1 =
        (42.0 * sin2(omega / 2) + 28.0 * sin2(3 * omega / 2) - 6.0 * sin2(7 * omega / 2)) / 64.0;
    f.r_twirled_l1 = (462.0 * sin2(omega / 2) + 98.0 * sin2(3 * omega / 2) -
                      42.0 * sin2(5 * omega / 2) - 6.0 * sin2(7 * omega / 2)) /
                     512.0;
    double s = std::sin(omega);
    f.chi03_l1 = std::complex<double>(
        0.0, -0.125 * s * s * s * (9.0 * std::cos(2 * omega) + 3.0 * std::cos(4 * omega) + 2.0));
    return f;
}

double zrot_f00(double z) {
    return z * z * (63.0 + z * (-434.0 + z * (1260.0 + z * (-1848.0 + z * (1344.0 - 384.0 * z)))));
}

std::complex<double> zrot_f03(std::complex<double> z) {
    std::complex<double> z2 = z * z;
    return -2.0 * z * z2 * (7.0 + 84.0 * z2 + 192.0 * z2 * z2);
}

double zrot_g00(double z) {
    return z * z * (21.0 + z * (-98.0 + z * (210.0 + z * (-252.0 + z * (168.0 - 48.0 * z)))));
}

std::pair<double, std::complex<double>> zrot_recursion_step(double z00, std::complex<double> z03,
                                                            bool twirled) {
    if (twirled) return {zrot_g00(z00), 0.0};
    return {zrot_f00(z00), zrot_f03(z03)};
}

std::vector<ZRotLevel> zrot_gain_ladder(double omega, int max_level, ZLadderMethod method) {
    if (max_level < 1) throw std::invalid_argument("zrot_gain_ladder: max_level must be >= 1");
    ZRotClosedForms l1 = zrot_closed_forms(omega);
    double d = l1.r_raw_l1;
    double m = -l1.chi03_l1.imag();
    double dt = l1.r_twirled_l1;

    std::vector<ZRotLevel> out;
    out.reserve(max_level);
    for (int level = 1; level <= max_level; ++level) {
        double delta = dt > 0.0 ? d / dt : std::nan("");
        out.push_back(ZRotLevel{level, d, dt, delta, m});
        if (level == max_level) break;
        if (method == ZLadderMethod::Exact) {
            double m2 = m * m, m4 = m2 * m2;
            double next_d =
                d * d * (21.0 + d * (-98.0 + d * (210.0 + d * (-252.0 + d * (168.0 - 48.0 * d))))) +
                m4 * (42.0 + d * (-252.0 + d * (504.0 - 336.0 * d)));
            double next_m = m * m2 * (14.0 + d * (-168.0 + d * (504.0 + d * (-672.0 + 336.0 * d)))) +
                            48.0 * m4 * m2 * m;
            d = next_d;
            m = next_m;
        } else {
            // printed recursion; f00/g00 are self-conjugate so the deficit
            // obeys the same polynomial, and f03 on -i m gives
            // m' = 2 m^3 (7 - 84 m^2 + 192 m^4).
            double m2 = m * m;
            double next_d = zrot_f00(d);
            double next_m = 2.0 * m * m2 * (7.0 - 84.0 * m2 + 192.0 * m2 * m2);
            d = next_d;
            m = next_m;
        }
        dt = zrot_g00(dt);
    }
    return out;
}

}  // namespace qec
