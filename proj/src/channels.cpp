// SPDX-License-Identifier: Apache-2.0
#include "qec/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace qec {

static Eigen::Matrix2cd make_pauli(int i) {
    Eigen::Matrix2cd m;
    const complexd I(0, 1);
    switch (i) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, -I, I, 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

const Eigen::Matrix2cd kPauli2[4] = {make_pauli(0), make_pauli(1), make_pauli(2), make_pauli(3)};

ChiMatrix unitary_to_chi(const Eigen::Matrix2cd& u) {
    double err = (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
    if (err > 1e-10)
        throw std::invalid_argument("unitary_to_chi: input is not unitary (err " +
                                    std::to_string(err) + ")");
    // U = sum_i c_i P_i with c_i = tr(P_i U)/2; chi = c c^dagger.
    Eigen::Vector4cd c;
    for (int i = 0; i < 4; ++i) c(i) = (kPauli2[i] * u).trace() / 2.0;
    return ChiMatrix((c * c.adjoint()).eval());
}

ChiMatrix z_rotation(double omega) {
    const complexd I(0, 1);
    Eigen::Matrix2cd u = std::cos(omega / 2) * kPauli2[0] + I * std::sin(omega / 2) * kPauli2[3];
    return unitary_to_chi(u);
}

ChiMatrix rotation_channel(const RotationParams& p) {
    const complexd I(0, 1);
    double nx = std::sin(p.theta) * std::cos(p.phi);
    double ny = std::sin(p.theta) * std::sin(p.phi);
    double nz = std::cos(p.theta);
    Eigen::Matrix2cd axis = nx * kPauli2[1] + ny * kPauli2[2] + nz * kPauli2[3];
    Eigen::Matrix2cd u = std::cos(p.omega / 2) * kPauli2[0] + I * std::sin(p.omega / 2) * axis;
    return unitary_to_chi(u);
}

ChiMatrix depolarizing(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("depolarizing: p out of [0,1]");
    ChiMatrix chi;
    chi(0, 0) = 1.0 - 0.75 * p;
    chi(1, 1) = chi(2, 2) = chi(3, 3) = 0.25 * p;
    return chi;
}

Eigen::Matrix2cd apply_channel(const ChiMatrix& chi, const Eigen::Matrix2cd& rho) {
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (chi(i, j) == complexd(0, 0)) continue;
            out += chi(i, j) * (kPauli2[i] * rho * kPauli2[j]);
        }
    return out;
}

ChiMatrix compose(const ChiMatrix& a, const ChiMatrix& b) {
    ChiMatrix out = chi_from_action([&](const Eigen::Matrix2cd& rho) {
        return apply_channel(a, apply_channel(b, rho));
    }).hermitized();
    out.validate(ChiMatrix::kDefaultTol, "compose");
    return out;
}

ChiMatrix twirl(const ChiMatrix& chi) {
    ChiMatrix out;
    for (int i = 0; i < 4; ++i) out(i, i) = chi(i, i).real();
    return out;
}

double process_infidelity(const ChiMatrix& chi) {
    return 1.0 - chi(0, 0).real();
}

double calibrate_omega(double p, double r_target, double theta, double phi) {
    ChiMatrix dep = depolarizing(p);
    auto infid = [&](double omega) {
        return process_infidelity(compose(dep, rotation_channel({theta, phi, omega})));
    };
    double r0 = infid(0.0);
    if (r0 > r_target + 1e-15)
        throw std::invalid_argument("calibrate_omega: depolarizing part alone exceeds r_target");
    if (std::abs(r0 - r_target) <= 1e-12) return 0.0;
    double lo = 0.0, hi = M_PI;
    if (infid(hi) < r_target)
        throw std::invalid_argument("calibrate_omega: r_target unreachable at omega = pi");
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double r = infid(mid);
        if (std::abs(r - r_target) <= 1e-12) return mid;
        (r < r_target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace qec
