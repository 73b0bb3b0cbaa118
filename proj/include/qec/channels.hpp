// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "qec/chi_matrix.hpp"

namespace qec {

/// Rotation axis in polar angles plus magnitude, for the axis-angle unitary
/// U(theta, phi, omega) = cos(omega/2) I + i sin(omega/2) n.sigma with
/// n = (sin t cos p, sin t sin p, cos t). theta = phi = 0 is R_Z(omega).
struct RotationParams {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2pi)
    double omega = 0.0;  // radians
};

/// chi of a unitary channel rho -> U rho U^dagger. Throws if U is not unitary.
ChiMatrix unitary_to_chi(const Eigen::Matrix2cd& u);

/// chi of R_Z(omega) = cos(omega/2) I + i sin(omega/2) Z.
ChiMatrix z_rotation(double omega);

ChiMatrix rotation_channel(const RotationParams& p);

/// chi of rho -> (1-p) rho + (p/2) I, i.e. diag(1-3p/4, p/4, p/4, p/4).
ChiMatrix depolarizing(double p);

/// Channel composition "apply b first, then a", via the superoperator
/// representation. Output is validated; throws on invariant breakdown.
ChiMatrix compose(const ChiMatrix& a, const ChiMatrix& b);

/// Pauli twirl: zeroes every off-diagonal entry. Idempotent.
ChiMatrix twirl(const ChiMatrix& chi);

/// Process infidelity r = 1 - Re chi(0,0).
double process_infidelity(const ChiMatrix& chi);

/// Solves process_infidelity(compose(depolarizing(p), rotation(theta,phi,w)))
/// = r_target for w by bisection on [0, pi], to |dr| <= 1e-12. Throws if the
/// depolarizing part alone already overshoots r_target.
double calibrate_omega(double p, double r_target, double theta = 0.0, double phi = 0.0);

/// Action of the channel on an arbitrary 2x2 operator, straight from the
/// definition E(rho) = sum chi_ij P_i rho P_j.
Eigen::Matrix2cd apply_channel(const ChiMatrix& chi, const Eigen::Matrix2cd& rho);

/// Recover chi from a channel action via the Choi matrix. Inverse of
/// apply_channel for any linear Hermiticity-preserving map.
template <typename Fn>
ChiMatrix chi_from_action(Fn&& action) {
    // J = (Lambda x id)(|Omega><Omega|), chi_ij = v_i^dag J v_j / 4 with
    // v_i the row-major vectorization of P_i.
    Eigen::Matrix4cd j = Eigen::Matrix4cd::Zero();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Eigen::Matrix2cd e = Eigen::Matrix2cd::Zero();
            e(a, b) = 1.0;
            Eigen::Matrix2cd out = action(e);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c)
                    j(r * 2 + a, c * 2 + b) += out(r, c);
        }
    extern const Eigen::Matrix2cd kPauli2[4];
    ChiMatrix chi;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            Eigen::Vector4cd vi, vk;
            vi << kPauli2[i](0, 0), kPauli2[i](0, 1), kPauli2[i](1, 0), kPauli2[i](1, 1);
            vk << kPauli2[k](0, 0), kPauli2[k](0, 1), kPauli2[k](1, 0), kPauli2[k](1, 1);
            chi(i, k) = vi.dot(j * vk) / 4.0;  // Eigen's dot conjugates the left factor
        }
    return chi;
}

/// The 2x2 Pauli matrices I, X, Y, Z.
extern const Eigen::Matrix2cd kPauli2[4];

}  // namespace qec
