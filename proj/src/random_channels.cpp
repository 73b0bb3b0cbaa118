// SPDX-License-Identifier: Apache-2.0
#include "qec/random_channels.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "qec/channels.hpp"

namespace qec {

ChiMatrix random_axis_rotation(RandomSource& rng, double mu_delta, NormalWidth width) {
    double u = rng.uniform(-1.0, 1.0);  // cos(theta), uniform on the sphere
    double phi = rng.uniform(0.0, 2.0 * M_PI);
    double stddev = width == NormalWidth::Variance ? std::sqrt(mu_delta) : mu_delta;
    double delta = rng.normal(mu_delta, stddev);
    RotationParams p;
    p.theta = std::acos(u);
    p.phi = phi;
    // exp(-i pi/2 delta n.sigma) = cos(omega/2) I + i sin(omega/2) n.sigma
    // with omega = -pi delta.
    p.omega = -M_PI * delta;
    return rotation_channel(p);
}

ChiMatrix random_cptp(RandomSource& rng, double t) {
    // GUE draw: real N(0,1) diagonal, off-diagonal re/im N(0, 1/sqrt(2)).
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(8, 8);
    const double s = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < 8; ++i) {
        h(i, i) = rng.normal();
        for (int j = i + 1; j < 8; ++j) {
            complexd v(rng.normal(0.0, s), rng.normal(0.0, s));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd phases(8);
    for (int i = 0; i < 8; ++i)
        phases(i) = std::exp(complexd(0.0, -es.eigenvalues()(i) * t));
    Eigen::MatrixXcd u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();

    // System is the first tensor factor, ancillas start in |00>.
    auto action = [&](const Eigen::Matrix2cd& rho) {
        Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(8, 8);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                big(a * 4, b * 4) = rho(a, b);
        Eigen::MatrixXcd out = u * big * u.adjoint();
        Eigen::Matrix2cd reduced = Eigen::Matrix2cd::Zero();
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int anc = 0; anc < 4; ++anc)
                    reduced(a, b) += out(a * 4 + anc, b * 4 + anc);
        return reduced;
    };
    ChiMatrix chi = chi_from_action(action).hermitized();
    chi.validate(ChiMatrix::kDefaultTol, "random_cptp");
    return chi;
}

}  // namespace qec
