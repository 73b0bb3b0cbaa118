// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "qec/channels.hpp"
#include "qec/random_channels.hpp"

using namespace qec;

static double max_abs_diff(const ChiMatrix& a, const ChiMatrix& b) {
    return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

TEST_CASE("unitary_to_chi on I, X, R_Z") {
    CHECK(max_abs_diff(unitary_to_chi(kPauli2[0]), ChiMatrix::identity()) == 0.0);

    ChiMatrix x = unitary_to_chi(kPauli2[1]);
    CHECK(x(1, 1) == complexd(1.0, 0.0));
    CHECK(std::abs(x(0, 0)) == 0.0);

    double w = 0.7;
    ChiMatrix rz = z_rotation(w);
    double c = std::cos(w / 2), s = std::sin(w / 2);
    CHECK(rz(0, 0).real() == doctest::Approx(c * c).epsilon(1e-15));
    CHECK(rz(3, 3).real() == doctest::Approx(s * s).epsilon(1e-15));
    CHECK(rz(0, 3).imag() == doctest::Approx(-c * s).epsilon(1e-15));
    CHECK(rz(0, 3).real() == doctest::Approx(0.0));
    CHECK(std::abs(rz(1, 1)) == 0.0);
    rz.validate();
}

TEST_CASE("unitary_to_chi rejects non-unitary input") {
    Eigen::Matrix2cd m;
    m << 1.0, 0.5, 0.0, 1.0;
    CHECK_THROWS_AS(unitary_to_chi(m), std::invalid_argument);
}

TEST_CASE("rotation_channel special cases") {
    double w = 0.4;
    CHECK(max_abs_diff(rotation_channel({0.0, 0.0, w}), z_rotation(w)) < 1e-16);

    ChiMatrix rx = rotation_channel({M_PI / 2, 0.0, w});
    CHECK(rx(1, 1).real() == doctest::Approx(std::sin(w / 2) * std::sin(w / 2)).epsilon(1e-14));

    CHECK(max_abs_diff(rotation_channel({1.1, 2.2, 0.0}), ChiMatrix::identity()) < 1e-16);
}

TEST_CASE("depolarizing channel") {
    CHECK(max_abs_diff(depolarizing(0.0), ChiMatrix::identity()) == 0.0);
    ChiMatrix full = depolarizing(1.0);
    for (int i = 0; i < 4; ++i) CHECK(full(i, i).real() == doctest::Approx(0.25));
    CHECK(depolarizing(0.01)(0, 0).real() == doctest::Approx(0.9925).epsilon(1e-15));
    CHECK_THROWS_AS(depolarizing(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(depolarizing(1.1), std::invalid_argument);
}

TEST_CASE("compose: identity unit and depolarizing semigroup") {
    ChiMatrix rot = rotation_channel({0.3, 1.0, 0.5});
    CHECK(max_abs_diff(compose(ChiMatrix::identity(), rot), rot) < 1e-15);
    CHECK(max_abs_diff(compose(rot, ChiMatrix::identity()), rot) < 1e-15);

    double p = 0.13, q = 0.08;
    CHECK(max_abs_diff(compose(depolarizing(p), depolarizing(q)),
                       depolarizing(p + q - p * q)) < 1e-15);
}

TEST_CASE("compose is associative") {
    RandomSource rng(5);
    ChiMatrix a = random_cptp(rng, 0.05);
    ChiMatrix b = rotation_channel({0.7, 0.2, 0.9});
    ChiMatrix c = depolarizing(0.02);
    CHECK(max_abs_diff(compose(compose(a, b), c), compose(a, compose(b, c))) < 1e-13);
}

TEST_CASE("twirl zeroes off-diagonals and is idempotent") {
    ChiMatrix rz = z_rotation(0.9);
    ChiMatrix t = twirl(rz);
    double w = 0.9;
    CHECK(t(0, 0).real() == doctest::Approx(std::cos(w / 2) * std::cos(w / 2)));
    CHECK(t(3, 3).real() == doctest::Approx(std::sin(w / 2) * std::sin(w / 2)));
    CHECK(std::abs(t(0, 3)) == 0.0);
    CHECK(max_abs_diff(twirl(t), t) == 0.0);

    // diagonal preserved exactly
    RandomSource rng(11);
    ChiMatrix chi = random_cptp(rng, 0.08);
    ChiMatrix tw = twirl(chi);
    for (int i = 0; i < 4; ++i) CHECK(tw(i, i).real() == chi(i, i).real());
}

TEST_CASE("twirl of a unitary channel is the |c_i|^2 decomposition") {
    RandomSource rng(29);
    for (int k = 0; k < 10; ++k) {
        RotationParams p{rng.uniform(0.0, M_PI), rng.uniform(0.0, 2 * M_PI),
                         rng.uniform(0.0, M_PI)};
        const complexd I(0, 1);
        double nx = std::sin(p.theta) * std::cos(p.phi);
        double ny = std::sin(p.theta) * std::sin(p.phi);
        double nz = std::cos(p.theta);
        Eigen::Matrix2cd u = std::cos(p.omega / 2) * kPauli2[0] +
                             I * std::sin(p.omega / 2) *
                                 (nx * kPauli2[1] + ny * kPauli2[2] + nz * kPauli2[3]);
        ChiMatrix t = twirl(rotation_channel(p));
        for (int i = 0; i < 4; ++i) {
            complexd ci = (kPauli2[i] * u).trace() / 2.0;
            CHECK(t(i, i).real() == doctest::Approx(std::norm(ci)).epsilon(1e-13));
        }
    }
}

TEST_CASE("process infidelity") {
    CHECK(process_infidelity(ChiMatrix::identity()) == 0.0);
    double w = 0.61;
    CHECK(process_infidelity(z_rotation(w)) ==
          doctest::Approx(std::sin(w / 2) * std::sin(w / 2)).epsilon(1e-15));
    CHECK(process_infidelity(depolarizing(0.2)) == doctest::Approx(0.15).epsilon(1e-15));
}

TEST_CASE("calibrate_omega matches the closed-form solve") {
    double p = 1e-4, r = 0.003;
    double w = calibrate_omega(p, r);
    // infidelity of dep(p) after rotation(w): (3 - (1-p)(1+2cos w))/4
    double direct = std::acos(((3.0 - 4.0 * r) / (1.0 - p) - 1.0) / 2.0);
    CHECK(w == doctest::Approx(direct).epsilon(1e-9));
    CHECK(process_infidelity(compose(depolarizing(p), z_rotation(w))) ==
          doctest::Approx(r).epsilon(1e-9));

    // axis independence of the calibration
    CHECK(calibrate_omega(p, r, 1.0, 2.0) == doctest::Approx(w).epsilon(1e-9));

    // boundary: depolarizing alone saturates the budget
    CHECK(calibrate_omega(4.0 * r / 3.0, r) == 0.0);
    // pure rotation inversion
    double target = std::sin(0.25) * std::sin(0.25);
    CHECK(calibrate_omega(0.0, target) == doctest::Approx(0.5).epsilon(1e-9));
    // infeasible
    CHECK_THROWS_AS(calibrate_omega(0.5, 1e-3), std::invalid_argument);
}

TEST_CASE("chi JSON round trip") {
    RandomSource rng(3);
    ChiMatrix chi = random_cptp(rng, 0.07);
    ChiMatrix back = chi_from_json(to_json(chi));
    CHECK(max_abs_diff(chi, back) == 0.0);
    CHECK_THROWS_AS(chi_from_json("[1,2]"), std::invalid_argument);
}

TEST_CASE("validate names the violated invariant") {
    ChiMatrix bad = ChiMatrix::identity();
    bad(0, 0) = 0.5;
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("unit trace"), std::runtime_error);

    ChiMatrix skew = ChiMatrix::identity();
    skew(0, 1) = complexd(0.1, 0.0);
    CHECK_THROWS_WITH_AS(skew.validate(), doctest::Contains("Hermiticity"), std::runtime_error);

    ChiMatrix indef;
    indef(0, 0) = 1.5;
    indef(1, 1) = -0.5;
    CHECK_THROWS_WITH_AS(indef.validate(), doctest::Contains("positive"), std::runtime_error);
}
