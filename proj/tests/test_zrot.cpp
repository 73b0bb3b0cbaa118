// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "qec/zrot.hpp"

using namespace qec;

TEST_CASE("closed forms at omega = 0 and the printed trig identities") {
    auto zero = zrot_closed_forms(0.0);
    CHECK(zero.r_raw_l1 == 0.0);
    CHECK(zero.r_twirled_l1 == 0.0);
    CHECK(std::abs(zero.chi03_l1) == 0.0);

    for (double w : {0.1, 0.5, 1.0, 1.4}) {
        auto f = zrot_closed_forms(w);
        double raw_printed =
            (32 - 21 * std::cos(w) - 14 * std::cos(3 * w) + 3 * std::cos(7 * w)) / 64.0;
        double tw_printed = (256 - 231 * std::cos(w) - 49 * std::cos(3 * w) +
                             21 * std::cos(5 * w) + 3 * std::cos(7 * w)) /
                            512.0;
        CHECK(f.r_raw_l1 == doctest::Approx(raw_printed).epsilon(1e-13));
        CHECK(f.r_twirled_l1 == doctest::Approx(tw_printed).epsilon(1e-13));
        double s = std::sin(w);
        CHECK(f.chi03_l1.imag() ==
              doctest::Approx(-0.125 * s * s * s *
                              (9 * std::cos(2 * w) + 3 * std::cos(4 * w) + 2))
                  .epsilon(1e-13));
        CHECK(f.chi03_l1.real() == 0.0);
    }
}

TEST_CASE("small-angle series: 63 (w/2)^4 and 21 (w/2)^4 leading terms") {
    for (double w : {1e-2, 1e-3}) {
        auto f = zrot_closed_forms(w);
        double x = std::pow(w / 2, 4);
        CHECK(f.r_raw_l1 / x == doctest::Approx(63.0).epsilon(1e-3));
        CHECK(f.r_twirled_l1 / x == doctest::Approx(21.0).epsilon(1e-3));
    }
}

TEST_CASE("recursion polynomials: fixed points and self-conjugacy") {
    CHECK(zrot_f00(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(zrot_g00(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(zrot_f00(0.0) == 0.0);
    CHECK(std::abs(zrot_f03(0.0)) == 0.0);

    // 1 - f(1-d) = f(d): the deficit recursion reuses the printed coefficients
    for (double d : {0.001, 0.05, 0.3, 0.8}) {
        CHECK(1.0 - zrot_f00(1.0 - d) == doctest::Approx(zrot_f00(d)).epsilon(1e-10));
        CHECK(1.0 - zrot_g00(1.0 - d) == doctest::Approx(zrot_g00(d)).epsilon(1e-10));
    }
}

TEST_CASE("recursion step applies the printed polynomials") {
    auto [z00, z03] = zrot_recursion_step(1.0, 0.0, false);
    CHECK(z00 == doctest::Approx(1.0));
    CHECK(std::abs(z03) == 0.0);

    std::complex<double> m(0.0, -0.01);
    auto [raw00, raw03] = zrot_recursion_step(0.99, m, false);
    CHECK(raw00 == doctest::Approx(zrot_f00(0.99)).epsilon(1e-15));
    CHECK(raw03.imag() == doctest::Approx(zrot_f03(m).imag()).epsilon(1e-15));
    auto [tw00, tw03] = zrot_recursion_step(0.99, m, true);
    CHECK(tw00 == doctest::Approx(zrot_g00(0.99)).epsilon(1e-15));
    CHECK(std::abs(tw03) == 0.0);
}

TEST_CASE("leading-order recursion: raw deficit keeps the 63 coefficient") {
    // d' = f00(d) ~ 63 d^2 for small d
    double w = 1e-3;
    double d1 = 63.0 * std::pow(w / 2, 4);
    auto ladder = zrot_gain_ladder(w, 2, ZLadderMethod::LeadingOrder);
    CHECK(ladder[1].r_raw == doctest::Approx(63.0 * 63.0 * std::pow(w / 2, 8)).epsilon(1e-2));
    CHECK(ladder[1].r_raw == doctest::Approx(zrot_f00(d1)).epsilon(1e-3));
}

TEST_CASE("exact ladder: twirled part is the g recursion, raw decoheres to it") {
    double w = 0.1;
    auto exact = zrot_gain_ladder(w, 4, ZLadderMethod::Exact);
    auto lead = zrot_gain_ladder(w, 4, ZLadderMethod::LeadingOrder);
    // identical seeds at level 1
    CHECK(exact[0].r_raw == lead[0].r_raw);
    CHECK(exact[0].r_twirled == lead[0].r_twirled);
    // twirled ladders agree at every level (g00 is exact)
    for (int l = 0; l < 4; ++l)
        CHECK(exact[l].r_twirled == doctest::Approx(lead[l].r_twirled).epsilon(1e-14));
    // the raw ladders diverge at level >= 2: the leading-order recursion
    // keeps the rank-1 coupling, the exact one decoheres toward the twirled map
    CHECK(exact[1].r_raw < lead[1].r_raw);
    CHECK(exact[1].r_raw == doctest::Approx(21.0 * exact[0].r_raw * exact[0].r_raw).epsilon(0.05));
    CHECK(lead[1].r_raw == doctest::Approx(63.0 * lead[0].r_raw * lead[0].r_raw).epsilon(0.05));

    // exact off-diagonal recursion: m' ~ m^3 (14 - 168 d)
    double m1 = exact[0].m_offdiag;
    CHECK(exact[1].m_offdiag ==
          doctest::Approx(m1 * m1 * m1 * (14.0 - 168.0 * exact[0].r_raw)).epsilon(1e-3));
}

TEST_CASE("deficit ladders stay finite deep into the recursion") {
    auto ladder = zrot_gain_ladder(M_PI / 20, 8, ZLadderMethod::Exact);
    for (const auto& lv : ladder) {
        CHECK(std::isfinite(lv.r_raw));
        CHECK(lv.r_raw >= 0.0);
        CHECK(lv.r_twirled > 0.0);
    }
    // doubly-exponential suppression: deficits square from level to level
    CHECK(ladder[7].r_raw < 1e-100);
    CHECK(ladder[7].r_raw > 0.0);
}
