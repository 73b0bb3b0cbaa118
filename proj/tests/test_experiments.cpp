// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "qec/experiments.hpp"

using namespace qec;

namespace {
const LogicalEngine& engine() {
    static const DecoderTable dec = build_min_weight_decoder(steane_code());
    static const LogicalEngine eng(steane_code(), dec);
    return eng;
}
}  // namespace

TEST_CASE("gauss_legendre integrates low-degree polynomials exactly") {
    std::vector<double> x, w;
    gauss_legendre(16, x, w);
    double total = 0.0, quad = 0.0;
    for (int i = 0; i < 16; ++i) {
        total += w[i];
        quad += w[i] * x[i] * x[i];
    }
    CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(quad == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("parallel_for covers every index once, any worker count") {
    for (int workers : {1, 2, 4}) {
        std::vector<int> hits(100, 0);
        parallel_for(100, workers, [&](int64_t i) { hits[i]++; });
        for (int h : hits) CHECK(h == 1);
    }
}

TEST_CASE("axis_deltas: Z axis reproduces the exact ladder") {
    double w = 0.3;
    auto deltas = axis_deltas(engine(), 0.0, 0.0, w, {1, 2});
    auto ladder = zrot_gain_ladder(w, 2, ZLadderMethod::Exact);
    CHECK(deltas[0] == doctest::Approx(ladder[0].delta).epsilon(1e-10));
    CHECK(deltas[1] == doctest::Approx(ladder[1].delta).epsilon(1e-10));
}

TEST_CASE("haar average of an axis-independent gain is that constant") {
    // depolarizing-only noise: rotation angle zero, delta = 1 for every axis
    QuadratureSpec quad{4, 8};
    auto vals = haar_average_gains(engine(), 0.0, {1}, quad, 1, 1e-3);
    CHECK(vals[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("haar average converges: doubling nodes moves the value < 1e-6") {
    double w = 0.5;
    double a = haar_average_gain(engine(), 1, w, {8, 16}, 2);
    double b = haar_average_gain(engine(), 1, w, {16, 32}, 2);
    double c = haar_average_gain(engine(), 1, w, {32, 64}, 2);
    CHECK(std::abs(b - a) < 1e-5);
    CHECK(std::abs(c - b) < 1e-6);
}

TEST_CASE("sweep spec invariants") {
    SweepSpec ok{"rotation-z", {0.1}, {1, 2}, 0, 1, ""};
    CHECK_NOTHROW(ok.validate());
    SweepSpec empty_grid{"rotation-z", {}, {1}, 0, 1, ""};
    CHECK_THROWS_AS(empty_grid.validate(), std::invalid_argument);
    SweepSpec bad_level{"rotation-z", {0.1}, {0}, 0, 1, ""};
    CHECK_THROWS_AS(bad_level.validate(), std::invalid_argument);
    SweepSpec bad_samples{"rotation-z", {0.1}, {1}, 0, 0, ""};
    CHECK_THROWS_AS(bad_samples.validate(), std::invalid_argument);
}

TEST_CASE("haar average is worker-count invariant") {
    QuadratureSpec quad{4, 8};
    double a = haar_average_gain(engine(), 1, 0.5, quad, 1);
    double b = haar_average_gain(engine(), 1, 0.5, quad, 2);
    CHECK(a == b);
}

TEST_CASE("find_threshold: Z-axis delta2/delta1 crossing with postcondition") {
    auto res = find_threshold(engine(), AxisSpec::z(), 1, 2, 1);
    REQUIRE(res.found);
    CHECK(res.bracket_hi - res.bracket_lo <= 1e-4);
    CHECK(res.bracket_lo <= res.omega_star);
    CHECK(res.omega_star <= res.bracket_hi);
    // sign pattern around the crossing
    auto lo = axis_deltas(engine(), 0.0, 0.0, res.omega_star - 1e-3, {1, 2});
    auto hi = axis_deltas(engine(), 0.0, 0.0, res.omega_star + 1e-3, {1, 2});
    CHECK(lo[1] > lo[0]);
    CHECK(hi[1] < hi[0]);

    // the ladder-based evaluator lands on the same crossing
    auto ladder_eval = [](double w) {
        auto lv = zrot_gain_ladder(w, 2, ZLadderMethod::Exact);
        return std::make_pair(lv[0].delta, lv[1].delta);
    };
    auto res2 = find_threshold(ladder_eval, 1, 2, 0.05, 1.2);
    REQUIRE(res2.found);
    CHECK(res2.omega_star == doctest::Approx(res.omega_star).epsilon(1e-3));
}

TEST_CASE("find_threshold reports no crossing on a one-sided interval") {
    auto res = find_threshold(engine(), AxisSpec::z(), 1, 2, 1, {}, 0.01, 0.1);
    CHECK_FALSE(res.found);
}

TEST_CASE("X-axis threshold equals the Z-axis threshold") {
    auto z = find_threshold(engine(), AxisSpec::z(), 1, 2, 1);
    auto x = find_threshold(engine(), AxisSpec::x(), 1, 2, 1);
    REQUIRE(z.found);
    REQUIRE(x.found);
    CHECK(x.omega_star == doctest::Approx(z.omega_star).epsilon(1e-3));
}

TEST_CASE("gain_curve on the Z axis: ladder and engine methods agree at level <= 3") {
    std::vector<double> omegas = {0.2, 0.5};
    auto ladder = gain_curve(engine(), AxisSpec::z(), {1, 2}, omegas, 1, {},
                             ZLadderMethod::Exact);
    auto engine_rows = gain_curve(engine(), AxisSpec::z(), {1, 2}, omegas, 1, {}, std::nullopt);
    REQUIRE(ladder.size() == engine_rows.size());
    for (size_t i = 0; i < ladder.size(); ++i) {
        CHECK(ladder[i].delta == doctest::Approx(engine_rows[i].delta).epsilon(1e-9));
        CHECK(ladder[i].level == engine_rows[i].level);
    }
}

TEST_CASE("ensemble_study: reproducible for fixed seed and worker count") {
    EnsembleOptions opt;
    opt.model = EnsembleModel::RandomCptp;
    opt.samples = 6;
    opt.levels = {1};
    opt.seed = 9;
    opt.workers = 2;
    auto a = ensemble_study(engine(), opt);
    auto b = ensemble_study(engine(), opt);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].delta == b[i].delta);
        CHECK(a[i].sample == b[i].sample);
    }
    // records are ordered by sample
    for (size_t i = 1; i < a.size(); ++i) CHECK(a[i].sample >= a[i - 1].sample);
}

TEST_CASE("ensemble_study rotations: heterogeneous level-2 blocks") {
    EnsembleOptions opt;
    opt.model = EnsembleModel::RandomRotations;
    opt.samples = 3;
    opt.levels = {1, 2};
    opt.seed = 4;
    opt.workers = 1;
    auto recs = ensemble_study(engine(), opt);
    REQUIRE(recs.size() == 6);
    for (const auto& r : recs) {
        CHECK(r.model == "random-rotations");
        CHECK(r.r_phys > 0.0);
        CHECK(std::isfinite(r.delta));
    }
    CHECK_THROWS_AS(
        [&] {
            EnsembleOptions bad = opt;
            bad.levels = {3};
            return ensemble_study(engine(), bad);
        }(),
        std::invalid_argument);
}

TEST_CASE("dep_coherent_sweep: boundary cases") {
    QuadratureSpec quad{4, 8};
    // pure depolarizing budget: omega = 0, twirl is a no-op, delta = 1
    auto rows = dep_coherent_sweep(engine(), {0.004}, 0.003, 1, quad, 1);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].feasible);
    CHECK(rows[0].omega == 0.0);
    CHECK(rows[0].delta_bar == doctest::Approx(1.0).epsilon(1e-10));
    // infeasible p is skipped with a note
    auto infeasible = dep_coherent_sweep(engine(), {0.02}, 0.003, 1, quad, 1);
    CHECK_FALSE(infeasible[0].feasible);
}

TEST_CASE("threshold_sphere covers the grid and tags the poles") {
    auto entries = threshold_sphere(engine(), 3, 4, 1, 2, 2);
    REQUIRE(entries.size() == 12);
    // theta = 0 row is the Z axis
    auto z = find_threshold(engine(), AxisSpec::z(), 1, 2, 1);
    for (int ip = 0; ip < 4; ++ip) {
        CHECK(entries[ip].found);
        CHECK(entries[ip].omega_star == doctest::Approx(z.omega_star).epsilon(1e-3));
    }
}
