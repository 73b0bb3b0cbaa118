// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qec/logical_channel.hpp"
#include "qec/random_channels.hpp"
#include "qec/zrot.hpp"

namespace qec {

/// Rotation-axis selector for experiments: a cardinal axis, explicit polar
/// angles, or the Haar average over all axes.
struct AxisSpec {
    enum class Kind { Z, X, Y, Angles, Haar } kind = Kind::Z;
    double theta = 0.0;
    double phi = 0.0;

    static AxisSpec z() { return {Kind::Z, 0.0, 0.0}; }
    static AxisSpec x() { return {Kind::X, M_PI / 2, 0.0}; }
    static AxisSpec y() { return {Kind::Y, M_PI / 2, M_PI / 2}; }
    static AxisSpec angles(double theta, double phi) { return {Kind::Angles, theta, phi}; }
    static AxisSpec haar() { return {Kind::Haar, 0.0, 0.0}; }
    std::string label() const;
};

/// Gauss-Legendre nodes in cos(theta) crossed with uniform nodes in phi.
struct QuadratureSpec {
    int n_theta = 16;
    int n_phi = 32;
};

/// A reproducible sweep: which model, over which grid, how many samples.
struct SweepSpec {
    std::string model;
    std::vector<double> omegas;
    std::vector<int> levels;
    uint64_t seed = 0;
    int64_t samples = 1;
    std::string out_path;

    /// Throws std::invalid_argument on an empty grid, a level < 1 or a
    /// sample count < 1.
    void validate() const;
};

/// Runs fn(0..n-1) on `workers` threads. Work items must be independent;
/// callers store results by index so output order is deterministic.
void parallel_for(int64_t n, int workers, const std::function<void(int64_t)>& fn);

/// Static round-robin assignment: item i runs on worker i % workers, and each
/// worker processes its items in increasing order. Used when workers own
/// seeded RNG streams, so results are reproducible for a fixed worker count.
void parallel_round_robin(int64_t n, int workers,
                          const std::function<void(int64_t item, int worker)>& fn);

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// delta_l for a pure rotation about one axis, one value per requested level,
/// via the hard-decoder engine recursion. Optionally composes a depolarizing
/// channel of strength p after the rotation on every qubit.
std::vector<double> axis_deltas(const LogicalEngine& engine, double theta, double phi,
                                double omega, const std::vector<int>& levels, double dep_p = 0.0);

/// Haar-averaged delta_l over rotation axes, normalized so a constant
/// integrand averages to itself. One value per requested level.
std::vector<double> haar_average_gains(const LogicalEngine& engine, double omega,
                                       const std::vector<int>& levels, const QuadratureSpec& quad,
                                       int workers, double dep_p = 0.0);
double haar_average_gain(const LogicalEngine& engine, int level, double omega,
                         const QuadratureSpec& quad, int workers, double dep_p = 0.0);

/// Gain curve delta_l(omega) for an axis (engine recursion) or for the exact
/// Z-rotation deficit ladder when the axis is Z and zmethod says so.
std::vector<GainRecord> gain_curve(const LogicalEngine& engine, const AxisSpec& axis,
                                   const std::vector<int>& levels,
                                   const std::vector<double>& omegas, int workers,
                                   const QuadratureSpec& quad = {},
                                   std::optional<ZLadderMethod> zmethod = std::nullopt);

struct ThresholdResult {
    AxisSpec axis;
    int level_lo = 1;
    int level_hi = 2;
    bool found = false;
    double omega_star = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

/// Bisection on g(w) = delta_hi(w) - delta_lo(w) to |interval| <= tol.
/// The evaluator returns (delta_lo, delta_hi) at omega. Scans the interval
/// for a sign change first and reports found = false when there is none.
ThresholdResult find_threshold(const std::function<std::pair<double, double>(double)>& deltas,
                               int level_lo, int level_hi, double omega_lo, double omega_hi,
                               double tol = 1e-4, int scan_points = 24);

/// Threshold for one axis (or the Haar average) between two levels.
ThresholdResult find_threshold(const LogicalEngine& engine, const AxisSpec& axis, int level_lo,
                               int level_hi, int workers, const QuadratureSpec& quad = {},
                               double omega_lo = 0.05, double omega_hi = 1.2);

struct SphereEntry {
    double theta;
    double phi;
    bool found;
    double omega_star;
};

/// Per-axis threshold map on an n_theta x n_phi lattice (theta includes both
/// poles, phi uniform in [0, 2pi)).
std::vector<SphereEntry> threshold_sphere(const LogicalEngine& engine, int n_theta, int n_phi,
                                          int level_lo, int level_hi, int workers);

struct DepSweepRow {
    double p;
    double omega;       // calibrated so total physical infidelity = r_target
    double delta_bar;   // Haar-averaged gain at the given level
    bool feasible;
};

/// Fixed-total-infidelity sweep over depolarizing strengths: for each p the
/// rotation angle is calibrated so the per-qubit infidelity equals r_target,
/// and the Haar-averaged gain is computed at the given level.
std::vector<DepSweepRow> dep_coherent_sweep(const LogicalEngine& engine,
                                            const std::vector<double>& p_grid, double r_target,
                                            int level, const QuadratureSpec& quad, int workers);

enum class EnsembleModel { RandomRotations, RandomCptp };

struct EnsembleOptions {
    EnsembleModel model = EnsembleModel::RandomCptp;
    int64_t samples = 2000;
    std::vector<int> levels = {1, 2};
    uint64_t seed = 1;
    int workers = 1;
    // log-uniform noise-strength ranges, per model
    double mu_delta_min = 1e-3, mu_delta_max = 1e-1;  // rotations
    double t_min = 1e-3, t_max = 1e-1;                // cptp
    NormalWidth width = NormalWidth::StdDev;
};

/// Per-sample gain records for the random-noise ensembles. Rotations draw an
/// independent rotation for every physical qubit (7^level of them); CPTP
/// draws one map per sample, applied i.i.d. Records are ordered by (sample,
/// level).
std::vector<GainRecord> ensemble_study(const LogicalEngine& engine, const EnsembleOptions& opt);

}  // namespace qec
