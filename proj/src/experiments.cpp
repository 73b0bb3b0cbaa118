// SPDX-License-Identifier: Apache-2.0
#include "qec/experiments.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "qec/channels.hpp"

namespace qec {

void SweepSpec::validate() const {
    if (omegas.empty()) throw std::invalid_argument("SweepSpec: empty parameter grid");
    if (levels.empty()) throw std::invalid_argument("SweepSpec: empty level list");
    for (int l : levels)
        if (l < 1) throw std::invalid_argument("SweepSpec: levels must be >= 1");
    if (samples < 1) throw std::invalid_argument("SweepSpec: sample count must be >= 1");
}

std::string AxisSpec::label() const {
    switch (kind) {
        case Kind::Z: return "z";
        case Kind::X: return "x";
        case Kind::Y: return "y";
        case Kind::Haar: return "haar";
        default: return std::to_string(theta) + "," + std::to_string(phi);
    }
}

void parallel_for(int64_t n, int workers, const std::function<void(int64_t)>& fn) {
    if (workers <= 1 || n <= 1) {
        for (int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int64_t> next{0};
    auto run = [&] {
        for (;;) {
            int64_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

void parallel_round_robin(int64_t n, int workers,
                          const std::function<void(int64_t, int)>& fn) {
    if (workers <= 1) {
        for (int64_t i = 0; i < n; ++i) fn(i, 0);
        return;
    }
    auto run = [&](int w) {
        for (int64_t i = w; i < n; i += workers) fn(i, w);
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& t : pool) t.join();
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton from the Chebyshev estimate.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

namespace {

struct LevelGain {
    double r_raw;
    double r_twirled;
    double delta() const { return r_twirled > 0.0 ? r_raw / r_twirled : std::nan(""); }
};

// Homogeneous engine ladder for one physical channel: (r_raw, r_twirled) per
// requested level.
std::vector<LevelGain> channel_gains(const LogicalEngine& engine, const ChiMatrix& phys,
                                     const std::vector<int>& levels) {
    int max_level = 1;
    for (int l : levels) {
        if (l < 1) throw std::invalid_argument("channel_gains: level must be >= 1");
        max_level = std::max(max_level, l);
    }
    std::vector<LevelGain> per_level(max_level + 1);
    NoiseAssignment raw = NoiseAssignment::uniform(phys);
    NoiseAssignment tw = NoiseAssignment::uniform(twirl(phys));
    for (int level = 1; level <= max_level; ++level) {
        ChiMatrix raw_chi = engine.logical_chi(raw);
        ChiMatrix tw_chi = engine.logical_chi(tw);
        per_level[level] = {process_infidelity(raw_chi), process_infidelity(tw_chi)};
        raw = NoiseAssignment::uniform(raw_chi);
        tw = NoiseAssignment::uniform(tw_chi);
    }
    std::vector<LevelGain> out;
    out.reserve(levels.size());
    for (int l : levels) out.push_back(per_level[l]);
    return out;
}

}  // namespace

std::vector<double> axis_deltas(const LogicalEngine& engine, double theta, double phi,
                                double omega, const std::vector<int>& levels, double dep_p) {
    ChiMatrix phys = rotation_channel({theta, phi, omega});
    if (dep_p > 0.0) phys = compose(depolarizing(dep_p), phys);
    auto gains = channel_gains(engine, phys, levels);
    std::vector<double> out;
    out.reserve(gains.size());
    for (const auto& g : gains) out.push_back(g.delta());
    return out;
}

std::vector<double> haar_average_gains(const LogicalEngine& engine, double omega,
                                       const std::vector<int>& levels, const QuadratureSpec& quad,
                                       int workers, double dep_p) {
    std::vector<double> nodes, weights;
    gauss_legendre(quad.n_theta, nodes, weights);
    int n_axes = quad.n_theta * quad.n_phi;
    std::vector<std::vector<double>> per_axis(n_axes);
    parallel_for(n_axes, workers, [&](int64_t idx) {
        int it = static_cast<int>(idx) / quad.n_phi;
        int ip = static_cast<int>(idx) % quad.n_phi;
        double theta = std::acos(nodes[it]);
        double phi = 2.0 * M_PI * ip / quad.n_phi;
        per_axis[idx] = axis_deltas(engine, theta, phi, omega, levels, dep_p);
    });
    // 1/(4 pi) normalization: GL weights sum to 2 in cos(theta), uniform phi
    // nodes carry 2 pi / n_phi, so each axis weight is w / (2 n_phi).
    std::vector<double> out(levels.size(), 0.0);
    for (int idx = 0; idx < n_axes; ++idx) {
        double w = weights[idx / quad.n_phi] / (2.0 * quad.n_phi);
        for (size_t k = 0; k < levels.size(); ++k) out[k] += w * per_axis[idx][k];
    }
    return out;
}

double haar_average_gain(const LogicalEngine& engine, int level, double omega,
                         const QuadratureSpec& quad, int workers, double dep_p) {
    return haar_average_gains(engine, omega, {level}, quad, workers, dep_p)[0];
}

std::vector<GainRecord> gain_curve(const LogicalEngine& engine, const AxisSpec& axis,
                                   const std::vector<int>& levels,
                                   const std::vector<double>& omegas, int workers,
                                   const QuadratureSpec& quad,
                                   std::optional<ZLadderMethod> zmethod) {
    std::vector<GainRecord> out;
    int max_level = 1;
    for (int l : levels) max_level = std::max(max_level, l);

    if (axis.kind == AxisSpec::Kind::Z && zmethod) {
        for (double omega : omegas) {
            auto ladder = zrot_gain_ladder(omega, max_level, *zmethod);
            for (int l : levels) {
                const ZRotLevel& lv = ladder[l - 1];
                GainRecord rec;
                rec.model = "rotation-z";
                rec.param = omega;
                rec.r_phys = process_infidelity(z_rotation(omega));
                rec.level = l;
                rec.r_raw = lv.r_raw;
                rec.r_twirled = lv.r_twirled;
                rec.delta = lv.delta;
                rec.classification = classify_gain(lv.r_raw, lv.r_twirled);
                out.push_back(rec);
            }
        }
        return out;
    }

    if (axis.kind == AxisSpec::Kind::Haar) {
        for (double omega : omegas) {
            auto deltas = haar_average_gains(engine, omega, levels, quad, workers);
            for (size_t k = 0; k < levels.size(); ++k) {
                GainRecord rec;
                rec.model = "rotation-haar";
                rec.param = omega;
                rec.r_phys = process_infidelity(rotation_channel({0.0, 0.0, omega}));
                rec.level = levels[k];
                rec.delta = deltas[k];
                rec.classification = deltas[k] > 1.0 ? GainClass::Gain : GainClass::Loss;
                out.push_back(rec);
            }
        }
        return out;
    }

    std::vector<std::vector<LevelGain>> gains(omegas.size());
    parallel_for(static_cast<int64_t>(omegas.size()), workers, [&](int64_t i) {
        ChiMatrix phys = rotation_channel({axis.theta, axis.phi, omegas[i]});
        gains[i] = channel_gains(engine, phys, levels);
    });
    for (size_t i = 0; i < omegas.size(); ++i) {
        for (size_t k = 0; k < levels.size(); ++k) {
            GainRecord rec;
            rec.model = "rotation-" + axis.label();
            rec.param = omegas[i];
            rec.r_phys = process_infidelity(rotation_channel({axis.theta, axis.phi, omegas[i]}));
            rec.level = levels[k];
            rec.r_raw = gains[i][k].r_raw;
            rec.r_twirled = gains[i][k].r_twirled;
            rec.delta = gains[i][k].delta();
            rec.classification = classify_gain(rec.r_raw, rec.r_twirled);
            out.push_back(rec);
        }
    }
    return out;
}

ThresholdResult find_threshold(const std::function<std::pair<double, double>(double)>& deltas,
                               int level_lo, int level_hi, double omega_lo, double omega_hi,
                               double tol, int scan_points) {
    ThresholdResult res;
    res.level_lo = level_lo;
    res.level_hi = level_hi;
    auto gap = [&](double w) {
        auto [dlo, dhi] = deltas(w);
        return dhi - dlo;
    };
    // locate a sign change on a coarse scan
    double lo = omega_lo, hi = omega_hi;
    double glo = gap(lo);
    bool bracketed = false;
    for (int i = 1; i <= scan_points; ++i) {
        double w = omega_lo + (omega_hi - omega_lo) * i / scan_points;
        double gw = gap(w);
        if ((glo > 0.0 && gw <= 0.0) || (glo < 0.0 && gw >= 0.0)) {
            hi = w;
            lo = omega_lo + (omega_hi - omega_lo) * (i - 1) / scan_points;
            bracketed = true;
            break;
        }
        glo = gw;
    }
    if (!bracketed) {
        res.found = false;
        return res;
    }
    double flo = gap(lo);
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        double fmid = gap(mid);
        if ((flo > 0.0) == (fmid > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    res.found = true;
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    res.omega_star = 0.5 * (lo + hi);
    return res;
}

ThresholdResult find_threshold(const LogicalEngine& engine, const AxisSpec& axis, int level_lo,
                               int level_hi, int workers, const QuadratureSpec& quad,
                               double omega_lo, double omega_hi) {
    std::vector<int> levels = {level_lo, level_hi};
    std::function<std::pair<double, double>(double)> eval;
    if (axis.kind == AxisSpec::Kind::Haar) {
        eval = [&engine, levels, quad, workers](double w) {
            auto d = haar_average_gains(engine, w, levels, quad, workers);
            return std::make_pair(d[0], d[1]);
        };
    } else {
        AxisSpec ax = axis;
        eval = [&engine, ax, levels](double w) {
            auto d = axis_deltas(engine, ax.theta, ax.phi, w, levels);
            return std::make_pair(d[0], d[1]);
        };
    }
    ThresholdResult res = find_threshold(eval, level_lo, level_hi, omega_lo, omega_hi);
    res.axis = axis;
    return res;
}

std::vector<SphereEntry> threshold_sphere(const LogicalEngine& engine, int n_theta, int n_phi,
                                          int level_lo, int level_hi, int workers) {
    if (n_theta < 2 || n_phi < 1) throw std::invalid_argument("threshold_sphere: grid too small");
    int n = n_theta * n_phi;
    std::vector<SphereEntry> out(n);
    parallel_for(n, workers, [&](int64_t idx) {
        int it = static_cast<int>(idx) / n_phi;
        int ip = static_cast<int>(idx) % n_phi;
        double theta = M_PI * it / (n_theta - 1);
        double phi = 2.0 * M_PI * ip / n_phi;
        auto res = find_threshold(engine, AxisSpec::angles(theta, phi), level_lo, level_hi, 1);
        out[idx] = SphereEntry{theta, phi, res.found, res.found ? res.omega_star : 0.0};
    });
    return out;
}

std::vector<DepSweepRow> dep_coherent_sweep(const LogicalEngine& engine,
                                            const std::vector<double>& p_grid, double r_target,
                                            int level, const QuadratureSpec& quad, int workers) {
    std::vector<DepSweepRow> out;
    for (double p : p_grid) {
        DepSweepRow row{p, 0.0, 0.0, true};
        try {
            row.omega = calibrate_omega(p, r_target);
        } catch (const std::invalid_argument&) {
            row.feasible = false;
            out.push_back(row);
            continue;
        }
        row.delta_bar = haar_average_gain(engine, level, row.omega, quad, workers, p);
        out.push_back(row);
    }
    return out;
}

std::vector<GainRecord> ensemble_study(const LogicalEngine& engine, const EnsembleOptions& opt) {
    if (opt.samples < 1) throw std::invalid_argument("ensemble_study: samples must be >= 1");
    int max_level = 1;
    for (int l : opt.levels) max_level = std::max(max_level, l);
    if (max_level > 2)
        throw std::invalid_argument("ensemble_study: levels above 2 are not supported");

    std::vector<std::vector<GainRecord>> per_sample(opt.samples);
    int workers = std::max(1, opt.workers);
    // Per-worker RNG streams (seed + worker index) with static round-robin
    // sample assignment: reproducible for a fixed worker count.
    auto run_worker = [&](int w) {
        RandomSource rng(opt.seed + static_cast<uint64_t>(w));
        for (int64_t i = w; i < opt.samples; i += workers) {
            std::vector<GainRecord> recs;
            if (opt.model == EnsembleModel::RandomRotations) {
                double mu =
                    std::exp(rng.uniform(std::log(opt.mu_delta_min), std::log(opt.mu_delta_max)));
                // one fixed random axis per sample; every physical qubit of
                // the deepest code draws its own angle about it
                double axis_theta = std::acos(rng.uniform(-1.0, 1.0));
                double axis_phi = rng.uniform(0.0, 2.0 * M_PI);
                double stddev = opt.width == NormalWidth::Variance ? std::sqrt(mu) : mu;
                int n_blocks = max_level == 1 ? 1 : 7;
                std::vector<NoiseAssignment> blocks(n_blocks);
                for (auto& b : blocks)
                    for (int q = 0; q < 7; ++q) {
                        double delta = rng.normal(mu, stddev);
                        b.per_qubit[q] =
                            rotation_channel({axis_theta, axis_phi, -M_PI * delta});
                    }
                for (int level : opt.levels) {
                    std::vector<NoiseAssignment> sub(blocks.begin(),
                                                     blocks.begin() + (level == 1 ? 1 : 7));
                    GainRecord rec = gain_delta(engine, sub, level);
                    rec.model = "random-rotations";
                    rec.param = mu;
                    rec.seed = opt.seed;
                    rec.sample = i;
                    recs.push_back(rec);
                }
            } else {
                double t = std::exp(rng.uniform(std::log(opt.t_min), std::log(opt.t_max)));
                ChiMatrix chi = random_cptp(rng, t);
                NoiseAssignment block = NoiseAssignment::uniform(chi);
                for (int level : opt.levels) {
                    std::vector<NoiseAssignment> blocks(level == 1 ? 1 : 7, block);
                    GainRecord rec = gain_delta(engine, blocks, level);
                    rec.model = "random-cptp";
                    rec.param = t;
                    rec.seed = opt.seed;
                    rec.sample = i;
                    recs.push_back(rec);
                }
            }
            per_sample[i] = std::move(recs);
        }
    };
    if (workers <= 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 1; w < workers; ++w) pool.emplace_back(run_worker, w);
        run_worker(0);
        for (auto& t : pool) t.join();
    }

    std::vector<GainRecord> out;
    out.reserve(per_sample.size() * opt.levels.size());
    for (auto& recs : per_sample)
        for (auto& r : recs) out.push_back(std::move(r));
    return out;
}

}  // namespace qec
