// SPDX-License-Identifier: Apache-2.0
//
// rcgain: exact logical-channel calculations for the concatenated Steane code
// under coherent and stochastic noise, with and without Pauli twirling.
// Subcommands cover the verification suite, gain curves, crossing-angle
// searches, Haar averages, fixed-infidelity depolarizing sweeps, per-axis
// threshold maps, and random-noise ensembles. All outputs are CSV plus a JSON
// manifest; identical configuration and seed give byte-identical CSV.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qec/experiments.hpp"
#include "qec/io.hpp"
#include "qec/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;

struct CommonOpts {
    uint64_t seed = 1;
    int workers = 1;
    std::string out_dir = "out";
    bool degrees = false;
    bool paper_scale = false;
    std::string config_path;
};

double to_radians(const CommonOpts& c, double angle) {
    return c.degrees ? angle * M_PI / 180.0 : angle;
}

qec::AxisSpec parse_axis(const std::string& text, const CommonOpts& c) {
    if (text == "z") return qec::AxisSpec::z();
    if (text == "x") return qec::AxisSpec::x();
    if (text == "y") return qec::AxisSpec::y();
    if (text == "haar") return qec::AxisSpec::haar();
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--axis", "expected z|x|y|haar|theta,phi");
    try {
        double theta = to_radians(c, std::stod(text.substr(0, comma)));
        double phi = to_radians(c, std::stod(text.substr(comma + 1)));
        return qec::AxisSpec::angles(theta, phi);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("--axis", "cannot parse angles in '" + text + "'");
    }
}

std::vector<int> parse_levels(const std::string& text) {
    std::vector<int> out;
    size_t pos = 0;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        for (int l = lo; l <= hi; ++l) out.push_back(l);
        return out;
    }
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(std::stoi(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (out.empty()) throw CLI::ValidationError("--levels", "empty level list");
    return out;
}

// "lo:hi:n" (linear) or "lo:hi:n:log"
std::vector<double> parse_range(const std::string& text, const std::string& flag) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t colon = text.find(':', pos);
        if (colon == std::string::npos) colon = text.size();
        parts.push_back(text.substr(pos, colon - pos));
        pos = colon + 1;
    }
    try {
        if (parts.size() == 1) return {std::stod(parts[0])};
        if (parts.size() < 3) throw std::invalid_argument("need lo:hi:n");
        double lo = std::stod(parts[0]), hi = std::stod(parts[1]);
        int n = std::stoi(parts[2]);
        bool log_spaced = parts.size() > 3 && parts[3] == "log";
        if (n < 1) throw std::invalid_argument("n must be >= 1");
        std::vector<double> out;
        for (int i = 0; i < n; ++i) {
            double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
            out.push_back(log_spaced ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t);
        }
        return out;
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(flag, std::string("bad range '") + text + "': " + e.what());
    }
}

// Applies --config JSON values to any option the command line left unset.
// Unknown keys are rejected.
void merge_config(CLI::App& cmd, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    json cfg;
    try {
        cfg = json::parse(in);
    } catch (const json::parse_error& e) {
        throw CLI::ValidationError("--config", std::string("parse error: ") + e.what());
    }
    if (!cfg.is_object()) throw CLI::ValidationError("--config", "top level must be an object");
    for (auto& [key, value] : cfg.items()) {
        CLI::Option* opt = cmd.get_option_no_throw("--" + key);
        if (!opt)
            throw CLI::ValidationError("--config",
                                       "unknown key '" + key + "' for this subcommand");
        if (opt->count() > 0) continue;  // flags override config
        std::string text = value.is_string() ? value.get<std::string>() : value.dump();
        opt->add_result(text);
        opt->run_callback();
    }
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

const qec::LogicalEngine& engine() {
    static const qec::DecoderTable dec = qec::build_min_weight_decoder(qec::steane_code());
    static const qec::LogicalEngine eng(qec::steane_code(), dec);
    return eng;
}

void finish(const CommonOpts& c, const std::string& command, const json& config,
            const Timer& timer, std::vector<std::string> outputs) {
    qec::RunManifest m;
    m.command = command;
    m.config_json = config.dump();
    m.seed = c.seed;
    m.workers = c.workers;
    m.version = qec::kVersion;
    m.wall_time_s = timer.seconds();
    m.outputs = std::move(outputs);
    qec::write_manifest((fs::path(c.out_dir) / (command + "_manifest.json")).string(), m);
}

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--seed", c.seed, "RNG master seed");
    cmd->add_option("--workers", c.workers, "worker thread count")->check(CLI::PositiveNumber);
    cmd->add_option("--out", c.out_dir, "output directory");
    cmd->add_flag("--degrees", c.degrees, "interpret input angles as degrees");
    cmd->add_flag("--paper-scale", c.paper_scale, "use publication-scale sample counts");
    cmd->add_option("--config", c.config_path, "JSON config file (flags take precedence)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Logical-channel gain calculations for the concatenated Steane code"};
    app.require_subcommand(1);

    // ---- verify ----
    CommonOpts verify_c;
    bool verify_quick = false;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run the oracle check suite");
    add_common(cmd_verify, verify_c);
    cmd_verify->add_flag("--quick", verify_quick, "trim the brute-force check to one sample");

    // ---- gain ----
    CommonOpts gain_c;
    std::string gain_axis = "z", gain_levels = "1,2", gain_omega, gain_omega_range;
    std::string gain_method = "engine";
    CLI::App* cmd_gain = app.add_subcommand("gain", "gain curve delta_l(omega)");
    add_common(cmd_gain, gain_c);
    cmd_gain->add_option("--axis", gain_axis, "z|x|y|haar|theta,phi");
    cmd_gain->add_option("--levels", gain_levels, "levels, e.g. 1,2 or 1..5");
    cmd_gain->add_option("--omega", gain_omega, "omega value (or range syntax lo:hi:n[:log])");
    cmd_gain->add_option("--omega-range", gain_omega_range, "omega range lo:hi:n[:log]");
    cmd_gain->add_option("--method", gain_method,
                         "engine | exact-ladder | leading-order (Z axis only)");

    // ---- threshold ----
    CommonOpts thr_c;
    std::string thr_axis = "z", thr_levels = "1,2";
    double thr_lo = 0.05, thr_hi = 1.2;
    int thr_ntheta = 16, thr_nphi = 32;
    CLI::App* cmd_threshold =
        app.add_subcommand("threshold", "crossing angle of two gain curves");
    add_common(cmd_threshold, thr_c);
    cmd_threshold->add_option("--axis", thr_axis, "z|x|y|haar|theta,phi");
    cmd_threshold->add_option("--levels", thr_levels, "two levels, e.g. 1,2");
    cmd_threshold->add_option("--omega-lo", thr_lo, "search interval start");
    cmd_threshold->add_option("--omega-hi", thr_hi, "search interval end");
    cmd_threshold->add_option("--n-theta", thr_ntheta, "Haar quadrature theta nodes");
    cmd_threshold->add_option("--n-phi", thr_nphi, "Haar quadrature phi nodes");

    // ---- haar ----
    CommonOpts haar_c;
    std::string haar_levels = "1,2", haar_omega, haar_omega_range;
    int haar_ntheta = 16, haar_nphi = 32;
    CLI::App* cmd_haar = app.add_subcommand("haar", "Haar-averaged gain over rotation axes");
    add_common(cmd_haar, haar_c);
    cmd_haar->add_option("--levels", haar_levels, "levels, e.g. 1,2");
    cmd_haar->add_option("--omega", haar_omega, "omega value (or range syntax lo:hi:n[:log])");
    cmd_haar->add_option("--omega-range", haar_omega_range, "omega range lo:hi:n[:log]");
    cmd_haar->add_option("--n-theta", haar_ntheta, "quadrature theta nodes");
    cmd_haar->add_option("--n-phi", haar_nphi, "quadrature phi nodes");

    // ---- depsweep ----
    CommonOpts dep_c;
    std::string dep_prange = "1e-4:1e-3:4:log";
    double dep_rtarget = 0.003;
    int dep_level = 1, dep_ntheta = 16, dep_nphi = 32;
    CLI::App* cmd_depsweep =
        app.add_subcommand("depsweep", "fixed-infidelity depolarizing/coherent sweep");
    add_common(cmd_depsweep, dep_c);
    cmd_depsweep->add_option("--p-range", dep_prange, "depolarizing strengths lo:hi:n[:log]");
    cmd_depsweep->add_option("--r-target", dep_rtarget, "total physical infidelity per qubit");
    cmd_depsweep->add_option("--level", dep_level, "concatenation level");
    cmd_depsweep->add_option("--n-theta", dep_ntheta, "quadrature theta nodes");
    cmd_depsweep->add_option("--n-phi", dep_nphi, "quadrature phi nodes");

    // ---- sphere ----
    CommonOpts sph_c;
    int sph_ntheta = 8, sph_nphi = 16, sph_llo = 1, sph_lhi = 2;
    CLI::App* cmd_sphere = app.add_subcommand("sphere", "per-axis threshold map");
    add_common(cmd_sphere, sph_c);
    cmd_sphere->add_option("--grid-theta", sph_ntheta, "theta rows (poles included)");
    cmd_sphere->add_option("--grid-phi", sph_nphi, "phi columns");
    cmd_sphere->add_option("--level-lo", sph_llo, "lower level");
    cmd_sphere->add_option("--level-hi", sph_lhi, "higher level");

    // ---- ensemble ----
    CommonOpts ens_c;
    std::string ens_model = "cptp", ens_levels = "1,2", ens_width = "stddev";
    int64_t ens_n = 2000;
    CLI::App* cmd_ensemble = app.add_subcommand("ensemble", "random-noise ensemble study");
    add_common(cmd_ensemble, ens_c);
    cmd_ensemble->add_option("--model", ens_model, "rotations | cptp");
    cmd_ensemble->add_option("--n", ens_n, "sample count")->check(CLI::PositiveNumber);
    cmd_ensemble->add_option("--levels", ens_levels, "levels (max 2), e.g. 1,2");
    cmd_ensemble->add_option("--width", ens_width,
                             "normal-width convention for rotations: variance | stddev");

    // ---- decoder-dump ----
    CommonOpts dump_c;
    CLI::App* cmd_dump = app.add_subcommand("decoder-dump", "decoder lookup table as JSON");
    add_common(cmd_dump, dump_c);

    CLI::App* sub = nullptr;
    try {
        app.parse(argc, argv);
        sub = app.get_subcommands().front();
        CommonOpts* common = nullptr;
        if (sub == cmd_verify) common = &verify_c;
        else if (sub == cmd_gain) common = &gain_c;
        else if (sub == cmd_threshold) common = &thr_c;
        else if (sub == cmd_haar) common = &haar_c;
        else if (sub == cmd_depsweep) common = &dep_c;
        else if (sub == cmd_sphere) common = &sph_c;
        else if (sub == cmd_ensemble) common = &ens_c;
        else common = &dump_c;
        if (!common->config_path.empty()) merge_config(*sub, common->config_path);
        if (!gain_omega_range.empty() && gain_omega.empty()) gain_omega = gain_omega_range;
        if (!haar_omega_range.empty() && haar_omega.empty()) haar_omega = haar_omega_range;
        if ((sub == cmd_gain && gain_omega.empty()) || (sub == cmd_haar && haar_omega.empty()))
            throw CLI::RequiredError("--omega");
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitConfigError;
    }

    try {
        Timer timer;
        if (sub == cmd_verify) {
            auto results = qec::run_verification(qec::steane_code(),
                                                 qec::build_min_weight_decoder(qec::steane_code()),
                                                 verify_quick);
            for (const auto& r : results)
                std::printf("%-22s %s  residual %.3e  (tol %.1e)  %s\n", r.name.c_str(),
                            r.pass ? "PASS" : "FAIL", r.residual, r.tolerance, r.note.c_str());
            return qec::all_passed(results) ? kExitOk : kExitCheckFailure;
        }

        CommonOpts& c = *[&]() -> CommonOpts* {
            if (sub == cmd_gain) return &gain_c;
            if (sub == cmd_threshold) return &thr_c;
            if (sub == cmd_haar) return &haar_c;
            if (sub == cmd_depsweep) return &dep_c;
            if (sub == cmd_sphere) return &sph_c;
            if (sub == cmd_ensemble) return &ens_c;
            return &dump_c;
        }();
        fs::create_directories(c.out_dir);

        if (sub == cmd_dump) {
            std::string path = (fs::path(c.out_dir) / "decoder_table.json").string();
            qec::write_text_file(
                path, qec::decoder_table_json(qec::steane_code(),
                                              qec::build_min_weight_decoder(qec::steane_code())));
            finish(c, "decoder-dump", json::object(), timer, {path});
            return kExitOk;
        }

        if (sub == cmd_gain) {
            auto axis = parse_axis(gain_axis, c);
            auto levels = parse_levels(gain_levels);
            auto omegas = parse_range(gain_omega, "--omega");
            if (c.degrees)
                for (auto& w : omegas) w = w * M_PI / 180.0;
            qec::SweepSpec sweep{gain_axis, omegas, levels, c.seed, 1,
                                 (fs::path(c.out_dir) / "gain.csv").string()};
            sweep.validate();
            std::optional<qec::ZLadderMethod> zmethod;
            if (gain_method == "exact-ladder") zmethod = qec::ZLadderMethod::Exact;
            else if (gain_method == "leading-order") zmethod = qec::ZLadderMethod::LeadingOrder;
            else if (gain_method != "engine")
                throw CLI::ValidationError("--method", "unknown method " + gain_method);
            int max_level = *std::max_element(levels.begin(), levels.end());
            if (max_level > 3 && axis.kind == qec::AxisSpec::Kind::Z && !zmethod)
                zmethod = qec::ZLadderMethod::Exact;  // engine deficits underflow past level 3
            auto records = qec::gain_curve(engine(), axis, levels, omegas, c.workers, {}, zmethod);
            std::vector<std::vector<std::string>> rows;
            for (const auto& r : records) rows.push_back(qec::gain_record_row(r));
            std::string path = (fs::path(c.out_dir) / "gain.csv").string();
            qec::write_csv(path, qec::gain_record_header(), rows);
            json cfg = {{"axis", gain_axis}, {"levels", gain_levels},
                        {"omega", gain_omega}, {"method", gain_method}};
            finish(c, "gain", cfg, timer, {path});
            return kExitOk;
        }

        if (sub == cmd_threshold) {
            auto axis = parse_axis(thr_axis, c);
            auto levels = parse_levels(thr_levels);
            if (levels.size() != 2)
                throw CLI::ValidationError("--levels", "threshold needs exactly two levels");
            qec::QuadratureSpec quad{thr_ntheta, thr_nphi};
            auto res = qec::find_threshold(engine(), axis, levels[0], levels[1], c.workers, quad,
                                           to_radians(c, thr_lo), to_radians(c, thr_hi));
            std::vector<std::vector<std::string>> rows{
                {axis.label(), std::to_string(levels[0]), std::to_string(levels[1]),
                 res.found ? "yes" : "no", qec::fmt_double(res.omega_star),
                 qec::fmt_double(res.bracket_lo), qec::fmt_double(res.bracket_hi)}};
            std::string path = (fs::path(c.out_dir) / "threshold.csv").string();
            qec::write_csv(path,
                           {"axis", "level_lo", "level_hi", "found", "omega_star", "bracket_lo",
                            "bracket_hi"},
                           rows);
            std::printf("threshold axis=%s levels=%d,%d found=%s omega_star=%.6f\n",
                        axis.label().c_str(), levels[0], levels[1], res.found ? "yes" : "no",
                        res.omega_star);
            json cfg = {{"axis", thr_axis}, {"levels", thr_levels},
                        {"omega-lo", thr_lo}, {"omega-hi", thr_hi}};
            finish(c, "threshold", cfg, timer, {path});
            return kExitOk;
        }

        if (sub == cmd_haar) {
            auto levels = parse_levels(haar_levels);
            auto omegas = parse_range(haar_omega, "--omega");
            if (c.degrees)
                for (auto& w : omegas) w = w * M_PI / 180.0;
            qec::SweepSpec sweep{"rotation-haar", omegas, levels, c.seed, 1,
                                 (fs::path(c.out_dir) / "haar.csv").string()};
            sweep.validate();
            qec::QuadratureSpec quad{haar_ntheta, haar_nphi};
            std::vector<std::vector<std::string>> rows;
            for (double w : omegas) {
                auto deltas = qec::haar_average_gains(engine(), w, levels, quad, c.workers);
                for (size_t k = 0; k < levels.size(); ++k)
                    rows.push_back({qec::fmt_double(w), std::to_string(levels[k]),
                                    qec::fmt_double(deltas[k])});
            }
            std::string path = (fs::path(c.out_dir) / "haar.csv").string();
            qec::write_csv(path, {"omega", "level", "delta_bar"}, rows);
            json cfg = {{"levels", haar_levels}, {"omega", haar_omega},
                        {"n-theta", haar_ntheta}, {"n-phi", haar_nphi}};
            finish(c, "haar", cfg, timer, {path});
            return kExitOk;
        }

        if (sub == cmd_depsweep) {
            auto p_grid = parse_range(dep_prange, "--p-range");
            qec::QuadratureSpec quad{dep_ntheta, dep_nphi};
            auto rows_data = qec::dep_coherent_sweep(engine(), p_grid, dep_rtarget, dep_level,
                                                     quad, c.workers);
            std::vector<std::vector<std::string>> rows;
            for (const auto& r : rows_data)
                rows.push_back({qec::fmt_double(r.p), qec::fmt_double(r.omega),
                                qec::fmt_double(r.delta_bar), r.feasible ? "yes" : "no"});
            std::string path = (fs::path(c.out_dir) / "depsweep.csv").string();
            qec::write_csv(path, {"p", "omega", "delta_bar", "feasible"}, rows);
            json cfg = {{"p-range", dep_prange}, {"r-target", dep_rtarget},
                        {"level", dep_level}};
            finish(c, "depsweep", cfg, timer, {path});
            return kExitOk;
        }

        if (sub == cmd_sphere) {
            auto entries = qec::threshold_sphere(engine(), sph_ntheta, sph_nphi, sph_llo,
                                                 sph_lhi, c.workers);
            std::vector<std::vector<std::string>> rows;
            for (const auto& e : entries)
                rows.push_back({qec::fmt_double(e.theta), qec::fmt_double(e.phi),
                                e.found ? "yes" : "no", qec::fmt_double(e.omega_star)});
            std::string path = (fs::path(c.out_dir) / "sphere.csv").string();
            qec::write_csv(path, {"theta", "phi", "found", "omega_star"}, rows);
            json cfg = {{"grid-theta", sph_ntheta}, {"grid-phi", sph_nphi},
                        {"level-lo", sph_llo}, {"level-hi", sph_lhi}};
            finish(c, "sphere", cfg, timer, {path});
            return kExitOk;
        }

        // ensemble
        qec::EnsembleOptions opt;
        if (ens_model == "rotations") opt.model = qec::EnsembleModel::RandomRotations;
        else if (ens_model == "cptp") opt.model = qec::EnsembleModel::RandomCptp;
        else throw CLI::ValidationError("--model", "unknown model " + ens_model);
        opt.samples = ens_c.paper_scale
                          ? (opt.model == qec::EnsembleModel::RandomRotations ? 16000 : 18000)
                          : ens_n;
        opt.levels = parse_levels(ens_levels);
        opt.seed = ens_c.seed;
        opt.workers = ens_c.workers;
        if (ens_width == "stddev") opt.width = qec::NormalWidth::StdDev;
        else if (ens_width != "variance")
            throw CLI::ValidationError("--width", "expected variance or stddev");
        auto records = qec::ensemble_study(engine(), opt);
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : records) rows.push_back(qec::gain_record_row(r));
        std::string path = (fs::path(ens_c.out_dir) / "ensemble.csv").string();
        qec::write_csv(path, qec::gain_record_header(), rows);
        json cfg = {{"model", ens_model}, {"n", opt.samples}, {"levels", ens_levels},
                    {"width", ens_width}};
        finish(ens_c, "ensemble", cfg, timer, {path});
        return kExitOk;
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCheckFailure;
    }
}
