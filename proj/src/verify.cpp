// SPDX-License-Identifier: Apache-2.0
#include "qec/verify.hpp"

#include <array>
#include <cmath>
#include <set>

#include "qec/channels.hpp"
#include "qec/dense_oracle.hpp"
#include "qec/logical_channel.hpp"
#include "qec/random_channels.hpp"
#include "qec/zrot.hpp"

namespace qec {
namespace {

CheckResult decoder_structure(const StabilizerCode& code, const DecoderTable& dec) {
    CheckResult r{"decoder-structure", 0.0, 0.5, false,
                  "weights 1/21/42, syndrome fixpoint, min-weight optimality, |E_C| = 4096"};
    int violations = 0;
    std::array<int, 8> weight_hist{};
    for (int s = 0; s < 64; ++s) {
        weight_hist[weight(dec.recovery[s])]++;
        if (syndrome(code, dec.recovery[s]) != s) ++violations;
    }
    if (weight_hist[0] != 1 || weight_hist[1] != 21 || weight_hist[2] != 42) ++violations;
    // optimality: no Pauli beats its syndrome's recovery
    for (uint32_t z = 0; z < 128 && violations == 0; ++z)
        for (uint32_t x = 0; x < 128; ++x) {
            PauliOperator p = bare(PauliOperator{7, x, z, 0});
            if (weight(dec.recovery[syndrome(code, p)]) > weight(p)) {
                ++violations;
                break;
            }
        }
    if (dec.correctable_count != 4096) ++violations;
    r.residual = violations;
    r.pass = violations == 0;
    return r;
}

CheckResult partition(const StabilizerCode& code, const DecoderTable& dec) {
    CheckResult r{"partition", 0.0, 0.5, false,
                  "4^7 bare Paulis split 64 syndromes x 4 classes x 64 stabilizers"};
    int violations = 0;
    std::array<std::array<int, 4>, 64> counts{};
    for (uint32_t z = 0; z < 128; ++z)
        for (uint32_t x = 0; x < 128; ++x) {
            PauliOperator p = bare(PauliOperator{7, x, z, 0});
            int s = syndrome(code, p);
            int l = logical_class(code, dec, p);
            counts[s][l]++;
            // residual after recovery must commute with every generator
            PauliOperator res = multiply(dec.recovery[s], p);
            for (const auto& g : code.generators)
                if (!commutes(res, g)) ++violations;
        }
    for (int s = 0; s < 64; ++s)
        for (int l = 0; l < 4; ++l)
            if (counts[s][l] != 64) ++violations;
    r.residual = violations;
    r.pass = violations == 0;
    return r;
}

CheckResult z_sector_closure(const StabilizerCode& code, const DecoderTable& dec) {
    CheckResult r{"z-sector-closure", 0.0, 0.5, false,
                  "correctable Z-type set equals {S Z_i : S in S_Z, i in 0..7}"};
    std::set<uint32_t> expected;
    std::vector<uint32_t> sz;
    for (const auto& s : code.stabilizer_group)
        if (s.x_bits == 0) sz.push_back(s.z_bits);
    for (uint32_t s : sz) {
        expected.insert(s);
        for (int i = 0; i < 7; ++i) expected.insert(s ^ (1u << i));
    }
    std::set<uint32_t> actual;
    for (uint32_t z = 0; z < 128; ++z)
        if (dec.correctable[z << 7]) actual.insert(z);
    int diff = 0;
    for (uint32_t v : expected)
        if (!actual.count(v)) ++diff;
    for (uint32_t v : actual)
        if (!expected.count(v)) ++diff;
    r.residual = diff;
    r.pass = diff == 0 && expected.size() == 64;
    return r;
}

CheckResult phi_consistency(const StabilizerCode& code, const DecoderTable& dec) {
    CheckResult r{"phi-consistency", 0.0, 0.5, false,
                  "R_s |E P_l| reconstructed as phi S |P_l| for all correctable E, all l"};
    int violations = 0;
    for (uint32_t z = 0; z < 128; ++z)
        for (uint32_t x = 0; x < 128; ++x) {
            if (!dec.correctable[z << 7 | x]) continue;
            PauliOperator e = bare(PauliOperator{7, x, z, 0});
            for (int l = 0; l < 4; ++l) {
                auto cp = coset_phase(code, dec, e, l);
                if (!cp) {
                    ++violations;
                    continue;
                }
                PauliOperator lhs =
                    multiply(dec.recovery[syndrome(code, e)], bare(multiply(e, code.logical[l])));
                PauliOperator rhs =
                    multiply(code.stabilizer_group[cp->stabilizer_index], code.logical[l]);
                rhs.phase_exp = static_cast<uint8_t>((rhs.phase_exp + cp->phase_exp) & 3);
                if (!(lhs == rhs)) ++violations;
            }
        }
    r.residual = violations;
    r.pass = violations == 0;
    return r;
}

CheckResult closed_form_l1(const LogicalEngine& engine) {
    CheckResult r{"closed-form-l1", 0.0, 1e-12, false,
                  "engine vs printed level-1 trig forms, 50 omegas in (0, pi/2]"};
    double worst = 0.0;
    for (int k = 1; k <= 50; ++k) {
        double omega = k * (M_PI / 2) / 50.0;
        ZRotClosedForms cf = zrot_closed_forms(omega);
        ChiMatrix raw = engine.logical_chi(NoiseAssignment::uniform(z_rotation(omega)));
        ChiMatrix tw = engine.logical_chi(NoiseAssignment::uniform(twirl(z_rotation(omega))));
        worst = std::max(worst, std::abs(process_infidelity(raw) - cf.r_raw_l1));
        worst = std::max(worst, std::abs(process_infidelity(tw) - cf.r_twirled_l1));
        worst = std::max(worst, std::abs(raw(0, 3) - cf.chi03_l1));
    }
    r.residual = worst;
    r.pass = worst <= r.tolerance;
    return r;
}

CheckResult recursion_l2l3(const LogicalEngine& engine) {
    CheckResult r{"recursion-l2l3", 0.0, 1e-12, false,
                  "engine levels 2,3 vs exact Z deficit recursion and twirled g00"};
    double worst = 0.0;
    for (double omega : {0.1, M_PI / 20, 0.3, 0.5}) {
        auto ladder = zrot_gain_ladder(omega, 3, ZLadderMethod::Exact);
        NoiseAssignment raw = NoiseAssignment::uniform(z_rotation(omega));
        NoiseAssignment tw = NoiseAssignment::uniform(twirl(z_rotation(omega)));
        for (int level = 1; level <= 3; ++level) {
            ChiMatrix raw_chi = engine.logical_chi(raw);
            ChiMatrix tw_chi = engine.logical_chi(tw);
            worst = std::max(worst,
                             std::abs(process_infidelity(raw_chi) - ladder[level - 1].r_raw));
            worst = std::max(worst, std::abs(-raw_chi(0, 3).imag() - ladder[level - 1].m_offdiag));
            worst = std::max(worst,
                             std::abs(process_infidelity(tw_chi) - ladder[level - 1].r_twirled));
            raw = NoiseAssignment::uniform(raw_chi);
            tw = NoiseAssignment::uniform(tw_chi);
        }
    }
    r.residual = worst;
    r.pass = worst <= r.tolerance;
    return r;
}

CheckResult twirl_frame(const StabilizerCode&, const DecoderTable&) {
    CheckResult r{"twirl-frame-average", 0.0, 1e-14, false,
                  "four-Pauli-frame conjugation average vs twirl(), 20 random CPTP maps"};
    RandomSource rng(20240317);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        ChiMatrix chi = random_cptp(rng, 0.05);
        ChiMatrix avg = oracle::twirl_frame_average(chi);
        worst = std::max(worst, (avg.matrix() - twirl(chi).matrix()).cwiseAbs().maxCoeff());
    }
    r.residual = worst;
    r.pass = worst <= r.tolerance;
    return r;
}

CheckResult brute_force(const StabilizerCode& code, const DecoderTable& dec,
                        const LogicalEngine& engine, bool quick) {
    CheckResult r{"brute-force-dense", 0.0, 1e-8, false,
                  "dense 2^7 superoperator simulation vs engine, heterogeneous noise"};
    RandomSource rng(777);
    double worst = 0.0;
    int count = quick ? 1 : 3;
    for (int i = 0; i < count; ++i) {
        NoiseAssignment noise;
        for (int q = 0; q < 7; ++q) {
            // mix of coherent and generic CPTP per qubit
            if (q % 2 == 0) {
                noise.per_qubit[q] = random_cptp(rng, 0.05);
            } else {
                noise.per_qubit[q] = random_axis_rotation(rng, 0.02);
            }
        }
        ChiMatrix via_engine = engine.logical_chi(noise);
        ChiMatrix via_dense = oracle::logical_chi_dense(code, dec, noise);
        worst = std::max(worst,
                         (via_engine.matrix() - via_dense.matrix()).cwiseAbs().maxCoeff());
    }
    r.residual = worst;
    r.pass = worst <= r.tolerance;
    return r;
}

}  // namespace

std::vector<CheckResult> run_verification(const StabilizerCode& code, const DecoderTable& dec,
                                          bool quick) {
    std::vector<CheckResult> out;
    out.push_back(decoder_structure(code, dec));
    out.push_back(partition(code, dec));
    out.push_back(z_sector_closure(code, dec));
    out.push_back(phi_consistency(code, dec));
    auto guarded = [&out](const std::string& name, auto&& fn) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            out.push_back(CheckResult{name, std::nan(""), 0.0, false, e.what()});
        }
    };
    guarded("closed-form-l1", [&] { return closed_form_l1(LogicalEngine(code, dec)); });
    guarded("recursion-l2l3", [&] { return recursion_l2l3(LogicalEngine(code, dec)); });
    guarded("twirl-frame-average", [&] { return twirl_frame(code, dec); });
    guarded("brute-force-dense",
            [&] { return brute_force(code, dec, LogicalEngine(code, dec), quick); });
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace qec
