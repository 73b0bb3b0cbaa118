// SPDX-License-Identifier: Apache-2.0
#include "qec/logical_channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qec/channels.hpp"

namespace qec {
namespace {

struct Kahan {
    double sum = 0.0, comp = 0.0;
    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

struct KahanComplex {
    Kahan re, im;
    void add(complexd v) {
        re.add(v.real());
        im.add(v.imag());
    }
    complexd value() const { return {re.sum, im.sum}; }
};

// Per-qubit chi tabulated for the inner loops: row-major 4x4 entries plus a
// bitmask of exactly-zero entries for early term rejection.
struct QubitChi {
    std::array<complexd, 16> entry;
    uint16_t zero_mask = 0;
};

QubitChi tabulate(const ChiMatrix& chi) {
    QubitChi q;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            complexd v = chi(i, j);
            q.entry[i * 4 + j] = v;
            if (v == complexd(0.0, 0.0)) q.zero_mask |= static_cast<uint16_t>(1u << (i * 4 + j));
        }
    return q;
}

bool is_diagonal(const ChiMatrix& chi) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && chi(i, j) != complexd(0.0, 0.0)) return false;
    return true;
}

// Rank-1 test: chi == c c^dagger with c read off the strongest column.
bool rank1_coefficients(const ChiMatrix& chi, Eigen::Vector4cd& c) {
    int pivot = 0;
    double best = -1.0;
    for (int i = 0; i < 4; ++i) {
        double d = chi(i, i).real();
        if (d > best) {
            best = d;
            pivot = i;
        }
    }
    if (best <= 0.0) return false;
    double root = std::sqrt(best);
    for (int i = 0; i < 4; ++i) c(i) = chi(i, pivot) / root;
    double scale = chi.matrix().cwiseAbs().maxCoeff();
    double err = (chi.matrix() - c * c.adjoint()).cwiseAbs().maxCoeff();
    return err <= 1e-13 * std::max(1.0, scale);
}

const complexd kUnit[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

NoiseAssignment NoiseAssignment::twirled() const {
    NoiseAssignment t;
    for (int q = 0; q < 7; ++q) t.per_qubit[q] = twirl(per_qubit[q]);
    return t;
}

LogicalEngine::LogicalEngine(const StabilizerCode& code, const DecoderTable& decoder)
    : code_(code), decoder_(decoder), rows_(4) {
    for (int l = 0; l < 4; ++l) {
        const PauliOperator& pl = code_.logical[l];
        for (int s = 0; s < 64; ++s) {
            for (int i = 0; i < 64; ++i) {
                PauliOperator e = bare(multiply(decoder_.recovery[s], code_.stabilizer_group[i]));
                auto phase = coset_phase(code_, decoder_, e, l);
                if (!phase)
                    throw std::logic_error("LogicalEngine: coset element is not correctable");
                Row& row = rows_[l][s][i];
                row.phase_exp = static_cast<uint8_t>(phase->phase_exp);
                uint32_t ax = e.x_bits ^ pl.x_bits;
                uint32_t az = e.z_bits ^ pl.z_bits;
                for (int q = 0; q < 7; ++q) {
                    int x = ax >> q & 1, z = az >> q & 1;
                    row.letters[q] = static_cast<uint8_t>(x && z ? 2 : x ? 1 : z ? 3 : 0);
                }
            }
        }
    }
}

ChiMatrix LogicalEngine::eval_general(const NoiseAssignment& noise) const {
    std::array<QubitChi, 7> qs;
    for (int q = 0; q < 7; ++q) qs[q] = tabulate(noise.per_qubit[q]);

    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (int l = 0; l < 4; ++l) {
        for (int m = l; m < 4; ++m) {
            // Accumulate by phase difference k = phase(E,l) - phase(E',m),
            // applying i^k once per bucket at the end.
            KahanComplex bucket[4];
            for (int s = 0; s < 64; ++s) {
                const auto& rows_a = rows_[l][s];
                const auto& rows_b = rows_[m][s];
                for (int i = 0; i < 64; ++i) {
                    const Row& a = rows_a[i];
                    for (int j = 0; j < 64; ++j) {
                        const Row& b = rows_b[j];
                        complexd prod(1.0, 0.0);
                        bool dead = false;
                        for (int q = 0; q < 7; ++q) {
                            int idx = a.letters[q] * 4 + b.letters[q];
                            if (qs[q].zero_mask >> idx & 1) {
                                dead = true;
                                break;
                            }
                            prod *= qs[q].entry[idx];
                        }
                        if (dead) continue;
                        bucket[(a.phase_exp - b.phase_exp) & 3].add(prod);
                    }
                }
            }
            complexd total = 0.0;
            for (int k = 0; k < 4; ++k) total += kUnit[k] * bucket[k].value();
            if (m == l) {
                out(l, l) = total.real();  // diagonal is real; drop roundoff
            } else {
                out(l, m) = total;
                out(m, l) = std::conj(total);
            }
        }
    }
    return ChiMatrix(out);
}

ChiMatrix LogicalEngine::eval_rank1(const std::array<Eigen::Vector4cd, 7>& coeffs) const {
    // chi_bar(l,m) = sum_s A(s,l) conj(A(s,m)) with
    // A(s,l) = sum_i phi(E_i,l) prod_q c_q[letter].
    std::array<std::array<complexd, 4>, 64> amp;
    for (int l = 0; l < 4; ++l) {
        for (int s = 0; s < 64; ++s) {
            KahanComplex acc;
            for (int i = 0; i < 64; ++i) {
                const Row& row = rows_[l][s][i];
                complexd prod = kUnit[row.phase_exp];
                for (int q = 0; q < 7; ++q) prod *= coeffs[q](row.letters[q]);
                acc.add(prod);
            }
            amp[s][l] = acc.value();
        }
    }
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (int l = 0; l < 4; ++l)
        for (int m = l; m < 4; ++m) {
            KahanComplex acc;
            for (int s = 0; s < 64; ++s) acc.add(amp[s][l] * std::conj(amp[s][m]));
            out(l, m) = acc.value();
            if (m != l) out(m, l) = std::conj(acc.value());
        }
    return ChiMatrix(out);
}

#if defined(__SIZEOF_FLOAT128__)
using quad = __float128;
#else
using quad = long double;
#endif

double LogicalEngine::logical_deficit_hp(const NoiseAssignment& noise) const {
    // (0,0) entry only, same triple loop as eval_general but accumulated in
    // quadruple precision so the subtraction from 1 keeps the deficit exact.
    std::array<std::array<quad, 16>, 7> re{}, im{};
    std::array<uint16_t, 7> zmask{};
    for (int q = 0; q < 7; ++q)
        for (int i = 0; i < 16; ++i) {
            complexd v = noise.per_qubit[q](i / 4, i % 4);
            re[q][i] = v.real();
            im[q][i] = v.imag();
            if (v == complexd(0.0, 0.0)) zmask[q] |= static_cast<uint16_t>(1u << i);
        }
    quad bucket_re[4] = {0, 0, 0, 0};
    quad bucket_im[4] = {0, 0, 0, 0};
    for (int s = 0; s < 64; ++s) {
        const auto& rows = rows_[0][s];
        for (int i = 0; i < 64; ++i) {
            const Row& a = rows[i];
            for (int j = 0; j < 64; ++j) {
                const Row& b = rows[j];
                quad pr = 1.0, pi = 0.0;
                bool dead = false;
                for (int q = 0; q < 7; ++q) {
                    int idx = a.letters[q] * 4 + b.letters[q];
                    if (zmask[q] >> idx & 1) {
                        dead = true;
                        break;
                    }
                    quad nr = pr * re[q][idx] - pi * im[q][idx];
                    pi = pr * im[q][idx] + pi * re[q][idx];
                    pr = nr;
                }
                if (dead) continue;
                int k = (a.phase_exp - b.phase_exp) & 3;
                bucket_re[k] += pr;
                bucket_im[k] += pi;
            }
        }
    }
    // total = b0 + i b1 - b2 - i b3; the imaginary part cancels
    quad total_re = bucket_re[0] - bucket_im[1] - bucket_re[2] + bucket_im[3];
    quad deficit = quad(1.0) - total_re;
    return static_cast<double>(deficit);
}

ChiMatrix LogicalEngine::eval_diagonal(const NoiseAssignment& noise) const {
    // Only E = E' pairs survive, so the logical chi is diagonal with
    // chi_bar(l,l) = sum over correctable E of prod_q p_q[letter(E P_l)].
    std::array<std::array<double, 4>, 7> p{};
    for (int q = 0; q < 7; ++q)
        for (int i = 0; i < 4; ++i) p[q][i] = noise.per_qubit[q](i, i).real();
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (int l = 0; l < 4; ++l) {
        Kahan acc;
        for (int s = 0; s < 64; ++s)
            for (int i = 0; i < 64; ++i) {
                const Row& row = rows_[l][s][i];
                double prod = 1.0;
                for (int q = 0; q < 7; ++q) prod *= p[q][row.letters[q]];
                acc.add(prod);
            }
        out(l, l) = acc.sum;
    }
    return ChiMatrix(out);
}

ChiMatrix LogicalEngine::logical_chi(const NoiseAssignment& noise, EnginePath path) const {
    for (int q = 0; q < 7; ++q)
        noise.per_qubit[q].validate(ChiMatrix::kDefaultTol, "logical_chi input qubit " +
                                                                std::to_string(q));
    if (path == EnginePath::Auto) {
        bool all_diag = true;
        for (int q = 0; q < 7 && all_diag; ++q) all_diag = is_diagonal(noise.per_qubit[q]);
        if (all_diag) {
            path = EnginePath::Diagonal;
        } else {
            std::array<Eigen::Vector4cd, 7> coeffs;
            bool all_rank1 = true;
            for (int q = 0; q < 7 && all_rank1; ++q)
                all_rank1 = rank1_coefficients(noise.per_qubit[q], coeffs[q]);
            if (all_rank1) {
                ChiMatrix result = eval_rank1(coeffs);
                result.validate(kOutputTol, "logical_chi output");
                return result;
            }
            path = EnginePath::General;
        }
    }
    ChiMatrix result;
    switch (path) {
        case EnginePath::Diagonal: result = eval_diagonal(noise); break;
        case EnginePath::Rank1: {
            std::array<Eigen::Vector4cd, 7> coeffs;
            for (int q = 0; q < 7; ++q)
                if (!rank1_coefficients(noise.per_qubit[q], coeffs[q]))
                    throw std::invalid_argument("logical_chi: input qubit chi is not rank 1");
            result = eval_rank1(coeffs);
            break;
        }
        default: result = eval_general(noise); break;
    }
    result.validate(kOutputTol, "logical_chi output");
    return result;
}

double LogicalEngine::logical_infidelity(const NoiseAssignment& noise, EnginePath path) const {
    return process_infidelity(logical_chi(noise, path));
}

ChiMatrix logical_chi(const StabilizerCode& code, const DecoderTable& dec,
                      const NoiseAssignment& noise) {
    return LogicalEngine(code, dec).logical_chi(noise);
}

double logical_infidelity(const StabilizerCode& code, const DecoderTable& dec,
                          const NoiseAssignment& noise) {
    return LogicalEngine(code, dec).logical_infidelity(noise);
}

LogicalChannel concatenate(const LogicalEngine& engine, const std::vector<NoiseAssignment>& blocks,
                           int levels, bool twirl_inputs) {
    if (levels < 1) throw std::invalid_argument("concatenate: levels must be >= 1");
    size_t expected = 1;
    for (int l = 1; l < levels; ++l) expected *= 7;
    if (blocks.size() != expected)
        throw std::invalid_argument("concatenate: expected " + std::to_string(expected) +
                                    " level-1 blocks for " + std::to_string(levels) + " levels");

    std::vector<NoiseAssignment> current = blocks;
    if (twirl_inputs)
        for (auto& b : current) b = b.twirled();

    ChiMatrix last;
    for (int level = 1; level <= levels; ++level) {
        std::vector<ChiMatrix> logical(current.size());
        for (size_t b = 0; b < current.size(); ++b) {
            // identical blocks are common (i.i.d. models); reuse the result
            if (b > 0 && current[b] == current[b - 1]) {
                logical[b] = logical[b - 1];
            } else {
                logical[b] = engine.logical_chi(current[b]);
            }
        }
        last = logical[0];
        if (level == levels) break;
        std::vector<NoiseAssignment> next(current.size() / 7);
        for (size_t b = 0; b < next.size(); ++b)
            for (int q = 0; q < 7; ++q) next[b].per_qubit[q] = logical[b * 7 + q];
        current = std::move(next);
    }
    return LogicalChannel{last, levels, twirl_inputs};
}

LogicalChannel concatenate(const LogicalEngine& engine, const NoiseAssignment& base, int levels,
                           bool twirl_inputs) {
    if (levels < 1) throw std::invalid_argument("concatenate: levels must be >= 1");
    // Homogeneous ladder: every block at every level sees the same channel.
    NoiseAssignment current = twirl_inputs ? base.twirled() : base;
    ChiMatrix last;
    for (int level = 1; level <= levels; ++level) {
        last = engine.logical_chi(current);
        current = NoiseAssignment::uniform(last);
    }
    return LogicalChannel{last, levels, twirl_inputs};
}

double deficit_by_trace_complement(const ChiMatrix& chi) {
    return chi(1, 1).real() + chi(2, 2).real() + chi(3, 3).real();
}

std::string to_string(GainClass c) {
    switch (c) {
        case GainClass::Gain: return "gain";
        case GainClass::Loss: return "loss";
        case GainClass::Grey: return "grey";
        default: return "undefined";
    }
}

GainClass classify_gain(double r_raw, double r_twirled) {
    double hi = std::max(r_raw, r_twirled);
    if (hi <= 0.0) return GainClass::Undefined;
    if (std::abs(r_raw - r_twirled) / hi < 0.10) return GainClass::Grey;
    return r_raw > r_twirled ? GainClass::Gain : GainClass::Loss;
}

std::vector<GainRecord> gain_ladder(const LogicalEngine& engine,
                                    const std::vector<NoiseAssignment>& blocks, int levels) {
    if (levels < 1) throw std::invalid_argument("gain_ladder: levels must be >= 1");
    size_t expected = 1;
    for (int l = 1; l < levels; ++l) expected *= 7;
    if (blocks.size() != expected)
        throw std::invalid_argument("gain_ladder: expected " + std::to_string(expected) +
                                    " blocks for " + std::to_string(levels) + " levels");
    double r_phys_sum = 0.0;
    for (const auto& b : blocks)
        for (const auto& chi : b.per_qubit) r_phys_sum += process_infidelity(chi);
    double r_phys = r_phys_sum / (7.0 * blocks.size());

    std::vector<GainRecord> out;
    std::vector<NoiseAssignment> raw = blocks;
    std::vector<NoiseAssignment> tw(blocks.size());
    for (size_t b = 0; b < blocks.size(); ++b) tw[b] = blocks[b].twirled();

    for (int level = 1; level <= levels; ++level) {
        // the level-l record is read off the leading block's chain
        std::vector<ChiMatrix> raw_out(raw.size()), tw_out(tw.size());
        for (size_t b = 0; b < raw.size(); ++b) {
            raw_out[b] = b > 0 && raw[b] == raw[b - 1] ? raw_out[b - 1]
                                                       : engine.logical_chi(raw[b]);
            tw_out[b] = b > 0 && tw[b] == tw[b - 1] ? tw_out[b - 1]
                                                    : engine.logical_chi(tw[b]);
        }
        GainRecord rec;
        rec.level = level;
        rec.r_phys = r_phys;
        rec.r_raw = deficit_by_trace_complement(raw_out[0]);
        rec.r_twirled = deficit_by_trace_complement(tw_out[0]);
        if (rec.r_raw < kInfidelityFloor || rec.r_twirled < kInfidelityFloor) {
            rec.classification = GainClass::Undefined;
        } else {
            rec.classification = classify_gain(rec.r_raw, rec.r_twirled);
        }
        rec.delta = rec.r_twirled > 0.0 ? rec.r_raw / rec.r_twirled
                                        : std::numeric_limits<double>::quiet_NaN();
        out.push_back(rec);
        if (level == levels) break;
        std::vector<NoiseAssignment> next_raw(raw.size() / 7), next_tw(tw.size() / 7);
        for (size_t b = 0; b < next_raw.size(); ++b)
            for (int q = 0; q < 7; ++q) {
                next_raw[b].per_qubit[q] = raw_out[b * 7 + q];
                next_tw[b].per_qubit[q] = tw_out[b * 7 + q];
            }
        raw = std::move(next_raw);
        tw = std::move(next_tw);
    }
    return out;
}

GainRecord gain_delta(const LogicalEngine& engine, const std::vector<NoiseAssignment>& blocks,
                      int levels) {
    return gain_ladder(engine, blocks, levels).back();
}

}  // namespace qec
