// SPDX-License-Identifier: Apache-2.0
#include "qec/decoder.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qec {

DecoderTable build_min_weight_decoder(const StabilizerCode& code) {
    if (code.n != 7) throw std::invalid_argument("build_min_weight_decoder: expects the Steane code");
    DecoderTable dec;

    struct Candidate {
        int weight;
        uint32_t key;  // (z_bits << 7) | x_bits
        uint32_t x, z;
    };
    std::vector<Candidate> all;
    all.reserve(1 << 14);
    for (uint32_t z = 0; z < 128; ++z)
        for (uint32_t x = 0; x < 128; ++x) {
            PauliOperator p = bare(PauliOperator{7, x, z, 0});
            all.push_back({weight(p), z << 7 | x, x, z});
        }
    std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) {
        return a.weight != b.weight ? a.weight < b.weight : a.key < b.key;
    });

    std::array<bool, 64> seen{};
    int found = 0;
    for (const auto& c : all) {
        PauliOperator p = bare(PauliOperator{7, c.x, c.z, 0});
        int s = syndrome(code, p);
        if (!seen[s]) {
            seen[s] = true;
            dec.recovery[s] = p;
            if (++found == 64) break;
        }
    }
    if (found != 64) throw std::logic_error("build_min_weight_decoder: missing syndromes");

    dec.correctable.assign(1 << 14, false);
    for (uint32_t z = 0; z < 128; ++z)
        for (uint32_t x = 0; x < 128; ++x) {
            PauliOperator e = bare(PauliOperator{7, x, z, 0});
            PauliOperator residual = multiply(dec.recovery[syndrome(code, e)], e);
            if (code.stabilizer_index(residual) >= 0) {
                dec.correctable[z << 7 | x] = true;
                ++dec.correctable_count;
            }
        }
    return dec;
}

std::optional<CosetPhase> coset_phase(const StabilizerCode& code, const DecoderTable& dec,
                                      const PauliOperator& e_in, int l) {
    if (l < 0 || l > 3) throw std::invalid_argument("coset_phase: l out of range");
    PauliOperator e = bare(e_in);  // phase convention: E enters as a bare Pauli
    const PauliOperator& pl = code.logical[l];
    PauliOperator lifted = multiply(dec.recovery[syndrome(code, e)], bare(multiply(e, pl)));
    // lifted should equal phi * S * |P_l|; peel off the involution |P_l|.
    PauliOperator t = multiply(lifted, pl);
    int idx = code.stabilizer_index(t);
    if (idx < 0) return std::nullopt;
    int k = (t.phase_exp - code.stabilizer_group[idx].phase_exp) & 3;
    static const std::complex<double> units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return CosetPhase{units[k], k, idx};
}

int logical_class(const StabilizerCode& code, const DecoderTable& dec, const PauliOperator& e) {
    PauliOperator residual = multiply(dec.recovery[syndrome(code, e)], bare(e));
    for (int l = 0; l < 4; ++l) {
        if (code.stabilizer_index(multiply(residual, code.logical[l])) >= 0) return l;
    }
    throw std::logic_error("logical_class: residual is in no logical coset");
}

std::string decoder_table_json(const StabilizerCode& code, const DecoderTable& dec) {
    std::ostringstream os;
    os << "[\n";
    for (int s = 0; s < 64; ++s) {
        const PauliOperator& r = dec.recovery[s];
        os << "  {\"syndrome\": \"" << syndrome_string(s) << "\", \"recovery\": \"" << to_string(r)
           << "\", \"weight\": " << weight(r) << "}" << (s + 1 < 64 ? "," : "") << "\n";
    }
    os << "]\n";
    return os.str();
}

}  // namespace qec
