// SPDX-License-Identifier: Apache-2.0
#include "qec/steane.hpp"

#include <stdexcept>

namespace qec {

static StabilizerCode build_steane() {
    StabilizerCode code;
    code.generators = {
        pauli_from_letters("ZZZZIII"), pauli_from_letters("ZZIIZZI"),
        pauli_from_letters("ZIZIZIZ"), pauli_from_letters("XXXXIII"),
        pauli_from_letters("XXIIXXI"), pauli_from_letters("XIXIXIX"),
    };
    code.logical = {
        pauli_identity(7),
        pauli_from_letters("XXXXXXX"),
        pauli_identity(7),  // placeholder, set below
        pauli_from_letters("ZZZZZZZ"),
    };
    // Logical Y must be i * Xbar * Zbar including its phase (= -Y^7): with the
    // bare representative Y^7 the logical chi would come out in a basis with
    // Y negated, breaking both the dense cross-check and the concatenation
    // recursion's input convention.
    PauliOperator ybar = multiply(code.logical[1], code.logical[3]);
    ybar.phase_exp = static_cast<uint8_t>((ybar.phase_exp + 1) & 3);
    code.logical[2] = ybar;

    code.stabilizer_group.reserve(64);
    for (int mask = 0; mask < 64; ++mask) {
        PauliOperator s = pauli_identity(7);
        for (int g = 0; g < 6; ++g)
            if (mask >> g & 1) s = multiply(s, code.generators[g]);
        code.stabilizer_group.push_back(s);
    }

    code.stab_index_by_pattern.assign(1 << (2 * code.n), -1);
    for (int i = 0; i < 64; ++i) {
        int key = code.pattern_key(code.stabilizer_group[i]);
        if (code.stab_index_by_pattern[key] != -1)
            throw std::logic_error("steane_code: duplicate stabilizer pattern");
        code.stab_index_by_pattern[key] = static_cast<int16_t>(i);
    }

    for (const auto& g : code.generators) {
        for (const auto& h : code.generators)
            if (!commutes(g, h)) throw std::logic_error("steane_code: generators do not commute");
        for (int l = 1; l < 4; ++l)
            if (!commutes(g, code.logical[l]))
                throw std::logic_error("steane_code: logical fails to commute with stabilizer");
    }
    if (commutes(code.logical[1], code.logical[3]))
        throw std::logic_error("steane_code: logical X and Z must anticommute");
    return code;
}

const StabilizerCode& steane_code() {
    static const StabilizerCode code = build_steane();
    return code;
}

int syndrome(const StabilizerCode& code, const PauliOperator& e) {
    if (e.n != code.n) throw std::invalid_argument("syndrome: qubit count mismatch");
    int s = 0;
    for (int g = 0; g < 6; ++g)
        if (!commutes(e, code.generators[g])) s |= 1 << g;
    return s;
}

std::string syndrome_string(int syndrome_bits) {
    std::string s(6, '0');
    for (int g = 0; g < 6; ++g)
        if (syndrome_bits >> g & 1) s[g] = '1';
    return s;
}

}  // namespace qec
