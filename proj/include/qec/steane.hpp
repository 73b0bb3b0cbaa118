// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "qec/pauli.hpp"

namespace qec {

/// Stabilizer code data for the [[7,1,3]] Steane code and its derived bits:
/// the fixed generator order (Z-type first) sets the syndrome bit order, and
/// the 64-element stabilizer group is materialized with exact phases.
struct StabilizerCode {
    int n = 7;
    int k = 1;
    std::array<PauliOperator, 6> generators;
    /// Logical representatives indexed by Pauli letter: I, X^7, Y^7, Z^7.
    std::array<PauliOperator, 4> logical;
    /// All 2^(n-k) group elements; element 0 is the identity.
    std::vector<PauliOperator> stabilizer_group;
    /// stab_index_by_pattern[(z<<n)|x] = index into stabilizer_group, or -1.
    std::vector<int16_t> stab_index_by_pattern;

    int pattern_key(const PauliOperator& p) const {
        return static_cast<int>(p.z_bits << n | p.x_bits);
    }
    /// Index of the stabilizer group element with p's bit pattern, or -1.
    int stabilizer_index(const PauliOperator& p) const {
        return stab_index_by_pattern[pattern_key(p)];
    }
};

/// The Steane code with generators ZZZZIII, ZZIIZZI, ZIZIZIZ and their X
/// counterparts, logical X = X^7, logical Z = Z^7, logical Y = |i X^7 Z^7|.
const StabilizerCode& steane_code();

/// 6-bit syndrome of e: bit g is set iff e anticommutes with generator g.
int syndrome(const StabilizerCode& code, const PauliOperator& e);

std::string syndrome_string(int syndrome_bits);

}  // namespace qec
