// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qec/steane.hpp"

namespace qec {

/// Syndrome -> minimum-weight recovery lookup, plus the coset bookkeeping the
/// logical-channel sums need. Immutable after construction.
struct DecoderTable {
    std::array<PauliOperator, 64> recovery;
    /// correctable[(z<<7)|x] for every bare Pauli pattern: true iff applying
    /// the recovery returns the error to the code space with trivial logical
    /// action.
    std::vector<bool> correctable;
    int correctable_count = 0;
};

/// Enumerates all 4^7 bare Paulis by weight, breaking ties by ascending
/// (z_bits, x_bits) key, and keeps the first operator seen per syndrome.
DecoderTable build_min_weight_decoder(const StabilizerCode& code);

struct CosetPhase {
    std::complex<double> phi;    // one of {1, i, -1, -i}
    int phase_exp;               // phi = i^phase_exp
    int stabilizer_index;        // witnessing S in code.stabilizer_group
};

/// Decomposes R_{s(E)} |E P_l| = phi * S * |P_l| for bare E and logical index
/// l in 0..3. Returns nullopt when E is not in the correctable class for l,
/// i.e. the residual operator is not a stabilizer times |P_l|.
std::optional<CosetPhase> coset_phase(const StabilizerCode& code, const DecoderTable& dec,
                                      const PauliOperator& e, int l);

/// Logical class of R_{s(E)} E: 0..3 for I, X, Y, Z logical action.
int logical_class(const StabilizerCode& code, const DecoderTable& dec, const PauliOperator& e);

/// JSON dump of the table: [{"syndrome":"000111","recovery":"ZIIIIII","weight":1},...]
std::string decoder_table_json(const StabilizerCode& code, const DecoderTable& dec);

}  // namespace qec
