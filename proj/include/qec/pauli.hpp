// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace qec {

/// An n-qubit Pauli operator in symplectic form with a tracked quartic phase:
///
///     P = i^phase_exp * prod_q X_q^{x_bits[q]} Z_q^{z_bits[q]}
///
/// Bit q of x_bits/z_bits is qubit q, with qubit 0 the leftmost letter of a
/// string like "ZZZZIII". A "bare" Pauli is the Hermitian representative of
/// the phase coset, i.e. a tensor product of I, X, Y, Z letters (Y = i XZ).
struct PauliOperator {
    int n = 0;
    uint32_t x_bits = 0;
    uint32_t z_bits = 0;
    uint8_t phase_exp = 0;  // exponent of i, mod 4

    bool operator==(const PauliOperator& o) const = default;
};

/// Letters index the chi-matrix basis: I=0, X=1, Y=2, Z=3.
enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

PauliOperator pauli_identity(int n);

/// Parse a letter string such as "IZYXIII" into a bare (Hermitian) Pauli.
PauliOperator pauli_from_letters(const std::string& letters);

/// Letter string of the bare part; a leading "i^k " marks a nontrivial phase.
std::string to_string(const PauliOperator& p);

/// Group product PQ with exact i^k phase tracking. Throws on size mismatch.
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);

/// Number of non-identity tensor factors.
int weight(const PauliOperator& p);

bool commutes(const PauliOperator& p, const PauliOperator& q);

/// Letter (I/X/Y/Z) of qubit q.
Pauli letter_at(const PauliOperator& p, int q);

/// Hermitian representative |P| of p's phase coset: same bits, phase_exp set
/// so the operator is the plain tensor product of I,X,Y,Z letters.
PauliOperator bare(const PauliOperator& p);

/// k with p = i^k * bare(p).
int phase_relative_to_bare(const PauliOperator& p);

}  // namespace qec
