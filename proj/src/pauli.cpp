// SPDX-License-Identifier: Apache-2.0
#include "qec/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qec {

PauliOperator pauli_identity(int n) {
    return PauliOperator{n, 0, 0, 0};
}

PauliOperator pauli_from_letters(const std::string& letters) {
    PauliOperator p;
    p.n = static_cast<int>(letters.size());
    if (p.n > 31) throw std::invalid_argument("pauli_from_letters: too many qubits");
    int y_count = 0;
    for (int q = 0; q < p.n; ++q) {
        switch (letters[q]) {
            case 'I': break;
            case 'X': p.x_bits |= 1u << q; break;
            case 'Y': p.x_bits |= 1u << q; p.z_bits |= 1u << q; ++y_count; break;
            case 'Z': p.z_bits |= 1u << q; break;
            default: throw std::invalid_argument("pauli_from_letters: bad letter");
        }
    }
    // Y = i XZ, so the Hermitian string carries i^{#Y} relative to X^x Z^z.
    p.phase_exp = static_cast<uint8_t>(y_count & 3);
    return p;
}

std::string to_string(const PauliOperator& p) {
    static const char* names = "IXYZ";
    std::string s;
    int rel = phase_relative_to_bare(p);
    if (rel == 1) s += "i^1 ";
    else if (rel == 2) s += "i^2 ";
    else if (rel == 3) s += "i^3 ";
    for (int q = 0; q < p.n; ++q) s += names[static_cast<int>(letter_at(p, q))];
    return s;
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
    if (p.n != q.n) throw std::invalid_argument("multiply: qubit count mismatch");
    PauliOperator r;
    r.n = p.n;
    r.x_bits = p.x_bits ^ q.x_bits;
    r.z_bits = p.z_bits ^ q.z_bits;
    // Moving Z^{z_p} past X^{x_q} gives (-1)^{|z_p & x_q|}.
    int swaps = std::popcount(p.z_bits & q.x_bits);
    r.phase_exp = static_cast<uint8_t>((p.phase_exp + q.phase_exp + 2 * swaps) & 3);
    return r;
}

int weight(const PauliOperator& p) {
    return std::popcount(p.x_bits | p.z_bits);
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
    int sym = std::popcount(p.x_bits & q.z_bits) + std::popcount(p.z_bits & q.x_bits);
    return (sym & 1) == 0;
}

Pauli letter_at(const PauliOperator& p, int q) {
    int x = p.x_bits >> q & 1;
    int z = p.z_bits >> q & 1;
    if (x && z) return Pauli::Y;
    if (x) return Pauli::X;
    if (z) return Pauli::Z;
    return Pauli::I;
}

PauliOperator bare(const PauliOperator& p) {
    PauliOperator r = p;
    r.phase_exp = static_cast<uint8_t>(std::popcount(p.x_bits & p.z_bits) & 3);
    return r;
}

int phase_relative_to_bare(const PauliOperator& p) {
    int y_count = std::popcount(p.x_bits & p.z_bits);
    return (p.phase_exp - y_count) & 3;
}

}  // namespace qec
