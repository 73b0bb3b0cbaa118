// SPDX-License-Identifier: Apache-2.0
#include "qec/dense_oracle.hpp"

#include <bit>
#include <stdexcept>

#include "qec/channels.hpp"

namespace qec::oracle {
namespace {

constexpr int kDim = 128;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

complexd unit_phase(int k) {
    static const complexd u[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return u[k & 3];
}

double sign_z(uint32_t z, uint32_t basis) {
    return std::popcount(z & basis) & 1 ? -1.0 : 1.0;
}

// U_p M for the (possibly phased) operator p = i^k X^x Z^z.
Mat pauli_left(const PauliOperator& p, const Mat& m) {
    Mat out(kDim, kDim);
    complexd ph = unit_phase(p.phase_exp);
    for (int a = 0; a < kDim; ++a) {
        int src = a ^ static_cast<int>(p.x_bits);
        complexd f = ph * sign_z(p.z_bits, static_cast<uint32_t>(src));
        out.row(a) = f * m.row(src);
    }
    return out;
}

// M U_p.
Mat pauli_right(const PauliOperator& p, const Mat& m) {
    Mat out(kDim, kDim);
    complexd ph = unit_phase(p.phase_exp);
    for (int b = 0; b < kDim; ++b) {
        int src = b ^ static_cast<int>(p.x_bits);
        complexd f = ph * sign_z(p.z_bits, static_cast<uint32_t>(b));
        out.col(b) = f * m.col(src);
    }
    return out;
}

Vec pauli_apply(const PauliOperator& p, const Vec& v) {
    Vec out(kDim);
    complexd ph = unit_phase(p.phase_exp);
    for (int a = 0; a < kDim; ++a) {
        int src = a ^ static_cast<int>(p.x_bits);
        out(a) = ph * sign_z(p.z_bits, static_cast<uint32_t>(src)) * v(src);
    }
    return out;
}

// Single-qubit bare Pauli embedded on qubit q.
PauliOperator embedded(int q, int letter) {
    PauliOperator p = pauli_identity(7);
    if (letter == 1 || letter == 2) p.x_bits |= 1u << q;
    if (letter == 3 || letter == 2) p.z_bits |= 1u << q;
    return bare(p);
}

struct CodeSpace {
    Vec zero;  // |0_L>
    Vec one;   // |1_L>
};

CodeSpace logical_basis(const StabilizerCode& code) {
    // Group-average projector applied to |0...0>: each stabilizer
    // i^k X^x Z^z sends it to i^k |x>.
    Vec v = Vec::Zero(kDim);
    for (const auto& s : code.stabilizer_group)
        v(static_cast<int>(s.x_bits)) += unit_phase(s.phase_exp);
    double norm = v.norm();
    if (norm < 1e-12) throw std::logic_error("logical_basis: projector annihilates |0...0>");
    v /= norm;
    CodeSpace cs;
    cs.zero = v;
    cs.one = pauli_apply(code.logical[1], v);
    if (std::abs(cs.zero.dot(cs.one)) > 1e-12)
        throw std::logic_error("logical_basis: basis states not orthogonal");
    return cs;
}

Mat apply_noise(const StabilizerCode&, const NoiseAssignment& noise, Mat rho) {
    for (int q = 0; q < 7; ++q) {
        const ChiMatrix& chi = noise.per_qubit[q];
        Mat next = Mat::Zero(kDim, kDim);
        for (int i = 0; i < 4; ++i) {
            bool row_zero = true;
            for (int j = 0; j < 4; ++j)
                if (chi(i, j) != complexd(0, 0)) row_zero = false;
            if (row_zero) continue;
            Mat left = pauli_left(embedded(q, i), rho);
            for (int j = 0; j < 4; ++j) {
                if (chi(i, j) == complexd(0, 0)) continue;
                next += chi(i, j) * pauli_right(embedded(q, j), left);
            }
        }
        rho = std::move(next);
    }
    return rho;
}

Mat apply_qec(const StabilizerCode& code, const DecoderTable& dec, const Mat& rho) {
    Mat out = Mat::Zero(kDim, kDim);
    for (int s = 0; s < 64; ++s) {
        Mat proj = rho;
        for (int g = 0; g < 6; ++g) {
            double eta = s >> g & 1 ? -1.0 : 1.0;
            const PauliOperator& gen = code.generators[g];
            Mat gl = pauli_left(gen, proj);
            Mat gr = pauli_right(gen, proj);
            Mat glr = pauli_right(gen, gl);
            proj = 0.25 * (proj + eta * gl + eta * gr + glr);
        }
        const PauliOperator& r = dec.recovery[s];
        out += pauli_right(r, pauli_left(r, proj));
    }
    return out;
}

}  // namespace

ChiMatrix logical_chi_dense(const StabilizerCode& code, const DecoderTable& dec,
                            const NoiseAssignment& noise) {
    CodeSpace cs = logical_basis(code);
    Eigen::MatrixXcd v(kDim, 2);
    v.col(0) = cs.zero;
    v.col(1) = cs.one;

    Eigen::Matrix2cd lambda[2][2];
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Mat rho = v.col(a) * v.col(b).adjoint();
            rho = apply_qec(code, dec, apply_noise(code, noise, rho));
            lambda[a][b] = v.adjoint() * rho * v;
        }

    return chi_from_action([&](const Eigen::Matrix2cd& e) {
        Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) out += e(a, b) * lambda[a][b];
        return out;
    });
}

ChiMatrix twirl_frame_average(const ChiMatrix& chi) {
    Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
    for (int f = 0; f < 4; ++f) {
        ChiMatrix conj = chi_from_action([&](const Eigen::Matrix2cd& rho) {
            return kPauli2[f] * apply_channel(chi, kPauli2[f] * rho * kPauli2[f]) * kPauli2[f];
        });
        sum += conj.matrix();
    }
    return ChiMatrix((sum / 4.0).eval());
}

}  // namespace qec::oracle
