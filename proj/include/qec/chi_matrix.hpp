// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace qec {

using complexd = std::complex<double>;

/// Process matrix of a single-qubit channel in the I,X,Y,Z basis:
///
///     E(rho) = sum_{i,j} chi(i,j) P_i rho P_j
///
/// A physical channel has chi Hermitian, trace 1 and positive semidefinite;
/// a Pauli channel is diagonal. Value type, freely copyable across threads.
class ChiMatrix {
  public:
    ChiMatrix() : m_(Eigen::Matrix4cd::Zero()) {}
    explicit ChiMatrix(const Eigen::Matrix4cd& m) : m_(m) {}

    static ChiMatrix identity() {
        ChiMatrix c;
        c.m_(0, 0) = 1.0;
        return c;
    }

    complexd operator()(int i, int j) const { return m_(i, j); }
    complexd& operator()(int i, int j) { return m_(i, j); }
    const Eigen::Matrix4cd& matrix() const { return m_; }

    bool operator==(const ChiMatrix& o) const { return (m_.array() == o.m_.array()).all(); }

    /// Max deviation from chi = chi^dagger.
    double hermiticity_error() const;
    double trace_error() const;
    /// Most negative eigenvalue of the Hermitian part, clamped at 0 from above.
    double min_eigenvalue() const;

    /// Throws std::runtime_error naming the violated invariant if the matrix
    /// is not Hermitian / trace-1 / PSD within eps.
    void validate(double eps = kDefaultTol, const std::string& context = "") const;
    bool is_valid(double eps = kDefaultTol) const;

    /// Exactly (m + m^dagger)/2; constructors use it to kill fp asymmetry.
    ChiMatrix hermitized() const { return ChiMatrix(((m_ + m_.adjoint()) / 2.0).eval()); }

    static constexpr double kDefaultTol = 1e-10;

  private:
    Eigen::Matrix4cd m_;
};

/// JSON: 4x4 array of [re, im] pairs, row-major, basis order I,X,Y,Z.
std::string to_json(const ChiMatrix& chi);
ChiMatrix chi_from_json(const std::string& json);

}  // namespace qec
