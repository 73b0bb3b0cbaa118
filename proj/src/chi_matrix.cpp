// SPDX-License-Identifier: Apache-2.0
#include "qec/chi_matrix.hpp"

#include <stdexcept>

#include "json.hpp"

namespace qec {

double ChiMatrix::hermiticity_error() const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

double ChiMatrix::trace_error() const {
    return std::abs(m_.trace() - complexd(1.0, 0.0));
}

double ChiMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(((m_ + m_.adjoint()) / 2.0).eval(),
                                                       Eigen::EigenvaluesOnly);
    double lo = es.eigenvalues().minCoeff();
    return lo < 0.0 ? lo : 0.0;
}

void ChiMatrix::validate(double eps, const std::string& context) const {
    auto fail = [&](const std::string& what, double err) {
        throw std::runtime_error("ChiMatrix" + (context.empty() ? "" : " (" + context + ")") +
                                 ": " + what + " violated by " + std::to_string(err));
    };
    double h = hermiticity_error();
    if (h > eps) fail("Hermiticity", h);
    double t = trace_error();
    if (t > eps) fail("unit trace", t);
    double lo = min_eigenvalue();
    if (lo < -eps) fail("positive semidefiniteness", -lo);
}

bool ChiMatrix::is_valid(double eps) const {
    return hermiticity_error() <= eps && trace_error() <= eps && min_eigenvalue() >= -eps;
}

std::string to_json(const ChiMatrix& chi) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 4; ++j)
            row.push_back({chi(i, j).real(), chi(i, j).imag()});
        rows.push_back(row);
    }
    return rows.dump();
}

ChiMatrix chi_from_json(const std::string& json) {
    nlohmann::json rows = nlohmann::json::parse(json);
    if (!rows.is_array() || rows.size() != 4)
        throw std::invalid_argument("chi_from_json: expected 4 rows");
    ChiMatrix chi;
    for (int i = 0; i < 4; ++i) {
        if (!rows[i].is_array() || rows[i].size() != 4)
            throw std::invalid_argument("chi_from_json: expected 4 columns");
        for (int j = 0; j < 4; ++j)
            chi(i, j) = complexd(rows[i][j][0].get<double>(), rows[i][j][1].get<double>());
    }
    return chi;
}

}  // namespace qec
