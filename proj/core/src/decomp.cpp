// Copyright 2026 The Volform Authors
// SPDX-License-Identifier: Apache-2.0

#include "volform/decomp.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "volform/errors.hpp"

namespace volform {

namespace {

// Flip a column so its first entry with |entry| > 1e-8 * ||column|| is
// nonnegative. Returns the applied sign so paired frames can follow.
double fix_column_sign(Eigen::Ref<Eigen::VectorXd> col) {
    const double threshold = 1e-8 * col.norm();
    for (Eigen::Index i = 0; i < col.size(); ++i) {
        if (std::abs(col[i]) > threshold) {
            if (col[i] < 0.0) {
                col = -col;
                return -1.0;
            }
            return 1.0;
        }
    }
    return 1.0;
}

}  // namespace

Eigen::MatrixXd SpectralParts::reconstruct() const {
    Eigen::VectorXd dv = Eigen::Map<const Eigen::VectorXd>(
        d.data(), static_cast<Eigen::Index>(d.size()));
    return H1 * dv.asDiagonal() * H1.transpose();
}

Eigen::MatrixXd SvdParts::reconstruct() const {
    Eigen::VectorXd sv = Eigen::Map<const Eigen::VectorXd>(
        sigma.data(), static_cast<Eigen::Index>(sigma.size()));
    return H1 * sv.asDiagonal() * P1.transpose();
}

SpectralParts spectral_nonsingular(const Eigen::MatrixXd& A,
                                   const TolerancePolicy& policy) {
    if (A.rows() != A.cols())
        throw InputError("spectral_nonsingular: matrix is not square");
    const Eigen::MatrixXd sym = 0.5 * (A + A.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    const Eigen::VectorXd& eig = solver.eigenvalues();
    const Eigen::MatrixXd& vecs = solver.eigenvectors();

    const double scale = eig.size() ? eig.cwiseAbs().maxCoeff() : 0.0;
    const double threshold = policy.rank_tol * scale;

    // Order: positives descending, then negatives by descending magnitude.
    std::vector<int> order;
    for (int i = static_cast<int>(eig.size()) - 1; i >= 0; --i)
        if (eig[i] > threshold && eig[i] != 0.0) order.push_back(i);
    for (int i = 0; i < static_cast<int>(eig.size()); ++i)
        if (eig[i] < -threshold) order.push_back(i);

    SpectralParts parts;
    parts.m = static_cast<int>(A.rows());
    const int r = static_cast<int>(order.size());
    parts.H1.resize(A.rows(), r);
    parts.d.resize(r);
    for (int j = 0; j < r; ++j) {
        parts.d[j] = eig[order[j]];
        parts.H1.col(j) = vecs.col(order[j]);
        fix_column_sign(parts.H1.col(j));
    }
    return parts;
}

SvdParts svd_nonsingular(const Eigen::MatrixXd& X, const TolerancePolicy& policy) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(
        X, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double scale = sv.size() ? sv[0] : 0.0;
    const double threshold = policy.rank_tol * scale;

    int r = 0;
    while (r < sv.size() && sv[r] > threshold && sv[r] != 0.0) ++r;

    SvdParts parts;
    parts.H1 = svd.matrixU().leftCols(r);
    parts.P1 = svd.matrixV().leftCols(r);
    parts.sigma.assign(sv.data(), sv.data() + r);
    for (int j = 0; j < r; ++j) {
        const double s = fix_column_sign(parts.H1.col(j));
        parts.P1.col(j) *= s;
    }
    return parts;
}

CholeskyParts cholesky(const Eigen::MatrixXd& A, const TolerancePolicy&) {
    if (A.rows() != A.cols())
        throw InputError("cholesky: matrix is not square");
    const double asym = A.size()
        ? (A - A.transpose()).cwiseAbs().maxCoeff()
        : 0.0;
    if (A.size() && asym > 1e-12 * std::max(A.cwiseAbs().maxCoeff(), 1e-300))
        throw InputError("cholesky: matrix is not symmetric");

    const int m = static_cast<int>(A.rows());
    // Row-by-row elimination; a nonpositive pivot at step i means the
    // leading minor of order i+1 is not positive (Sylvester).
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j <= i; ++j) {
            double sum = A(i, j);
            for (int k = 0; k < j; ++k) sum -= L(i, k) * L(j, k);
            if (i == j) {
                if (!(sum > 0.0))
                    throw DomainError(
                        "cholesky: matrix is not positive definite (leading "
                        "minor of order " +
                        std::to_string(i + 1) + " is not positive)");
                L(i, i) = std::sqrt(sum);
            } else {
                L(i, j) = sum / L(j, j);
            }
        }
    }
    return CholeskyParts{L.transpose()};
}

Eigen::MatrixXd moore_penrose(const Eigen::MatrixXd& X,
                              const TolerancePolicy& policy) {
    SvdParts parts = svd_nonsingular(X, policy);
    if (parts.sigma.empty())
        return Eigen::MatrixXd::Zero(X.cols(), X.rows());
    Eigen::VectorXd inv(static_cast<Eigen::Index>(parts.sigma.size()));
    for (Eigen::Index i = 0; i < inv.size(); ++i) inv[i] = 1.0 / parts.sigma[i];
    return parts.P1 * inv.asDiagonal() * parts.H1.transpose();
}

}  // namespace volform
