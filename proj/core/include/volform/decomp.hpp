// Copyright 2026 The Volform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <vector>

#include "volform/spectra.hpp"

namespace volform {

/// Nonsingular part of a spectral decomposition: A ~ H1 diag(d) H1'.
/// d holds positives first (descending), then negatives by descending
/// magnitude; H1 columns are orthonormal with the first significant entry
/// of each column nonnegative.
struct SpectralParts {
    Eigen::MatrixXd H1;      // m x r, orthonormal columns
    std::vector<double> d;   // r signed eigenvalues
    int m = 0;

    Eigen::MatrixXd reconstruct() const;
};

/// Nonsingular part of an SVD: X ~ H1 diag(sigma) P1'.
struct SvdParts {
    Eigen::MatrixXd H1;          // N x r
    std::vector<double> sigma;   // r positive, descending
    Eigen::MatrixXd P1;          // m x r

    Eigen::MatrixXd reconstruct() const;
};

/// Cholesky factor: A = T'T with T upper triangular, positive diagonal.
struct CholeskyParts {
    Eigen::MatrixXd T;
};

/// Eigenvalues above the rank threshold with sign-fixed eigenvectors.
/// r may be zero (empty parts) for a (near-)zero matrix.
SpectralParts spectral_nonsingular(const Eigen::MatrixXd& A,
                                   const TolerancePolicy& policy = {});

/// Singular values above the rank threshold with sign-fixed frames.
SvdParts svd_nonsingular(const Eigen::MatrixXd& X,
                         const TolerancePolicy& policy = {});

/// Cholesky factorization of a positive definite matrix. Throws
/// DomainError naming the failing leading minor otherwise.
CholeskyParts cholesky(const Eigen::MatrixXd& A,
                       const TolerancePolicy& policy = {});

/// Moore-Penrose inverse via the nonsingular SVD part.
Eigen::MatrixXd moore_penrose(const Eigen::MatrixXd& X,
                              const TolerancePolicy& policy = {});

}  // namespace volform
