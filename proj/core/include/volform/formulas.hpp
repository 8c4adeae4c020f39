// Copyright 2026 The Volform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "volform/spectra.hpp"

namespace volform {

/// A density factor in overflow-safe form: sign * 2^pow2 * exp(log_abs).
/// The power-of-two normalization (the column-sign convention of the
/// eigen/singular frames) is kept out of log_abs so reports can show it
/// verbatim. A degenerate factor (tied spectrum) has value exactly zero,
/// encoded as log_abs = -infinity.
struct JacobianFactor {
    double log_abs = 0.0;
    int sign = +1;
    int pow2 = 0;
    bool degenerate = false;

    /// sign * 2^pow2 * exp(log_abs); may overflow to +/-inf for extreme
    /// spectra, which is why comparisons happen in log space.
    double value() const;

    /// Product-part magnitude without the 2^pow2 normalization.
    double product_part() const;

    JacobianFactor& operator*=(const JacobianFactor& other);
    friend JacobianFactor operator*(JacobianFactor a, const JacobianFactor& b) {
        a *= b;
        return a;
    }
    bool operator==(const JacobianFactor&) const = default;
};

/// Full-rank positive definite spectral decomposition:
/// 2^-m prod_{i<j} (d_i - d_j).
JacobianFactor jac_sd_posdef_full(const std::vector<double>& d);

/// Cholesky factorization A = T'T: 2^m prod t_ii^{m+1-i}.
JacobianFactor jac_cholesky(const Eigen::MatrixXd& T);

/// Rank-q positive semidefinite spectral decomposition:
/// 2^-q prod d_i^{m-q} prod_{i<j} (d_i - d_j).
JacobianFactor jac_sd_semidef(const std::vector<double>& d, int m);

/// Nonsingular indefinite spectral decomposition with m1 positive
/// eigenvalues lambda and m2 negative eigenvalues -delta:
/// 2^-m prod(l_i-l_j) prod(d_i-d_j) prod(l_i+d_j).
JacobianFactor jac_sd_indef_full(const std::vector<double>& lambda,
                                 const std::vector<double>& delta);

/// Singular indefinite spectral decomposition of rank q = q1+q2 in
/// dimension m: the indefinite product times prod l^{m-q} prod d^{m-q}.
JacobianFactor jac_sd_indef_singular(const std::vector<double>& lambda,
                                     const std::vector<double>& delta, int m);

/// Rank-k SVD measure: 2^-k prod s_i^{N+m-2k} prod_{i<j} (s_i^2 - s_j^2).
JacobianFactor jac_svd_measure(const std::vector<double>& sigma, int N, int m);

/// Moore-Penrose inverse of a rank-k rectangular matrix:
/// prod s_i^{-2(N+m-k)}.
JacobianFactor jac_pinv_general(const std::vector<double>& sigma, int N, int m);

/// Moore-Penrose inverse of a definite/semidefinite symmetric matrix with
/// beta nonzero eigenvalue magnitudes: prod |l_i|^{-(2m - beta + 1)}.
JacobianFactor jac_pinv_symmetric(const std::vector<double>& lambda_abs, int m);

/// Moore-Penrose inverse of an indefinite symmetric matrix. Two readings
/// of the positive-eigenvalue exponent exist: the stated one,
/// -2(m - a1/2 - a2 + 1), and the one the measure-composition oracle
/// yields, -(2m - a + 1), which also governs the delta exponent. They
/// coincide exactly when a2 = 1; otherwise `discrepancy` is set and both
/// values are reported.
struct PinvIndefResult {
    JacobianFactor paper_value;
    JacobianFactor oracle_value;
    bool discrepancy = false;
};
PinvIndefResult jac_pinv_indef(const std::vector<double>& lambda,
                               const std::vector<double>& delta, int m);

enum class Transform { SdMeasure, SvdMeasure, Pinv };

/// Dispatch to the measure formula a classified matrix calls for,
/// using the effective count (rank, or distinct-cluster count under
/// multiplicity) of its class. Unsupported combinations (e.g. SD measure
/// of a rectangular class) throw DomainError.
JacobianFactor jacobian_for(const MatrixClass& cls, const Spectrum& spectrum,
                            Transform transform);

}  // namespace volform
