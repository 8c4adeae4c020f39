// Copyright 2026 The Volform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>

namespace volform {

/// Two independent Monte Carlo estimates of the same integral with their
/// standard errors and the z-score of their difference.
struct McResult {
    double lhs_estimate = 0.0;
    double rhs_estimate = 0.0;
    double lhs_stderr = 0.0;
    double rhs_stderr = 0.0;
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
    double z_score = 0.0;
};

/// Volume of the Stiefel manifold V_{k,n} under the wedge-product frame
/// measure: 2^k pi^{kn/2} / Gamma_k(n/2).
double stiefel_volume(int k, int n);
double log_stiefel_volume(int k, int n);

/// Haar-distributed n x k orthonormal frame: Gaussian matrix, thin QR,
/// column signs fixed so the R diagonal is positive.
Eigen::MatrixXd haar_stiefel(int n, int k, std::mt19937_64& rng);
inline Eigen::MatrixXd haar_orthogonal(int n, std::mt19937_64& rng) {
    return haar_stiefel(n, n, rng);
}

/// Deliberate defects for negative-control runs.
enum class Perturbation {
    None,
    DropPow2,         // omit the 2^{-m} (or 2^{-k}) normalization
    ExponentPlusOne,  // add 1 to the pinv Jacobian exponent
};

/// Check the spectral-decomposition factorization of the symmetric-matrix
/// Lebesgue measure at dimension m in {2,3}, including its 2^-m constant.
/// LHS integrates f(A) = exp(-tr A^2) over the positive definite cone in
/// entry coordinates; RHS integrates the factorized form over eigenvalues
/// (ordered cone, sampled unordered then sorted with a 1/m! correction)
/// and a Haar frame.
McResult mc_sd_factorization_check(int m, std::int64_t n_samples,
                                   std::uint64_t seed,
                                   Perturbation perturb = Perturbation::None);

/// Check the Moore-Penrose change of variables on rank-k N x m matrices:
/// integral of g(X^+) J(X) over the X measure against the integral of
/// g(Y) over the Y measure, g(Y) = exp(-tr Y'Y), J = prod s^{-2(N+m-k)}.
/// The LHS forms X from sampled (sigma, frames) and runs the actual
/// pseudoinverse; the RHS samples the image side directly.
McResult mc_pinv_check(int N, int m, int k, std::int64_t n_samples,
                       std::uint64_t seed,
                       Perturbation perturb = Perturbation::None);

}  // namespace volform
