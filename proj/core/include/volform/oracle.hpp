// Copyright 2026 The Volform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "volform/exterior.hpp"

namespace volform {

/// What a differential frame was built for; carried for diagnostics.
struct FrameSpec {
    enum class Kind { SdFull, SdRankQ, Svd };
    Kind kind = Kind::SdFull;
    int m = 0;   // ambient symmetric dimension (SD kinds)
    int N = 0;   // rows (SVD)
    int cols = 0;  // columns (SVD)
    std::vector<double> spectrum;  // signed d (SD) or sigma (SVD)
};

/// The rotated-coordinate differentials of one decomposition: one 1-form
/// per independent matrix entry, over the basis of independent frame and
/// value differentials. The system is square by construction; that is the
/// manifold-dimension identity and it is asserted on build.
struct DifferentialFrame {
    FrameSpec spec;
    FormBasis basis;
    std::vector<OneForm> entry_forms;
};

/// Frame of the spectral decomposition of a rank-q symmetric matrix in
/// dimension m with signed nonzero eigenvalues d (positives first
/// descending, then negatives by descending magnitude). q = d.size().
/// Basis: s(i,j) for 1<=i<j<=q, k(i,j) for q<i<=m, 1<=j<=q, dd(i).
DifferentialFrame sd_frame(int m, const std::vector<double>& d);

/// Frame of the rank-k SVD of an N x m matrix with singular values sigma.
/// Basis: v(i,j), w(i,j) for i<j<=k, kH(i,j) for k<i<=N, kP(i,j) for
/// k<i<=m, and ds(i). |basis| = Nk + mk - k^2.
DifferentialFrame svd_frame(int N, int m, int k, const std::vector<double>& sigma);

/// |top-form coefficient| of the frame's entry forms, computed both by
/// incremental wedge and by the coefficient determinant. The two paths
/// must agree to 1e-10 relative; disagreement raises InternalError.
double oracle_density(const DifferentialFrame& frame);

enum class TheoremId { T1, T2, T3Measure, Eq2, SdFull };

std::string theorem_name(TheoremId id);

/// Case dimensions, interpreted per theorem:
///   T1:        (q1, q2) positive/negative counts, m = q1 + q2
///   T2:        m ambient, (q1, q2) with q1 + q2 < m
///   Eq2:       m ambient, q1 = rank (q2 = 0)
///   SdFull:    m ambient (all positive, full rank)
///   T3Measure: N, cols, k
struct TheoremDims {
    int m = 0;
    int q1 = 0;
    int q2 = 0;
    int N = 0;
    int cols = 0;
    int k = 0;

    bool operator==(const TheoremDims&) const = default;
};

std::string dims_to_string(TheoremId id, const TheoremDims& dims);

struct TrialResult {
    std::vector<double> spectrum;  // signed values (or sigma) used
    double oracle_value = 0.0;     // |frame density|
    double formula_value = 0.0;    // closed-form product part (no 2^pow2)
    double rel_err = 0.0;
};

/// Per-trial oracle-vs-formula comparison under a deterministic seed.
/// The 2^{+-q} normalization is excluded from the comparison: it encodes
/// the column-sign double cover, which a tangent-space density cannot see.
struct VerificationReport {
    std::string theorem_id;
    std::string dims;
    int trials = 0;
    std::uint64_t seed = 0;
    double rel_tol = 0.0;
    std::vector<TrialResult> per_trial;
    double max_rel_err = 0.0;
    bool pass = false;
    std::vector<std::string> discrepancies;
};

/// Draw `trials` random spectra for the theorem's class (log-uniform
/// magnitudes in [0.1, 10], near-ties resampled) and compare the frame
/// density against the closed-form product part. Deterministic: trial i
/// uses an RNG stream seeded with seed XOR i.
VerificationReport verify_theorem(TheoremId id, const TheoremDims& dims,
                                  int trials, std::uint64_t seed,
                                  double rel_tol = 1e-9);

enum class PinvKind { General, Symmetric, Indefinite };

/// Ratio of the image-side measure (evaluated at the reciprocal spectrum)
/// to the source-side measure, times the derivative factors of the
/// value-wise inversion. This is the change-of-variables route to the
/// Moore-Penrose Jacobians, computed without using their closed forms.
///
/// spectrum: sigma for General (dims N, cols); magnitudes for Symmetric
/// (dims m); signed values for Indefinite (dims m, positives first).
/// Zero or tied values are a DomainError.
double composition_pinv_ratio(PinvKind kind, const TheoremDims& dims,
                              const std::vector<double>& spectrum);

}  // namespace volform
