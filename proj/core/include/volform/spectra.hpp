// Copyright 2026 The Volform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace volform {

/// Relative tolerances separating floating-point noise from structure.
/// rank_tol decides which eigenvalues / singular values count as zero,
/// cluster_tol decides which nonzero values count as equal. The two knobs
/// are independent.
struct TolerancePolicy {
    double rank_tol = 1e-10;
    double cluster_tol = 1e-8;
};

/// Distinct values of a descending list together with their repetition
/// counts. Each representative is the arithmetic mean of its cluster.
struct ClusterSpec {
    std::vector<double> distinct_values;
    std::vector<int> multiplicities;

    bool operator==(const ClusterSpec&) const = default;
};

/// Signed eigenvalue (or singular value) structure of a matrix: distinct
/// positive values descending, distinct negative magnitudes descending,
/// per-cluster multiplicities, and the count of values treated as zero.
struct Spectrum {
    std::vector<double> positives;
    std::vector<double> negative_magnitudes;
    std::vector<int> positive_multiplicities;
    std::vector<int> negative_multiplicities;
    int zero_count = 0;

    /// Number of positive values counted with multiplicity.
    int positive_count() const;
    /// Number of negative values counted with multiplicity.
    int negative_count() const;
    /// Rank: positive_count() + negative_count().
    int rank() const { return positive_count() + negative_count(); }

    /// Positive values repeated per multiplicity, descending.
    std::vector<double> positives_with_multiplicity() const;
    /// Negative magnitudes repeated per multiplicity, descending.
    std::vector<double> negative_magnitudes_with_multiplicity() const;
    /// Signed values with multiplicity: positives descending, then
    /// negatives by descending magnitude.
    std::vector<double> signed_values_with_multiplicity() const;
};

// Matrix taxonomy tags. Counts follow the conventions of the measure
// formulas: m/N are ambient dimensions, q is rank, suffix-1/-2 split
// positive/negative, l and k count distinct values under multiplicity.
struct PosDef {
    int m;
    bool operator==(const PosDef&) const = default;
};
struct PosDefMult {
    int m, l;
    bool operator==(const PosDefMult&) const = default;
};
struct SemiDef {
    int m, q;
    bool operator==(const SemiDef&) const = default;
};
struct SemiDefMult {
    int m, q, k;
    bool operator==(const SemiDefMult&) const = default;
};
struct NegDef {
    int m;
    bool operator==(const NegDef&) const = default;
};
struct NegDefMult {
    int m, l;
    bool operator==(const NegDefMult&) const = default;
};
struct NegSemiDef {
    int m, q;
    bool operator==(const NegSemiDef&) const = default;
};
struct NegSemiDefMult {
    int m, q, k;
    bool operator==(const NegSemiDefMult&) const = default;
};
struct Indef {
    int m, m1, m2;
    bool operator==(const Indef&) const = default;
};
struct IndefMult {
    int m, l1, l2;
    bool operator==(const IndefMult&) const = default;
};
struct SemiIndef {
    int m, q, q1, q2;
    bool operator==(const SemiIndef&) const = default;
};
struct SemiIndefMult {
    int m, q, k1, k2;
    bool operator==(const SemiIndefMult&) const = default;
};
struct Rect {
    int N, m, q;
    bool operator==(const Rect&) const = default;
};
struct RectMult {
    int N, m, q, l;
    bool operator==(const RectMult&) const = default;
};

using MatrixClass =
    std::variant<PosDef, PosDefMult, SemiDef, SemiDefMult, NegDef, NegDefMult,
                 NegSemiDef, NegSemiDefMult, Indef, IndefMult, SemiIndef,
                 SemiIndefMult, Rect, RectMult>;

/// Tag name of a MatrixClass alternative, e.g. "Indef".
std::string class_name(const MatrixClass& cls);

/// Merge adjacent values of a descending list whose relative gap is at
/// most cluster_tol (single-linkage chaining). Empty input yields an
/// empty ClusterSpec.
ClusterSpec cluster_values(const std::vector<double>& values, double cluster_tol);

/// Classify a symmetric matrix and extract its clustered spectrum.
/// The input is symmetrized internally; asymmetry beyond 1e-12 relative
/// is an InputError.
std::pair<MatrixClass, Spectrum> classify_symmetric(
    const Eigen::MatrixXd& A, const TolerancePolicy& policy = {});

/// Classify a rectangular matrix by its singular values.
std::pair<MatrixClass, Spectrum> classify_rect(
    const Eigen::MatrixXd& X, const TolerancePolicy& policy = {});

}  // namespace volform
