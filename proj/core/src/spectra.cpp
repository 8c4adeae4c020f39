// Copyright 2026 The Volform Authors
// SPDX-License-Identifier: Apache-2.0

#include "volform/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "volform/errors.hpp"

namespace volform {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool all_ones(const std::vector<int>& mults) {
    return std::all_of(mults.begin(), mults.end(), [](int v) { return v == 1; });
}

std::vector<double> repeat(const std::vector<double>& values,
                           const std::vector<int>& mults) {
    std::vector<double> out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out.insert(out.end(), mults[i], values[i]);
    return out;
}

}  // namespace

int Spectrum::positive_count() const {
    return std::accumulate(positive_multiplicities.begin(),
                           positive_multiplicities.end(), 0);
}

int Spectrum::negative_count() const {
    return std::accumulate(negative_multiplicities.begin(),
                           negative_multiplicities.end(), 0);
}

std::vector<double> Spectrum::positives_with_multiplicity() const {
    return repeat(positives, positive_multiplicities);
}

std::vector<double> Spectrum::negative_magnitudes_with_multiplicity() const {
    return repeat(negative_magnitudes, negative_multiplicities);
}

std::vector<double> Spectrum::signed_values_with_multiplicity() const {
    std::vector<double> out = positives_with_multiplicity();
    for (double mag : negative_magnitudes_with_multiplicity()) out.push_back(-mag);
    return out;
}

std::string class_name(const MatrixClass& cls) {
    return std::visit(
        Overloaded{[](const PosDef&) { return "PosDef"; },
                   [](const PosDefMult&) { return "PosDefMult"; },
                   [](const SemiDef&) { return "SemiDef"; },
                   [](const SemiDefMult&) { return "SemiDefMult"; },
                   [](const NegDef&) { return "NegDef"; },
                   [](const NegDefMult&) { return "NegDefMult"; },
                   [](const NegSemiDef&) { return "NegSemiDef"; },
                   [](const NegSemiDefMult&) { return "NegSemiDefMult"; },
                   [](const Indef&) { return "Indef"; },
                   [](const IndefMult&) { return "IndefMult"; },
                   [](const SemiIndef&) { return "SemiIndef"; },
                   [](const SemiIndefMult&) { return "SemiIndefMult"; },
                   [](const Rect&) { return "Rect"; },
                   [](const RectMult&) { return "RectMult"; }},
        cls);
}

ClusterSpec cluster_values(const std::vector<double>& values, double cluster_tol) {
    if (cluster_tol < 0.0) throw InputError("cluster_tol must be nonnegative");
    ClusterSpec spec;
    if (values.empty()) return spec;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        if (values[i] < values[i + 1])
            throw InputError("cluster_values expects a descending list");
    }

    // Single linkage on adjacent gaps: a chain of small gaps merges.
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {  // [start, end)
        double mean = 0.0;
        for (std::size_t j = start; j < end; ++j) mean += values[j];
        mean /= static_cast<double>(end - start);
        spec.distinct_values.push_back(mean);
        spec.multiplicities.push_back(static_cast<int>(end - start));
        start = end;
    };
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        const double gap = values[i] - values[i + 1];
        const double scale = std::max(std::abs(values[i]), std::abs(values[i + 1]));
        const double rel = scale > 0.0 ? gap / scale : 0.0;
        if (rel > cluster_tol) flush(i + 1);
    }
    flush(values.size());
    return spec;
}

namespace {

struct SplitSpectrum {
    std::vector<double> positives;      // descending
    std::vector<double> neg_magnitudes; // descending magnitudes
    int zero_count = 0;
};

SplitSpectrum split_by_sign(const Eigen::VectorXd& values, double rank_tol) {
    SplitSpectrum out;
    const double scale = values.size() ? values.cwiseAbs().maxCoeff() : 0.0;
    const double threshold = rank_tol * scale;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        const double v = values[i];
        if (std::abs(v) <= threshold || v == 0.0)
            ++out.zero_count;
        else if (v > 0.0)
            out.positives.push_back(v);
        else
            out.neg_magnitudes.push_back(-v);
    }
    std::sort(out.positives.rbegin(), out.positives.rend());
    std::sort(out.neg_magnitudes.rbegin(), out.neg_magnitudes.rend());
    return out;
}

Spectrum make_spectrum(const SplitSpectrum& split, double cluster_tol) {
    Spectrum s;
    ClusterSpec pos = cluster_values(split.positives, cluster_tol);
    ClusterSpec neg = cluster_values(split.neg_magnitudes, cluster_tol);
    s.positives = std::move(pos.distinct_values);
    s.positive_multiplicities = std::move(pos.multiplicities);
    s.negative_magnitudes = std::move(neg.distinct_values);
    s.negative_multiplicities = std::move(neg.multiplicities);
    s.zero_count = split.zero_count;
    return s;
}

MatrixClass tag_symmetric(int m, const Spectrum& s) {
    const int q1 = s.positive_count();
    const int q2 = s.negative_count();
    const int q = q1 + q2;
    const int l1 = static_cast<int>(s.positives.size());
    const int l2 = static_cast<int>(s.negative_magnitudes.size());
    const bool simple = all_ones(s.positive_multiplicities) &&
                        all_ones(s.negative_multiplicities);
    const bool singular = s.zero_count > 0;

    if (q == 0) return SemiDef{m, 0};  // zero matrix
    if (q2 == 0) {
        if (!singular) return simple ? MatrixClass(PosDef{m})
                                     : MatrixClass(PosDefMult{m, l1});
        return simple ? MatrixClass(SemiDef{m, q})
                      : MatrixClass(SemiDefMult{m, q, l1});
    }
    if (q1 == 0) {
        if (!singular) return simple ? MatrixClass(NegDef{m})
                                     : MatrixClass(NegDefMult{m, l2});
        return simple ? MatrixClass(NegSemiDef{m, q})
                      : MatrixClass(NegSemiDefMult{m, q, l2});
    }
    if (!singular) return simple ? MatrixClass(Indef{m, q1, q2})
                                 : MatrixClass(IndefMult{m, l1, l2});
    return simple ? MatrixClass(SemiIndef{m, q, q1, q2})
                  : MatrixClass(SemiIndefMult{m, q, l1, l2});
}

}  // namespace

std::pair<MatrixClass, Spectrum> classify_symmetric(const Eigen::MatrixXd& A,
                                                    const TolerancePolicy& policy) {
    if (A.rows() != A.cols())
        throw InputError("classify_symmetric: matrix is not square");
    if (A.size() == 0) throw InputError("classify_symmetric: empty matrix");
    const double scale = A.cwiseAbs().maxCoeff();
    const double asym = (A - A.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * std::max(scale, 1e-300))
        throw InputError("classify_symmetric: matrix is not symmetric");
    const Eigen::MatrixXd sym = 0.5 * (A + A.transpose());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym,
                                                          Eigen::EigenvaluesOnly);
    Spectrum s = make_spectrum(split_by_sign(solver.eigenvalues(), policy.rank_tol),
                               policy.cluster_tol);
    const int m = static_cast<int>(A.rows());
    return {tag_symmetric(m, s), s};
}

std::pair<MatrixClass, Spectrum> classify_rect(const Eigen::MatrixXd& X,
                                               const TolerancePolicy& policy) {
    if (X.rows() == 0 || X.cols() == 0)
        throw InputError("classify_rect: empty matrix");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(X);
    Eigen::VectorXd sv = svd.singularValues();
    SplitSpectrum split = split_by_sign(sv, policy.rank_tol);
    // Zero count of the full min(N,m) list, not just the computed values.
    split.zero_count = static_cast<int>(std::min(X.rows(), X.cols())) -
                       static_cast<int>(split.positives.size());
    Spectrum s = make_spectrum(split, policy.cluster_tol);

    const int N = static_cast<int>(X.rows());
    const int m = static_cast<int>(X.cols());
    const int q = s.positive_count();
    const int l = static_cast<int>(s.positives.size());
    if (all_ones(s.positive_multiplicities))
        return {Rect{N, m, q}, s};
    return {RectMult{N, m, q, l}, s};
}

}  // namespace volform
