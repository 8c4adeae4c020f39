// Copyright 2026 The Volform Authors
// SPDX-License-Identifier: Apache-2.0

#include "volform/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "volform/errors.hpp"

namespace volform {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Strictly descending positive, or degenerate on an exact tie.
// Anything else is a caller error.
enum class ListState { Ok, Tied };

ListState check_descending_positive(const std::vector<double>& v,
                                    const char* what) {
    ListState state = ListState::Ok;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0.0))
            throw InputError(std::string(what) + ": values must be positive");
        if (i + 1 < v.size()) {
            if (v[i] < v[i + 1])
                throw InputError(std::string(what) + ": values must be descending");
            if (v[i] == v[i + 1]) state = ListState::Tied;
        }
    }
    return state;
}

JacobianFactor degenerate_factor(int pow2) {
    return JacobianFactor{kNegInf, +1, pow2, true};
}

// Shared accumulation for the spectral-decomposition measure family:
//   prod l_i^{m-q} prod d_j^{m-q} prod_{i<j}(l_i-l_j) prod_{i<j}(d_i-d_j)
//   prod_{i,j}(l_i+d_j),  pow2 = -q,  q = |l| + |d|.
// Term order is fixed (powers, lambda pairs, delta pairs, cross) so the
// boundary reductions (q = m, empty delta) agree field-for-field.
JacobianFactor sd_measure_product(const std::vector<double>& lambda,
                                  const std::vector<double>& delta, int m,
                                  const char* what) {
    const int q = static_cast<int>(lambda.size() + delta.size());
    if (q > m)
        throw DomainError(std::string(what) + ": rank exceeds dimension");
    const bool tied =
        check_descending_positive(lambda, what) == ListState::Tied ||
        check_descending_positive(delta, what) == ListState::Tied;
    if (tied) return degenerate_factor(-q);

    double log_abs = 0.0;
    const double power = static_cast<double>(m - q);
    for (double l : lambda) log_abs += power * std::log(l);
    for (double d : delta) log_abs += power * std::log(d);
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (std::size_t j = i + 1; j < lambda.size(); ++j)
            log_abs += std::log(lambda[i] - lambda[j]);
    for (std::size_t i = 0; i < delta.size(); ++i)
        for (std::size_t j = i + 1; j < delta.size(); ++j)
            log_abs += std::log(delta[i] - delta[j]);
    for (double l : lambda)
        for (double d : delta) log_abs += std::log(l + d);
    return JacobianFactor{log_abs, +1, -q, false};
}

}  // namespace

double JacobianFactor::value() const {
    return sign * std::ldexp(std::exp(log_abs), pow2);
}

double JacobianFactor::product_part() const { return std::exp(log_abs); }

JacobianFactor& JacobianFactor::operator*=(const JacobianFactor& other) {
    log_abs += other.log_abs;
    sign *= other.sign;
    pow2 += other.pow2;
    degenerate = degenerate || other.degenerate;
    return *this;
}

JacobianFactor jac_sd_posdef_full(const std::vector<double>& d) {
    return sd_measure_product(d, {}, static_cast<int>(d.size()),
                              "jac_sd_posdef_full");
}

JacobianFactor jac_cholesky(const Eigen::MatrixXd& T) {
    if (T.rows() != T.cols()) throw InputError("jac_cholesky: T is not square");
    const int m = static_cast<int>(T.rows());
    double log_abs = 0.0;
    for (int i = 0; i < m; ++i) {
        if (!(T(i, i) > 0.0))
            throw DomainError("jac_cholesky: diagonal must be positive");
        log_abs += static_cast<double>(m - i) * std::log(T(i, i));
    }
    return JacobianFactor{log_abs, +1, m, false};
}

JacobianFactor jac_sd_semidef(const std::vector<double>& d, int m) {
    return sd_measure_product(d, {}, m, "jac_sd_semidef");
}

JacobianFactor jac_sd_indef_full(const std::vector<double>& lambda,
                                 const std::vector<double>& delta) {
    return sd_measure_product(lambda, delta,
                              static_cast<int>(lambda.size() + delta.size()),
                              "jac_sd_indef_full");
}

JacobianFactor jac_sd_indef_singular(const std::vector<double>& lambda,
                                     const std::vector<double>& delta, int m) {
    return sd_measure_product(lambda, delta, m, "jac_sd_indef_singular");
}

JacobianFactor jac_svd_measure(const std::vector<double>& sigma, int N, int m) {
    const int k = static_cast<int>(sigma.size());
    if (k > std::min(N, m))
        throw DomainError("jac_svd_measure: rank exceeds min(N,m)");
    if (check_descending_positive(sigma, "jac_svd_measure") == ListState::Tied)
        return degenerate_factor(-k);

    double log_abs = 0.0;
    const double power = static_cast<double>(N + m - 2 * k);
    for (double s : sigma) log_abs += power * std::log(s);
    // sigma_i^2 - sigma_j^2 split as (si - sj)(si + sj): safe at 1e150.
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            log_abs += std::log(sigma[i] - sigma[j]) +
                       std::log(sigma[i] + sigma[j]);
    return JacobianFactor{log_abs, +1, -k, false};
}

JacobianFactor jac_pinv_general(const std::vector<double>& sigma, int N, int m) {
    const int k = static_cast<int>(sigma.size());
    if (k > std::min(N, m))
        throw DomainError("jac_pinv_general: rank exceeds min(N,m)");
    check_descending_positive(sigma, "jac_pinv_general");
    double log_abs = 0.0;
    const double power = -2.0 * static_cast<double>(N + m - k);
    for (double s : sigma) log_abs += power * std::log(s);
    return JacobianFactor{log_abs, +1, 0, false};
}

JacobianFactor jac_pinv_symmetric(const std::vector<double>& lambda_abs, int m) {
    const int beta = static_cast<int>(lambda_abs.size());
    if (beta > m) throw DomainError("jac_pinv_symmetric: rank exceeds dimension");
    check_descending_positive(lambda_abs, "jac_pinv_symmetric");
    double log_abs = 0.0;
    const double power = -static_cast<double>(2 * m - beta + 1);
    for (double l : lambda_abs) log_abs += power * std::log(l);
    return JacobianFactor{log_abs, +1, 0, false};
}

PinvIndefResult jac_pinv_indef(const std::vector<double>& lambda,
                               const std::vector<double>& delta, int m) {
    const int a1 = static_cast<int>(lambda.size());
    const int a2 = static_cast<int>(delta.size());
    const int a = a1 + a2;
    if (a > m) throw DomainError("jac_pinv_indef: rank exceeds dimension");
    if (a2 == 0) {
        // No negative part: the definite-case exponent applies.
        JacobianFactor f = jac_pinv_symmetric(lambda, m);
        return PinvIndefResult{f, f, false};
    }
    check_descending_positive(lambda, "jac_pinv_indef");
    check_descending_positive(delta, "jac_pinv_indef");

    // Stated lambda exponent: -2(m - a1/2 - a2 + 1); delta exponent and
    // the composition-derived exponent are both -(2m - a + 1). The two
    // lambda readings coincide exactly when a2 = 1.
    const double paper_lambda_exp = -(2.0 * m - a1 - 2.0 * a2 + 2.0);
    const double shared_exp = -static_cast<double>(2 * m - a + 1);

    double paper_log = 0.0, oracle_log = 0.0;
    for (double l : lambda) {
        paper_log += paper_lambda_exp * std::log(l);
        oracle_log += shared_exp * std::log(l);
    }
    for (double d : delta) {
        paper_log += shared_exp * std::log(d);
        oracle_log += shared_exp * std::log(d);
    }
    PinvIndefResult result;
    result.paper_value = JacobianFactor{paper_log, +1, 0, false};
    result.oracle_value = JacobianFactor{oracle_log, +1, 0, false};
    result.discrepancy = (a1 >= 1 && a2 >= 2);
    return result;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void unsupported(const MatrixClass& cls, const char* transform) {
    throw DomainError("jacobian_for: " + class_name(cls) +
                      " does not support the " + transform + " transform");
}

JacobianFactor sd_dispatch(const MatrixClass& cls, const Spectrum& s) {
    const auto& pos = s.positives;
    const auto& neg = s.negative_magnitudes;
    return std::visit(
        Overloaded{
            [&](const PosDef&) { return jac_sd_posdef_full(pos); },
            [&](const PosDefMult& c) { return jac_sd_semidef(pos, c.m); },
            [&](const SemiDef& c) { return jac_sd_semidef(pos, c.m); },
            [&](const SemiDefMult& c) { return jac_sd_semidef(pos, c.m); },
            [&](const NegDef&) { return jac_sd_posdef_full(neg); },
            [&](const NegDefMult& c) { return jac_sd_semidef(neg, c.m); },
            [&](const NegSemiDef& c) { return jac_sd_semidef(neg, c.m); },
            [&](const NegSemiDefMult& c) { return jac_sd_semidef(neg, c.m); },
            [&](const Indef& c) { return jac_sd_indef_full(pos, neg); },
            [&](const IndefMult& c) {
                return jac_sd_indef_singular(pos, neg, c.m);
            },
            [&](const SemiIndef& c) {
                return jac_sd_indef_singular(pos, neg, c.m);
            },
            [&](const SemiIndefMult& c) {
                return jac_sd_indef_singular(pos, neg, c.m);
            },
            [&](const Rect&) -> JacobianFactor { unsupported(cls, "SD"); },
            [&](const RectMult&) -> JacobianFactor { unsupported(cls, "SD"); }},
        cls);
}

JacobianFactor svd_dispatch(const MatrixClass& cls, const Spectrum& s) {
    return std::visit(
        Overloaded{
            [&](const Rect& c) { return jac_svd_measure(s.positives, c.N, c.m); },
            [&](const RectMult& c) {
                return jac_svd_measure(s.positives, c.N, c.m);
            },
            [&](const auto&) -> JacobianFactor { unsupported(cls, "SVD"); }},
        cls);
}

JacobianFactor pinv_dispatch(const MatrixClass& cls, const Spectrum& s) {
    const auto& pos = s.positives;
    const auto& neg = s.negative_magnitudes;
    return std::visit(
        Overloaded{
            [&](const PosDef& c) { return jac_pinv_symmetric(pos, c.m); },
            [&](const PosDefMult& c) { return jac_pinv_symmetric(pos, c.m); },
            [&](const SemiDef& c) { return jac_pinv_symmetric(pos, c.m); },
            [&](const SemiDefMult& c) { return jac_pinv_symmetric(pos, c.m); },
            [&](const NegDef& c) { return jac_pinv_symmetric(neg, c.m); },
            [&](const NegDefMult& c) { return jac_pinv_symmetric(neg, c.m); },
            [&](const NegSemiDef& c) { return jac_pinv_symmetric(neg, c.m); },
            [&](const NegSemiDefMult& c) { return jac_pinv_symmetric(neg, c.m); },
            [&](const Indef& c) {
                return jac_pinv_indef(pos, neg, c.m).paper_value;
            },
            [&](const IndefMult& c) {
                return jac_pinv_indef(pos, neg, c.m).paper_value;
            },
            [&](const SemiIndef& c) {
                return jac_pinv_indef(pos, neg, c.m).paper_value;
            },
            [&](const SemiIndefMult& c) {
                return jac_pinv_indef(pos, neg, c.m).paper_value;
            },
            [&](const Rect& c) { return jac_pinv_general(s.positives, c.N, c.m); },
            [&](const RectMult& c) {
                return jac_pinv_general(s.positives, c.N, c.m);
            }},
        cls);
}

}  // namespace

JacobianFactor jacobian_for(const MatrixClass& cls, const Spectrum& spectrum,
                            Transform transform) {
    switch (transform) {
        case Transform::SdMeasure: return sd_dispatch(cls, spectrum);
        case Transform::SvdMeasure: return svd_dispatch(cls, spectrum);
        case Transform::Pinv: return pinv_dispatch(cls, spectrum);
    }
    throw InputError("jacobian_for: unknown transform");
}

}  // namespace volform
