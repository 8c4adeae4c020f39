// Copyright 2026 The Volform Authors
// SPDX-License-Identifier: Apache-2.0

#include "volform/exterior.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>

#include "volform/errors.hpp"

namespace volform {

FormBasis::FormBasis(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > 64)
        throw InputError("FormBasis: at most 64 basis 1-forms supported");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        auto [it, inserted] = index_.emplace(labels_[i], static_cast<int>(i));
        if (!inserted) throw InputError("FormBasis: duplicate label " + labels_[i]);
    }
}

int FormBasis::index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw InputError("FormBasis: unknown label " + label);
    return it->second;
}

void OneForm::add(int pos, double coeff) {
    if (pos < 0 || pos >= 64) throw InputError("OneForm: position out of range");
    if (coeff == 0.0) return;
    double& slot = coeffs_[pos];
    slot += coeff;
    if (slot == 0.0) coeffs_.erase(pos);
}

Multivector Multivector::scalar(double value) {
    Multivector mv;
    if (value != 0.0) mv.terms_.emplace(0ull, value);
    return mv;
}

Multivector Multivector::from_one_form(const OneForm& form) {
    Multivector mv;
    mv.grade_ = 1;
    for (const auto& [pos, coeff] : form.coeffs())
        mv.terms_.emplace(1ull << pos, coeff);
    return mv;
}

double Multivector::coefficient(std::uint64_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? 0.0 : it->second;
}

std::vector<int> Multivector::positions(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

namespace {

// Parity of the permutation that sorts the concatenation (A, B) of two
// disjoint increasing index sets: for each b in B, count elements of A
// above it.
int merge_inversions(std::uint64_t a, std::uint64_t b) {
    int inversions = 0;
    while (b) {
        const int pos = std::countr_zero(b);
        b &= b - 1;
        if (pos < 63) inversions += std::popcount(a >> (pos + 1));
    }
    return inversions;
}

}  // namespace

Multivector wedge(const Multivector& a, const Multivector& b) {
    Multivector out;
    out.grade_ = a.grade_ + b.grade_;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (ma & mb) continue;
            const double sgn = (merge_inversions(ma, mb) % 2 == 0) ? 1.0 : -1.0;
            double& slot = out.terms_[ma | mb];
            slot += sgn * ca * cb;
            if (slot == 0.0) out.terms_.erase(ma | mb);
        }
    }
    return out;
}

double wedge_all(const std::vector<OneForm>& forms, const FormBasis& basis) {
    const int n = basis.size();
    if (static_cast<int>(forms.size()) != n)
        throw DomainError("wedge_all: form count differs from basis dimension");
    Multivector acc = Multivector::scalar(1.0);
    for (const OneForm& f : forms) {
        acc = wedge(acc, Multivector::from_one_form(f));
        if (acc.is_zero()) return 0.0;
    }
    const std::uint64_t top = n == 64 ? ~0ull : (1ull << n) - 1ull;
    return acc.coefficient(top);
}

double det_coefficient(const std::vector<OneForm>& forms, const FormBasis& basis) {
    const int n = basis.size();
    if (static_cast<int>(forms.size()) != n)
        throw DomainError("det_coefficient: form count differs from basis dimension");
    if (n == 0) return 1.0;
    Eigen::MatrixXd coeffs = Eigen::MatrixXd::Zero(n, n);
    for (int row = 0; row < n; ++row)
        for (const auto& [pos, c] : forms[row].coeffs()) coeffs(row, pos) = c;
    return Eigen::PartialPivLU<Eigen::MatrixXd>(coeffs).determinant();
}

}  // namespace volform
