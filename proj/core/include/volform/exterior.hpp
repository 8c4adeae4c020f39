// Copyright 2026 The Volform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace volform {

/// Ordered basis of named 1-forms. Labels are free-form strings
/// ("s(1,2)", "dd(3)", ...); positions are 0-based.
class FormBasis {
  public:
    FormBasis() = default;
    explicit FormBasis(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int pos) const { return labels_.at(pos); }
    /// Position of a label; InputError if unknown.
    int index(const std::string& label) const;

  private:
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
};

/// Sparse 1-form: position -> coefficient, zero coefficients never stored.
class OneForm {
  public:
    OneForm() = default;

    /// Adds c * e_pos, erasing the entry if the sum cancels to zero.
    void add(int pos, double coeff);

    const std::map<int, double>& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

  private:
    std::map<int, double> coeffs_;
};

/// Sparse multivector of homogeneous grade over a basis of at most 64
/// 1-forms. Each term is a strictly increasing index set (stored as a
/// bitmask) with a nonzero coefficient.
class Multivector {
  public:
    static Multivector scalar(double value);
    static Multivector from_one_form(const OneForm& form);

    int grade() const { return grade_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::uint64_t, double>& terms() const { return terms_; }
    /// Coefficient of the term with the given index set (0 if absent).
    double coefficient(std::uint64_t mask) const;

    /// Strictly increasing positions of a term mask.
    static std::vector<int> positions(std::uint64_t mask);

    friend Multivector wedge(const Multivector& a, const Multivector& b);

  private:
    int grade_ = 0;
    std::map<std::uint64_t, double> terms_;
};

/// Exterior product. Coefficients combine with the inversion-count sign
/// of sorting the concatenated index tuples; anticommutativity
/// wedge(a,b) = (-1)^{ga gb} wedge(b,a) follows.
Multivector wedge(const Multivector& a, const Multivector& b);

/// Wedge together n 1-forms over an n-dimensional basis and return the
/// coefficient of the top form. Length mismatch is an InputError.
double wedge_all(const std::vector<OneForm>& forms, const FormBasis& basis);

/// Same top-form coefficient computed as the determinant of the n x n
/// coefficient matrix (LU with partial pivoting). Cross-validates
/// wedge_all.
double det_coefficient(const std::vector<OneForm>& forms, const FormBasis& basis);

}  // namespace volform
