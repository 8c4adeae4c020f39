// Copyright 2026 The Volform Authors
// SPDX-License-Identifier: Apache-2.0

#include "volform/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "volform/errors.hpp"
#include "volform/formulas.hpp"

namespace volform {

namespace {

std::string pair_label(const char* stem, int i, int j) {
    std::ostringstream os;
    os << stem << "(" << i << "," << j << ")";
    return os.str();
}

std::string single_label(const char* stem, int i) {
    std::ostringstream os;
    os << stem << "(" << i << ")";
    return os.str();
}

}  // namespace

DifferentialFrame sd_frame(int m, const std::vector<double>& d) {
    const int q = static_cast<int>(d.size());
    if (q > m) throw InputError("sd_frame: more eigenvalues than dimensions");
    for (double v : d)
        if (v == 0.0) throw InputError("sd_frame: zero eigenvalue");

    // Basis: s(i,j) skew rotations among kept eigenvectors, k(i,j) mixing
    // with the null space, dd(i) eigenvalue differentials. 1-based labels.
    std::vector<std::string> labels;
    for (int i = 1; i <= q; ++i)
        for (int j = i + 1; j <= q; ++j) labels.push_back(pair_label("s", i, j));
    for (int i = q + 1; i <= m; ++i)
        for (int j = 1; j <= q; ++j) labels.push_back(pair_label("k", i, j));
    for (int i = 1; i <= q; ++i) labels.push_back(single_label("dd", i));
    FormBasis basis(std::move(labels));

    // Independent entries of H'dA H: the lower triangle of the leading
    // q x q block plus the (m-q) x q block below it.
    //   M[i][i] = dd(i)
    //   M[i][j] = (d_j - d_i) s(j,i)   for j < i <= q
    //   M[i][j] = d_j k(i,j)           for i > q, j <= q
    std::vector<OneForm> entries;
    for (int i = 1; i <= q; ++i) {
        for (int j = 1; j <= i; ++j) {
            OneForm form;
            if (i == j)
                form.add(basis.index(single_label("dd", i)), 1.0);
            else
                form.add(basis.index(pair_label("s", j, i)), d[j - 1] - d[i - 1]);
            entries.push_back(std::move(form));
        }
    }
    for (int i = q + 1; i <= m; ++i) {
        for (int j = 1; j <= q; ++j) {
            OneForm form;
            form.add(basis.index(pair_label("k", i, j)), d[j - 1]);
            entries.push_back(std::move(form));
        }
    }

    if (static_cast<int>(entries.size()) != basis.size())
        throw InternalError("sd_frame: entry count differs from basis size");
    DifferentialFrame frame;
    frame.spec = FrameSpec{q == m ? FrameSpec::Kind::SdFull : FrameSpec::Kind::SdRankQ,
                           m, 0, 0, d};
    frame.basis = std::move(basis);
    frame.entry_forms = std::move(entries);
    return frame;
}

DifferentialFrame svd_frame(int N, int m, int k,
                            const std::vector<double>& sigma) {
    if (static_cast<int>(sigma.size()) != k)
        throw InputError("svd_frame: sigma length differs from k");
    if (k > std::min(N, m)) throw InputError("svd_frame: k exceeds min(N,m)");
    for (double s : sigma)
        if (!(s > 0.0)) throw InputError("svd_frame: nonpositive singular value");

    std::vector<std::string> labels;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) labels.push_back(pair_label("v", i, j));
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) labels.push_back(pair_label("w", i, j));
    for (int i = k + 1; i <= N; ++i)
        for (int j = 1; j <= k; ++j) labels.push_back(pair_label("kH", i, j));
    for (int i = k + 1; i <= m; ++i)
        for (int j = 1; j <= k; ++j) labels.push_back(pair_label("kP", i, j));
    for (int i = 1; i <= k; ++i) labels.push_back(single_label("ds", i));
    FormBasis basis(std::move(labels));

    // Blocks of H'dX P: top-left k x k is V S + dS - S W with V, W skew;
    // bottom-left is K_H S; top-right is -S K_P'.
    auto skew = [&](const char* stem, int i, int j) {
        // Entry (i,j) of the skew matrix whose independent components are
        // stem(a,b) for a < b.
        OneForm form;
        if (i < j)
            form.add(basis.index(pair_label(stem, i, j)), 1.0);
        else
            form.add(basis.index(pair_label(stem, j, i)), -1.0);
        return form;
    };

    std::vector<OneForm> entries;
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            OneForm form;
            if (i == j) {
                form.add(basis.index(single_label("ds", i)), 1.0);
            } else {
                for (const auto& [pos, c] : skew("v", i, j).coeffs())
                    form.add(pos, c * sigma[j - 1]);
                for (const auto& [pos, c] : skew("w", i, j).coeffs())
                    form.add(pos, -c * sigma[i - 1]);
            }
            entries.push_back(std::move(form));
        }
    }
    for (int i = k + 1; i <= N; ++i) {
        for (int j = 1; j <= k; ++j) {
            OneForm form;
            form.add(basis.index(pair_label("kH", i, j)), sigma[j - 1]);
            entries.push_back(std::move(form));
        }
    }
    for (int i = 1; i <= k; ++i) {
        for (int j = k + 1; j <= m; ++j) {
            OneForm form;
            form.add(basis.index(pair_label("kP", j, i)), -sigma[i - 1]);
            entries.push_back(std::move(form));
        }
    }

    // |basis| = Nk + mk - k^2 must equal the entry count.
    if (static_cast<int>(entries.size()) != basis.size() ||
        basis.size() != N * k + m * k - k * k)
        throw InternalError("svd_frame: dimension identity violated");
    DifferentialFrame frame;
    frame.spec = FrameSpec{FrameSpec::Kind::Svd, 0, N, m, sigma};
    frame.basis = std::move(basis);
    frame.entry_forms = std::move(entries);
    return frame;
}

double oracle_density(const DifferentialFrame& frame) {
    if (static_cast<int>(frame.entry_forms.size()) != frame.basis.size())
        throw InternalError("oracle_density: frame system is not square");
    const double wedged = wedge_all(frame.entry_forms, frame.basis);
    const double det = det_coefficient(frame.entry_forms, frame.basis);
    const double scale = std::max(std::abs(wedged), std::abs(det));
    if (scale > 1e-250 && std::abs(wedged - det) > 1e-10 * scale) {
        std::ostringstream os;
        os << "oracle_density: wedge/determinant cross-check failed: wedge="
           << wedged << " det=" << det;
        throw InternalError(os.str());
    }
    return std::abs(wedged);
}

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::T1: return "T1";
        case TheoremId::T2: return "T2";
        case TheoremId::T3Measure: return "T3-measure";
        case TheoremId::Eq2: return "Eq2";
        case TheoremId::SdFull: return "SD-full";
    }
    return "?";
}

std::string dims_to_string(TheoremId id, const TheoremDims& dims) {
    std::ostringstream os;
    switch (id) {
        case TheoremId::T1:
            os << "m1=" << dims.q1 << ",m2=" << dims.q2;
            break;
        case TheoremId::T2:
            os << "m=" << dims.m << ",q1=" << dims.q1 << ",q2=" << dims.q2;
            break;
        case TheoremId::Eq2:
            os << "m=" << dims.m << ",q=" << dims.q1;
            break;
        case TheoremId::SdFull:
            os << "m=" << dims.m;
            break;
        case TheoremId::T3Measure:
            os << "N=" << dims.N << ",m=" << dims.cols << ",k=" << dims.k;
            break;
    }
    return os.str();
}

namespace {

// Log-uniform magnitudes in [0.1, 10], descending, resampled as a block
// until every adjacent relative gap is at least 1e-3.
std::vector<double> sample_descending(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uniform(std::log(0.1), std::log(10.0));
    std::vector<double> values(n);
    for (;;) {
        for (double& v : values) v = std::exp(uniform(rng));
        std::sort(values.rbegin(), values.rend());
        bool ok = true;
        for (int i = 0; i + 1 < n; ++i) {
            const double gap = (values[i] - values[i + 1]) / values[i];
            if (gap < 1e-3) {
                ok = false;
                break;
            }
        }
        if (ok) return values;
    }
}

struct TrialSpectra {
    std::vector<double> lambda;  // positive part (or sigma)
    std::vector<double> delta;   // negative magnitudes
};

TrialSpectra sample_for(TheoremId id, const TheoremDims& dims,
                        std::mt19937_64& rng) {
    TrialSpectra out;
    switch (id) {
        case TheoremId::T1:
            out.lambda = sample_descending(dims.q1, rng);
            out.delta = sample_descending(dims.q2, rng);
            break;
        case TheoremId::T2:
            out.lambda = sample_descending(dims.q1, rng);
            out.delta = sample_descending(dims.q2, rng);
            break;
        case TheoremId::Eq2:
            out.lambda = sample_descending(dims.q1, rng);
            break;
        case TheoremId::SdFull:
            out.lambda = sample_descending(dims.m, rng);
            break;
        case TheoremId::T3Measure:
            out.lambda = sample_descending(dims.k, rng);
            break;
    }
    return out;
}

void validate_dims(TheoremId id, const TheoremDims& dims) {
    auto require = [](bool ok, const char* msg) {
        if (!ok) throw InputError(std::string("verify_theorem: ") + msg);
    };
    switch (id) {
        case TheoremId::T1:
            require(dims.q1 >= 1 && dims.q2 >= 1, "T1 needs q1,q2 >= 1");
            break;
        case TheoremId::T2:
            require(dims.q1 >= 0 && dims.q2 >= 0 && dims.q1 + dims.q2 >= 1,
                    "T2 needs q >= 1");
            require(dims.q1 + dims.q2 <= dims.m, "T2 needs q <= m");
            break;
        case TheoremId::Eq2:
            require(dims.q1 >= 1 && dims.q1 <= dims.m, "Eq2 needs 1 <= q <= m");
            break;
        case TheoremId::SdFull:
            require(dims.m >= 1, "SD-full needs m >= 1");
            break;
        case TheoremId::T3Measure:
            require(dims.k >= 1 && dims.k <= std::min(dims.N, dims.cols),
                    "T3 needs 1 <= k <= min(N,m)");
            break;
    }
}

}  // namespace

VerificationReport verify_theorem(TheoremId id, const TheoremDims& dims,
                                  int trials, std::uint64_t seed,
                                  double rel_tol) {
    if (trials < 1) throw InputError("verify_theorem: trials must be >= 1");
    validate_dims(id, dims);

    VerificationReport report;
    report.theorem_id = theorem_name(id);
    report.dims = dims_to_string(id, dims);
    report.trials = trials;
    report.seed = seed;
    report.rel_tol = rel_tol;

    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(trial));
        const TrialSpectra spectra = sample_for(id, dims, rng);

        std::vector<double> signed_spectrum = spectra.lambda;
        for (double dmag : spectra.delta) signed_spectrum.push_back(-dmag);

        DifferentialFrame frame;
        JacobianFactor formula;
        switch (id) {
            case TheoremId::T1:
                frame = sd_frame(dims.q1 + dims.q2, signed_spectrum);
                formula = jac_sd_indef_full(spectra.lambda, spectra.delta);
                break;
            case TheoremId::T2:
                frame = sd_frame(dims.m, signed_spectrum);
                formula = jac_sd_indef_singular(spectra.lambda, spectra.delta,
                                                dims.m);
                break;
            case TheoremId::Eq2:
                frame = sd_frame(dims.m, signed_spectrum);
                formula = jac_sd_semidef(spectra.lambda, dims.m);
                break;
            case TheoremId::SdFull:
                frame = sd_frame(dims.m, signed_spectrum);
                formula = jac_sd_posdef_full(spectra.lambda);
                break;
            case TheoremId::T3Measure:
                frame = svd_frame(dims.N, dims.cols, dims.k, spectra.lambda);
                formula = jac_svd_measure(spectra.lambda, dims.N, dims.cols);
                break;
        }

        TrialResult result;
        result.spectrum = signed_spectrum;
        result.oracle_value = oracle_density(frame);
        result.formula_value = formula.product_part();
        const double denom = std::max(std::abs(result.formula_value),
                                      std::abs(result.oracle_value));
        result.rel_err =
            denom > 0.0 ? std::abs(result.oracle_value - result.formula_value) / denom
                        : 0.0;
        report.max_rel_err = std::max(report.max_rel_err, result.rel_err);
        report.per_trial.push_back(std::move(result));
    }
    report.pass = report.max_rel_err <= rel_tol && report.discrepancies.empty();
    return report;
}

namespace {

// Local log-space product helpers, written independently of the formula
// layer on purpose: the composition route must not share its code path.
double log_vandermonde(const std::vector<double>& v) {
    double out = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            out += std::log(v[i] - v[j]);
    return out;
}

double log_vandermonde_squares(const std::vector<double>& v) {
    double out = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            out += std::log(v[i] - v[j]) + std::log(v[i] + v[j]);
    return out;
}

double log_sum(const std::vector<double>& v) {
    double out = 0.0;
    for (double x : v) out += std::log(x);
    return out;
}

std::vector<double> reciprocals_descending(const std::vector<double>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(1.0 / *it);
    return out;
}

void require_distinct_positive(const std::vector<double>& v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0.0))
            throw DomainError(std::string(what) + ": values must be positive");
        if (i + 1 < v.size() && v[i] == v[i + 1])
            throw DomainError(std::string(what) + ": tied values");
    }
}

// Log of the Theorem-2-shaped measure product at an arbitrary (l, d, m).
double log_sd_measure(const std::vector<double>& lambda,
                      const std::vector<double>& delta, int m) {
    const int q = static_cast<int>(lambda.size() + delta.size());
    double out = static_cast<double>(m - q) * (log_sum(lambda) + log_sum(delta));
    out += log_vandermonde(lambda) + log_vandermonde(delta);
    for (double l : lambda)
        for (double d : delta) out += std::log(l + d);
    return out;
}

}  // namespace

double composition_pinv_ratio(PinvKind kind, const TheoremDims& dims,
                              const std::vector<double>& spectrum) {
    switch (kind) {
        case PinvKind::General: {
            require_distinct_positive(spectrum, "composition_pinv_ratio");
            const int k = static_cast<int>(spectrum.size());
            if (k > std::min(dims.N, dims.cols))
                throw DomainError("composition_pinv_ratio: k exceeds min(N,m)");
            const std::vector<double> mu = reciprocals_descending(spectrum);
            const double power = static_cast<double>(dims.N + dims.cols - 2 * k);
            double log_ratio = power * (log_sum(mu) - log_sum(spectrum));
            log_ratio += log_vandermonde_squares(mu) -
                         log_vandermonde_squares(spectrum);
            log_ratio += -2.0 * log_sum(spectrum);  // |d mu_i / d sigma_i|
            return std::exp(log_ratio);
        }
        case PinvKind::Symmetric: {
            require_distinct_positive(spectrum, "composition_pinv_ratio");
            const int beta = static_cast<int>(spectrum.size());
            if (beta > dims.m)
                throw DomainError("composition_pinv_ratio: beta exceeds m");
            const std::vector<double> mu = reciprocals_descending(spectrum);
            const double power = static_cast<double>(dims.m - beta);
            double log_ratio = power * (log_sum(mu) - log_sum(spectrum));
            log_ratio += log_vandermonde(mu) - log_vandermonde(spectrum);
            log_ratio += -2.0 * log_sum(spectrum);
            return std::exp(log_ratio);
        }
        case PinvKind::Indefinite: {
            std::vector<double> lambda, delta;
            for (double v : spectrum) {
                if (v == 0.0)
                    throw DomainError("composition_pinv_ratio: zero value");
                (v > 0.0 ? lambda : delta).push_back(std::abs(v));
            }
            std::sort(lambda.rbegin(), lambda.rend());
            std::sort(delta.rbegin(), delta.rend());
            require_distinct_positive(lambda, "composition_pinv_ratio");
            require_distinct_positive(delta, "composition_pinv_ratio");
            const int a = static_cast<int>(lambda.size() + delta.size());
            if (a > dims.m)
                throw DomainError("composition_pinv_ratio: rank exceeds m");
            const std::vector<double> lam_inv = reciprocals_descending(lambda);
            const std::vector<double> del_inv = reciprocals_descending(delta);
            double log_ratio = log_sd_measure(lam_inv, del_inv, dims.m) -
                               log_sd_measure(lambda, delta, dims.m);
            log_ratio += -2.0 * (log_sum(lambda) + log_sum(delta));
            return std::exp(log_ratio);
        }
    }
    throw InputError("composition_pinv_ratio: unknown kind");
}

}  // namespace volform
