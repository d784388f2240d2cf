// Copyright 2026 The schmidtkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "schmidtkit/truncation.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "schmidtkit/internal.hpp"

namespace schmidtkit {

namespace {

void check_rows(const std::vector<double>& weights, std::size_t param_count) {
    if (weights.empty() || weights.size() != param_count) {
        throw Error(ErrorCode::InvalidInput,
                    "need one weight and one decay parameter per row, at least one row");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            throw Error(ErrorCode::InvalidInput, "row weights must be finite and nonnegative");
        }
        total += w * w;
    }
    if (total < kZeroNormTol) {
        throw Error(ErrorCode::ZeroVector, "row weights must not all vanish");
    }
}

void normalize_weights(std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w * w;
    const double scale = std::sqrt(total);
    for (double& w : weights) w /= scale;
}

// Truncated zeta(s) = sum_{m >= 1} m^-s via a partial sum plus the
// Euler-Maclaurin remainder at the cut. Accurate to near machine precision
// for every s > 1.
double zeta_sum(double s) {
    constexpr int cut = 4096;
    double sum = 0.0;
    for (int m = 1; m < cut; ++m) sum += std::pow(static_cast<double>(m), -s);
    const double mc = static_cast<double>(cut);
    sum += std::pow(mc, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(mc, -s);
    sum += s * std::pow(mc, -s - 1.0) / 12.0;
    sum -= s * (s + 1.0) * (s + 2.0) * std::pow(mc, -s - 3.0) / 720.0;
    return sum;
}

}  // namespace

std::optional<double> CoefficientSource::tail_bound(int) const {
    return std::nullopt;
}

GeometricSource::GeometricSource(std::vector<double> weights, std::vector<double> ratios,
                                 bool interleave)
    : weights_(std::move(weights)), ratios_(std::move(ratios)), interleave_(interleave) {
    check_rows(weights_, ratios_.size());
    for (double q : ratios_) {
        if (!std::isfinite(q) || q <= 0.0 || q >= 1.0) {
            throw Error(ErrorCode::InvalidInput, "geometric ratios must lie in (0, 1)");
        }
    }
    normalize_weights(weights_);
}

int GeometricSource::dim() const {
    return static_cast<int>(weights_.size());
}

int GeometricSource::terms_before(int alpha, int n) const {
    if (!interleave_) return n;
    const int d = dim();
    return n >= alpha + 1 ? (n - alpha - 1) / d + 1 : 0;
}

Complex GeometricSource::coeff(int alpha, int k) const {
    const int d = dim();
    if (alpha < 0 || alpha >= d || k < 1) {
        throw Error(ErrorCode::InvalidInput, "coefficient index out of range");
    }
    int m = k;
    if (interleave_) {
        if ((k - 1) % d != alpha) return Complex(0.0, 0.0);
        m = (k - 1) / d + 1;
    }
    const double w = weights_[static_cast<std::size_t>(alpha)];
    const double q = ratios_[static_cast<std::size_t>(alpha)];
    return Complex(w * std::sqrt(1.0 - q) * std::pow(q, 0.5 * (m - 1)), 0.0);
}

std::optional<double> GeometricSource::tail_bound(int n) const {
    // Each row's remaining squared mass after its first c terms is exactly
    // w^2 q^c, so the bound is tight.
    double tail = 0.0;
    for (int alpha = 0; alpha < dim(); ++alpha) {
        const double w = weights_[static_cast<std::size_t>(alpha)];
        const double q = ratios_[static_cast<std::size_t>(alpha)];
        tail += w * w * std::pow(q, terms_before(alpha, n));
    }
    return tail;
}

PowerLawSource::PowerLawSource(std::vector<double> weights, std::vector<double> exponents,
                               bool interleave)
    : weights_(std::move(weights)), exponents_(std::move(exponents)), interleave_(interleave) {
    check_rows(weights_, exponents_.size());
    for (double p : exponents_) {
        if (!std::isfinite(p) || p <= 0.5) {
            throw Error(ErrorCode::InvalidInput,
                        "power-law exponents must exceed 1/2 for square-summability");
        }
    }
    normalize_weights(weights_);
    row_norms_.reserve(exponents_.size());
    for (double p : exponents_) row_norms_.push_back(zeta_sum(2.0 * p));
}

int PowerLawSource::dim() const {
    return static_cast<int>(weights_.size());
}

int PowerLawSource::terms_before(int alpha, int n) const {
    if (!interleave_) return n;
    const int d = dim();
    return n >= alpha + 1 ? (n - alpha - 1) / d + 1 : 0;
}

Complex PowerLawSource::coeff(int alpha, int k) const {
    const int d = dim();
    if (alpha < 0 || alpha >= d || k < 1) {
        throw Error(ErrorCode::InvalidInput, "coefficient index out of range");
    }
    int m = k;
    if (interleave_) {
        if ((k - 1) % d != alpha) return Complex(0.0, 0.0);
        m = (k - 1) / d + 1;
    }
    const std::size_t a = static_cast<std::size_t>(alpha);
    const double value =
        weights_[a] / std::sqrt(row_norms_[a]) * std::pow(static_cast<double>(m), -exponents_[a]);
    return Complex(value, 0.0);
}

std::optional<double> PowerLawSource::tail_bound(int n) const {
    double tail = 0.0;
    for (int alpha = 0; alpha < dim(); ++alpha) {
        const std::size_t a = static_cast<std::size_t>(alpha);
        const double w2 = weights_[a] * weights_[a];
        const int c = terms_before(alpha, n);
        if (c < 1) {
            tail += w2;
            continue;
        }
        const double s = 2.0 * exponents_[a];
        const double remainder = std::pow(static_cast<double>(c), 1.0 - s) / (s - 1.0);
        tail += w2 * std::min(1.0, remainder / row_norms_[a]);
    }
    return tail;
}

FiniteSource::FiniteSource(PureState state) : state_(std::move(state)) {
    validate(state_);
    suffix_mass_.assign(static_cast<std::size_t>(state_.n) + 1, 0.0);
    for (int k = state_.n - 1; k >= 0; --k) {
        suffix_mass_[static_cast<std::size_t>(k)] =
            suffix_mass_[static_cast<std::size_t>(k) + 1] + state_.coeffs.col(k).squaredNorm();
    }
}

int FiniteSource::dim() const {
    return state_.d;
}

Complex FiniteSource::coeff(int alpha, int k) const {
    if (alpha < 0 || alpha >= state_.d || k < 1) {
        throw Error(ErrorCode::InvalidInput, "coefficient index out of range");
    }
    if (k > state_.n) return Complex(0.0, 0.0);
    return state_.coeffs(alpha, k - 1);
}

std::optional<double> FiniteSource::tail_bound(int n) const {
    if (n >= state_.n) return 0.0;
    return suffix_mass_[static_cast<std::size_t>(n)];
}

Matrix truncation_block(const CoefficientSource& source, int n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidInput, "truncation size must be positive");
    }
    const int d = source.dim();
    if (d < 1) {
        throw Error(ErrorCode::InvalidInput, "source dimension must be positive");
    }
    Matrix block(d, n);
    for (int k = 1; k <= n; ++k) {
        for (int alpha = 0; alpha < d; ++alpha) {
            const Complex z = source.coeff(alpha, k);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw Error(ErrorCode::NonFiniteEntry, "source produced a non-finite coefficient");
            }
            block(alpha, k - 1) = z;
        }
    }
    return block;
}

Truncation truncate(const CoefficientSource& source, int n) {
    const Matrix block = truncation_block(source, n);
    Truncation result;
    result.raw_norm = block.norm();
    if (result.raw_norm < kZeroNormTol) {
        throw Error(ErrorCode::ZeroVector, "truncation captured no coefficient mass");
    }
    result.state = make_pure_state(block, true);
    return result;
}

double weyl_gap(const Matrix& delta_a, const Matrix& delta_b) {
    if (delta_a.rows() != delta_b.rows() || delta_a.cols() != delta_b.cols() ||
        delta_a.rows() != delta_a.cols()) {
        throw Error(ErrorCode::DimensionError, "reduced operators must be square and same size");
    }
    const Matrix diff = delta_a - delta_b;
    const Matrix sym = 0.5 * (diff + diff.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::NumericalFailure, "eigenvalue computation did not converge");
    }
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

NoConvergenceError::NoConvergenceError(ConvergenceReport partial)
    : Error(ErrorCode::NoConvergence,
            "tolerance not met at n_max = " + std::to_string(partial.final_n)),
      partial_(std::move(partial)) {}

ConvergenceReport converge_schmidt(const CoefficientSource& source, double tol, int n0,
                                   int n_max, double rank_tol) {
    if (!std::isfinite(tol) || tol <= 0.0) {
        throw Error(ErrorCode::InvalidTolerance, "convergence tolerance must be positive");
    }
    internal::check_rank_tol(rank_tol);
    if (n0 < 1 || n_max < n0) {
        throw Error(ErrorCode::InvalidInput, "need 1 <= n0 <= n_max");
    }

    ConvergenceReport report;
    Matrix prev_delta;
    bool have_prev = false;
    int n = n0;
    while (true) {
        const Matrix block = truncation_block(source, n);
        const Matrix delta = block * block.adjoint();

        Eigen::JacobiSVD<Matrix> svd(block);
        ConvergenceReport::Snapshot snapshot;
        snapshot.n = n;
        snapshot.tau = RealVector::Zero(source.dim());
        snapshot.tau.head(svd.singularValues().size()) = svd.singularValues();
        report.iterations.push_back(snapshot);

        if (have_prev) {
            report.delta_gap = weyl_gap(delta, prev_delta);
        }
        const std::optional<double> tail = source.tail_bound(n);
        const bool converged =
            tail ? *tail < tol : (have_prev && report.delta_gap < tol);

        report.final_n = n;
        report.weyl_bound = tail ? *tail : report.delta_gap;
        if (converged || n >= n_max) {
            const double raw_norm = block.norm();
            if (raw_norm < kZeroNormTol) {
                throw Error(ErrorCode::ZeroVector, "truncation captured no coefficient mass");
            }
            report.schmidt = schmidt_decompose(make_pure_state(block, true), rank_tol);
            if (tail) {
                // The remaining mass perturbs the raw reduced operator by at
                // most *tail in spectral norm, and moves the relative rank
                // cutoff by at most rank_tol^2 * *tail. The rank is certain
                // once every raw squared coefficient clears the cutoff by
                // more than the combined slack.
                const RealVector& raw_tau = snapshot.tau;
                const double cutoff = rank_tol * rank_tol * raw_tau(0) * raw_tau(0);
                const double slack = *tail * (1.0 + rank_tol * rank_tol);
                bool certified = true;
                for (Eigen::Index i = 0; i < raw_tau.size(); ++i) {
                    if (std::abs(raw_tau(i) * raw_tau(i) - cutoff) <= slack) {
                        certified = false;
                        break;
                    }
                }
                report.rank_certified = certified;
            }
            if (!converged) {
                throw NoConvergenceError(std::move(report));
            }
            return report;
        }

        prev_delta = delta;
        have_prev = true;
        n = std::min(2 * n, n_max);
    }
}

}  // namespace schmidtkit
