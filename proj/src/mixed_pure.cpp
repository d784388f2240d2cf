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

#include "schmidtkit/mixed_pure.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "schmidtkit/internal.hpp"
#include "schmidtkit/random.hpp"

namespace schmidtkit {

namespace {

// Decomposition terms with coefficients below this relative floor are
// padding columns of the SVD, not part of the witness.
constexpr double kPairingFloor = 1e-12;

constexpr int kPptProbeCount = 512;

void check_probe(const Matrix& probe_q, const Vector& probe_psi, Eigen::Index d,
                 Eigen::Index n) {
    if (probe_q.rows() != d || probe_q.cols() != d || probe_psi.size() != n) {
        throw Error(ErrorCode::InvalidProbe, "probe dimensions do not match the decomposition");
    }
    if (!probe_q.allFinite() || !probe_psi.allFinite()) {
        throw Error(ErrorCode::InvalidProbe, "probe contains a non-finite entry");
    }
    if ((probe_q - probe_q.adjoint()).cwiseAbs().maxCoeff() > kDefaultWitnessTol) {
        throw Error(ErrorCode::InvalidProbe, "probe operator must be Hermitian");
    }
    if (std::abs(probe_q.trace() - Complex(1.0, 0.0)) > kDefaultWitnessTol) {
        throw Error(ErrorCode::InvalidProbe, "probe operator must have unit trace");
    }
    if (internal::min_eigenvalue(probe_q) < -kPsdTol) {
        throw Error(ErrorCode::InvalidProbe, "probe operator must be positive semidefinite");
    }
    if (std::abs(probe_psi.norm() - 1.0) > kDefaultWitnessTol) {
        throw Error(ErrorCode::InvalidProbe, "probe vector must have unit norm");
    }
}

}  // namespace

std::vector<Matrix> gellmann_basis(int d) {
    if (d < 1) {
        throw Error(ErrorCode::InvalidInput, "basis dimension must be positive");
    }
    std::vector<Matrix> basis;
    basis.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    basis.push_back(Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int p = 0; p < d; ++p) {
        for (int q = p + 1; q < d; ++q) {
            Matrix sym = Matrix::Zero(d, d);
            sym(p, q) = inv_sqrt2;
            sym(q, p) = inv_sqrt2;
            basis.push_back(std::move(sym));
        }
    }
    for (int p = 0; p < d; ++p) {
        for (int q = p + 1; q < d; ++q) {
            Matrix asym = Matrix::Zero(d, d);
            asym(p, q) = Complex(0.0, -inv_sqrt2);
            asym(q, p) = Complex(0.0, inv_sqrt2);
            basis.push_back(std::move(asym));
        }
    }
    for (int l = 1; l < d; ++l) {
        Matrix diag = Matrix::Zero(d, d);
        const double scale = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1.0));
        for (int j = 0; j < l; ++j) diag(j, j) = scale;
        diag(l, l) = -scale * l;
        basis.push_back(std::move(diag));
    }
    return basis;
}

Matrix matricize(const MixedPureState& q) {
    validate(q);
    const std::vector<Matrix> basis = gellmann_basis(q.d);
    Matrix m(static_cast<Eigen::Index>(basis.size()), q.n);
    for (int k = 0; k < q.n; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            m(static_cast<Eigen::Index>(i), k) = (basis[i] * q.slices[static_cast<std::size_t>(k)]).trace();
        }
    }
    return m;
}

OperatorSchmidtData operator_schmidt(const MixedPureState& q, double rank_tol) {
    internal::check_rank_tol(rank_tol);
    const Matrix m = matricize(q);
    const std::vector<Matrix> basis = gellmann_basis(q.d);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) {
        throw Error(ErrorCode::NumericalFailure, "singular value decomposition did not converge");
    }
    Matrix u = svd.matrixU();
    Matrix v = svd.matrixV();
    internal::canonicalize(u, v);

    OperatorSchmidtData data;
    data.lambdas = svd.singularValues();
    const Eigen::Index k = data.lambdas.size();
    data.factors.reserve(static_cast<std::size_t>(k));
    data.vectors.reserve(static_cast<std::size_t>(k));
    bool hermitian = true;
    for (Eigen::Index j = 0; j < k; ++j) {
        Matrix factor = Matrix::Zero(q.d, q.d);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            factor += u(static_cast<Eigen::Index>(i), j) * basis[i];
        }
        if ((factor - factor.adjoint()).cwiseAbs().maxCoeff() > kPsdTol) hermitian = false;
        data.factors.push_back(std::move(factor));
        data.vectors.push_back(v.col(j).conjugate());
    }
    data.hermitian_factors = hermitian;
    data.rank = internal::coefficient_rank(data.lambdas, rank_tol);
    return data;
}

MixedPureState reconstruct_mixed(const OperatorSchmidtData& data, int d, int n) {
    validate(data);
    if (data.factors.front().rows() != d || data.vectors.front().size() != n) {
        throw Error(ErrorCode::DimensionError, "requested shape does not match the decomposition");
    }
    std::vector<Matrix> slices(static_cast<std::size_t>(n), Matrix::Zero(d, d));
    for (std::size_t j = 0; j < data.factors.size(); ++j) {
        const double lambda = data.lambdas(static_cast<Eigen::Index>(j));
        for (int k = 0; k < n; ++k) {
            slices[static_cast<std::size_t>(k)] += lambda * data.vectors[j](k) * data.factors[j];
        }
    }
    return make_mixed_pure(slices);
}

OperatorSchmidtData hermitian_rotate(const OperatorSchmidtData& data) {
    validate(data);
    const int d = static_cast<int>(data.factors.front().rows());
    const Eigen::Index n = data.vectors.front().size();
    const std::vector<Matrix> basis = gellmann_basis(d);

    // Coordinates of the tensor over the Gell-Mann basis:
    // M(i, k) = sum_j lambda_j <G_i, E_j> psi_j[k].
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(basis.size()), n);
    for (std::size_t j = 0; j < data.factors.size(); ++j) {
        const double lambda = data.lambdas(static_cast<Eigen::Index>(j));
        Vector factor_coords(static_cast<Eigen::Index>(basis.size()));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            factor_coords(static_cast<Eigen::Index>(i)) = (basis[i] * data.factors[j]).trace();
        }
        m.noalias() += lambda * factor_coords * data.vectors[j].transpose();
    }
    if (m.imag().cwiseAbs().maxCoeff() > kPsdTol) {
        return data;
    }

    const RealMatrix mr = m.real();
    Eigen::JacobiSVD<RealMatrix> svd(mr, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) {
        throw Error(ErrorCode::NumericalFailure, "singular value decomposition did not converge");
    }
    RealMatrix u = svd.matrixU();
    RealMatrix v = svd.matrixV();
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
        Eigen::Index idx = 0;
        v.col(j).cwiseAbs().maxCoeff(&idx);
        if (v(idx, j) < 0.0) {
            v.col(j) = -v.col(j);
            u.col(j) = -u.col(j);
        }
    }

    OperatorSchmidtData rotated;
    rotated.lambdas = svd.singularValues();
    const Eigen::Index k = rotated.lambdas.size();
    rotated.factors.reserve(static_cast<std::size_t>(k));
    rotated.vectors.reserve(static_cast<std::size_t>(k));
    for (Eigen::Index j = 0; j < k; ++j) {
        Matrix factor = Matrix::Zero(d, d);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            factor += u(static_cast<Eigen::Index>(i), j) * basis[i];
        }
        rotated.factors.push_back(std::move(factor));
        rotated.vectors.push_back(v.col(j).cast<Complex>());
    }
    rotated.hermitian_factors = true;
    rotated.rank = std::min<int>(data.rank, static_cast<int>(k));
    return rotated;
}

WitnessReport witness_test(const OperatorSchmidtData& data, double tol) {
    validate(data);
    if (!std::isfinite(tol) || tol < 0.0) {
        throw Error(ErrorCode::InvalidTolerance, "witness tolerance must be nonnegative");
    }
    WitnessReport report;
    report.lambda_sum = data.lambdas.sum();
    report.verdict =
        report.lambda_sum > 1.0 + tol ? WitnessVerdict::Entangled : WitnessVerdict::Inconclusive;
    report.self_pairing = 1.0 - report.lambda_sum;
    return report;
}

double witness_pairing(const Matrix& probe_q, const Vector& probe_psi,
                       const OperatorSchmidtData& data) {
    validate(data);
    check_probe(probe_q, probe_psi, data.factors.front().rows(), data.vectors.front().size());
    const double floor = kPairingFloor * data.lambdas(0);
    double sum = 0.0;
    for (std::size_t j = 0; j < data.factors.size(); ++j) {
        if (data.lambdas(static_cast<Eigen::Index>(j)) <= floor) continue;
        const double expectation = (data.factors[j] * probe_q).trace().real();
        const double overlap = std::norm(data.vectors[j].dot(probe_psi));
        sum += expectation * overlap;
    }
    return 1.0 - sum;
}

MixedPureState partial_transpose(const MixedPureState& q) {
    validate(q);
    std::vector<Matrix> transposed;
    transposed.reserve(q.slices.size());
    for (const Matrix& slice : q.slices) {
        transposed.push_back(slice.transpose());
    }
    return make_mixed_pure(transposed);
}

double factor_expectation(const Matrix& probe_q, const Vector& probe_psi,
                          const OperatorSchmidtData& data) {
    validate(data);
    check_probe(probe_q, probe_psi, data.factors.front().rows(), data.vectors.front().size());
    double sum = 0.0;
    for (std::size_t j = 0; j < data.factors.size(); ++j) {
        const double expectation = (data.factors[j] * probe_q).trace().real();
        const double overlap = std::norm(data.vectors[j].dot(probe_psi));
        sum += data.lambdas(static_cast<Eigen::Index>(j)) * expectation * overlap;
    }
    return sum;
}

PptReport ppt_report(const MixedPureState& q, double rank_tol, std::uint64_t probe_seed) {
    internal::check_rank_tol(rank_tol);
    const MixedPureState pt = partial_transpose(q);
    const OperatorSchmidtData rotated = hermitian_rotate(operator_schmidt(pt, rank_tol));

    PptReport report;
    if (rotated.hermitian_factors) {
        const double cutoff = rank_tol * rotated.lambdas(0);
        bool all_psd = true;
        for (std::size_t j = 0; j < rotated.factors.size(); ++j) {
            if (rotated.lambdas(static_cast<Eigen::Index>(j)) <= cutoff) continue;
            if (internal::min_eigenvalue(rotated.factors[j]) < -kPsdTol) {
                all_psd = false;
                break;
            }
        }
        if (all_psd) {
            report.verdict = PptVerdict::PositiveOnProbes;
            report.factors_psd = true;
            return report;
        }
    }

    double min_expectation = std::numeric_limits<double>::infinity();
    int probes = 0;
    const auto consider = [&](const Matrix& probe_q, const Vector& probe_psi) {
        min_expectation = std::min(min_expectation, factor_expectation(probe_q, probe_psi, rotated));
        ++probes;
    };
    for (int p = 0; p < q.d; ++p) {
        Matrix basis_probe = Matrix::Zero(q.d, q.d);
        basis_probe(p, p) = 1.0;
        for (int k = 0; k < q.n; ++k) {
            Vector e = Vector::Zero(q.n);
            e(k) = 1.0;
            consider(basis_probe, e);
        }
    }
    Rng rng(probe_seed);
    for (int t = 0; t < kPptProbeCount; ++t) {
        const Vector x = rng.unit_vector(q.d);
        consider(x * x.adjoint(), rng.unit_vector(q.n));
    }
    report.probes_evaluated = probes;
    report.min_expectation = min_expectation;
    report.verdict = min_expectation < -kPsdTol ? PptVerdict::ViolationFound
                                                : PptVerdict::Inconclusive;
    return report;
}

PptVerdict ppt_test(const MixedPureState& q, double rank_tol, std::uint64_t probe_seed) {
    return ppt_report(q, rank_tol, probe_seed).verdict;
}

SeparabilityFlags separability_flags(const MixedPureState& q, double rank_tol,
                                     std::uint64_t probe_seed) {
    internal::check_rank_tol(rank_tol);
    const OperatorSchmidtData osd = operator_schmidt(q, rank_tol);
    const OperatorSchmidtData rotated = hermitian_rotate(osd);

    SeparabilityFlags flags;
    if (rotated.hermitian_factors) {
        const double cutoff = rank_tol * rotated.lambdas(0);
        bool all_psd = true;
        for (std::size_t j = 0; j < rotated.factors.size(); ++j) {
            if (rotated.lambdas(static_cast<Eigen::Index>(j)) <= cutoff) continue;
            if (internal::min_eigenvalue(rotated.factors[j]) < -kPsdTol) {
                all_psd = false;
                break;
            }
        }
        if (all_psd) flags.nonneg_factor_separable = NonnegFactorFlag::Yes;
    }
    flags.low_rank_separable = osd.rank <= 2 ? LowRankFlag::Yes : LowRankFlag::No;
    flags.ppt = ppt_test(q, rank_tol, probe_seed);
    return flags;
}

const char* to_string(WitnessVerdict v) {
    return v == WitnessVerdict::Entangled ? "Entangled" : "Inconclusive";
}

const char* to_string(PptVerdict v) {
    switch (v) {
        case PptVerdict::PositiveOnProbes: return "PositiveOnProbes";
        case PptVerdict::ViolationFound: return "ViolationFound";
        case PptVerdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

const char* to_string(NonnegFactorFlag v) {
    return v == NonnegFactorFlag::Yes ? "Yes" : "Inconclusive";
}

const char* to_string(LowRankFlag v) {
    return v == LowRankFlag::Yes ? "Yes" : "No";
}

}  // namespace schmidtkit
