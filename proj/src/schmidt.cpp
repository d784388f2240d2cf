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

#include "schmidtkit/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "schmidtkit/internal.hpp"

namespace schmidtkit {

namespace internal {

void check_rank_tol(double rank_tol) {
    if (!(rank_tol > 0.0) || !(rank_tol < 1.0)) {
        throw Error(ErrorCode::InvalidTolerance, "rank tolerance must lie in (0, 1)");
    }
}

int coefficient_rank(const RealVector& values, double rank_tol) {
    if (values.size() == 0 || !(values(0) > 0.0)) return 0;
    const double cutoff = rank_tol * values(0);
    int rank = 0;
    while (rank < values.size() && values(rank) > cutoff) ++rank;
    return rank;
}

void canonicalize(Matrix& left, Matrix& right) {
    // Gauge freedom: a joint phase on a (left, right) column pair leaves the
    // reconstruction invariant. Fix it by making the largest-magnitude entry
    // of each right column real and positive; left columns without a partner
    // are gauged by their own largest entry.
    for (Eigen::Index j = 0; j < right.cols(); ++j) {
        Eigen::Index idx = 0;
        right.col(j).cwiseAbs().maxCoeff(&idx);
        const Complex pivot = right(idx, j);
        const double mag = std::abs(pivot);
        if (mag < kZeroNormTol) continue;
        const Complex phase = std::conj(pivot) / mag;
        right.col(j) *= phase;
        if (j < left.cols()) left.col(j) *= phase;
    }
    for (Eigen::Index j = right.cols(); j < left.cols(); ++j) {
        Eigen::Index idx = 0;
        left.col(j).cwiseAbs().maxCoeff(&idx);
        const Complex pivot = left(idx, j);
        const double mag = std::abs(pivot);
        if (mag < kZeroNormTol) continue;
        left.col(j) *= std::conj(pivot) / mag;
    }
}

Matrix complete_basis(const Matrix& basis, Eigen::Index target) {
    const Eigen::Index dim = basis.rows();
    const Eigen::Index have = basis.cols();
    if (have >= target) return basis.leftCols(target);
    if (have == 0) {
        return Matrix::Identity(dim, target);
    }
    // The trailing columns of the Q factor are orthonormal to the span of
    // the existing (orthonormal) columns, which stay in place untouched.
    Eigen::HouseholderQR<Matrix> qr(basis);
    const Matrix q = qr.householderQ() * Matrix::Identity(dim, target);
    Matrix out(dim, target);
    out.leftCols(have) = basis;
    out.rightCols(target - have) = q.rightCols(target - have);
    return out;
}

double min_eigenvalue(const Matrix& hermitian) {
    const Matrix sym = 0.5 * (hermitian + hermitian.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::NumericalFailure, "eigenvalue computation did not converge");
    }
    return solver.eigenvalues().minCoeff();
}

OrthoFamily orthonormalize(const std::vector<Vector>& family, Eigen::Index dim) {
    const Eigen::Index m = static_cast<Eigen::Index>(family.size());
    const Eigen::Index max_rank = std::min(dim, m);
    Matrix basis(dim, max_rank);
    Matrix coords = Matrix::Zero(max_rank, m);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
        Vector w = family[static_cast<std::size_t>(i)];
        // Modified Gram-Schmidt with one re-orthogonalization pass keeps the
        // coordinates accurate even for nearly dependent families.
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index j = 0; j < r; ++j) {
                const Complex p = basis.col(j).dot(w);
                w -= p * basis.col(j);
                coords(j, i) += p;
            }
        }
        const double rho = w.norm();
        if (rho > kDependentDropTol) {
            basis.col(r) = w / rho;
            coords(r, i) = rho;
            ++r;
        }
    }
    return OrthoFamily{basis.leftCols(r), coords.topRows(r)};
}

}  // namespace internal

DeltaMatrix delta_matrix(const PureState& state) {
    validate(state);
    return state.coeffs * state.coeffs.adjoint();
}

SchmidtData schmidt_decompose(const PureState& state, double rank_tol) {
    validate(state);
    internal::check_rank_tol(rank_tol);
    Eigen::JacobiSVD<Matrix> svd(state.coeffs, Eigen::ComputeFullU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) {
        throw Error(ErrorCode::NumericalFailure, "singular value decomposition did not converge");
    }
    const int k = std::min(state.d, state.n);
    SchmidtData data;
    data.tau = RealVector::Zero(state.d);
    data.tau.head(k) = svd.singularValues();
    data.left = svd.matrixU();
    data.right = svd.matrixV();
    internal::canonicalize(data.left, data.right);
    data.rank = internal::coefficient_rank(data.tau, rank_tol);
    return data;
}

SchmidtData decompose_product_sum(const ProductSumState& state, double rank_tol) {
    validate(state);
    internal::check_rank_tol(rank_tol);
    std::vector<Vector> lefts;
    std::vector<Vector> rights;
    lefts.reserve(state.terms.size());
    rights.reserve(state.terms.size());
    for (const ProductTerm& term : state.terms) {
        lefts.push_back(term.left);
        rights.push_back(term.right);
    }
    const internal::OrthoFamily lf = internal::orthonormalize(lefts, state.d);
    const internal::OrthoFamily rf = internal::orthonormalize(rights, state.n);

    // In the orthonormalized bases the coefficient matrix is
    // C = L * D * R^T with D = sum_i c_i a_i b_i^T, so the Schmidt data of C
    // comes from the (small) singular value decomposition of D.
    Matrix d_small = Matrix::Zero(lf.basis.cols(), rf.basis.cols());
    for (std::size_t i = 0; i < state.terms.size(); ++i) {
        const Eigen::Index col = static_cast<Eigen::Index>(i);
        d_small.noalias() +=
            state.terms[i].c * lf.coords.col(col) * rf.coords.col(col).transpose();
    }
    const double norm = d_small.norm();
    if (std::abs(norm - 1.0) > kAssembledNormTol) {
        throw Error(ErrorCode::NotNormalized,
                    "assembled product sum has norm " + std::to_string(norm));
    }
    d_small /= norm;

    Eigen::JacobiSVD<Matrix> svd(d_small, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success) {
        throw Error(ErrorCode::NumericalFailure, "singular value decomposition did not converge");
    }
    const int k = std::min(state.d, state.n);
    const Eigen::Index available = svd.singularValues().size();

    SchmidtData data;
    data.tau = RealVector::Zero(state.d);
    data.tau.head(std::min<Eigen::Index>(available, k)) =
        svd.singularValues().head(std::min<Eigen::Index>(available, k));
    data.left = internal::complete_basis(lf.basis * svd.matrixU(), state.d);
    data.right =
        internal::complete_basis(rf.basis.conjugate() * svd.matrixV(), k);
    internal::canonicalize(data.left, data.right);
    data.rank = internal::coefficient_rank(data.tau, rank_tol);
    return data;
}

Matrix reduced_density(const SchmidtData& data) {
    validate(data);
    return data.left * data.tau.array().square().matrix().asDiagonal() * data.left.adjoint();
}

double entanglement_entropy(const SchmidtData& data) {
    validate(data);
    double h = 0.0;
    for (Eigen::Index i = 0; i < data.tau.size(); ++i) {
        const double p = data.tau(i) * data.tau(i);
        if (p > 0.0) h -= p * std::log(p);
    }
    return std::max(h, 0.0);
}

PureState max_entangled(int d, int n) {
    if (d < 1) {
        throw Error(ErrorCode::InvalidInput, "d must be positive");
    }
    if (n < d) {
        throw Error(ErrorCode::DimensionError, "maximally entangled state needs n >= d");
    }
    Matrix coeffs = Matrix::Zero(d, n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) coeffs(i, i) = amp;
    return make_pure_state(coeffs);
}

}  // namespace schmidtkit
