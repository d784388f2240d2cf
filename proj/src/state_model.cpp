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

#include "schmidtkit/state_model.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace schmidtkit {

namespace {

bool all_finite(const Matrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const Complex& z = m(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        }
    }
    return true;
}

void require_finite(const Matrix& m, const std::string& what) {
    if (!all_finite(m)) {
        throw Error(ErrorCode::NonFiniteEntry, what + " contains a non-finite entry");
    }
}

}  // namespace

PureState make_pure_state(const Matrix& coeffs, bool normalize) {
    if (coeffs.rows() < 1 || coeffs.cols() < 1) {
        throw Error(ErrorCode::InvalidInput, "coefficient matrix must be nonempty");
    }
    require_finite(coeffs, "coefficient matrix");
    const double norm = coeffs.norm();
    PureState state;
    state.d = static_cast<int>(coeffs.rows());
    state.n = static_cast<int>(coeffs.cols());
    if (normalize) {
        if (norm < kZeroNormTol) {
            throw Error(ErrorCode::ZeroVector, "cannot normalize a zero coefficient matrix");
        }
        state.coeffs = coeffs / norm;
    } else {
        if (std::abs(norm - 1.0) > kNormTol) {
            throw Error(ErrorCode::NotNormalized,
                        "coefficient matrix has norm " + std::to_string(norm));
        }
        state.coeffs = coeffs;
    }
    return state;
}

void validate(const PureState& state) {
    if (state.d < 1 || state.n < 1 || state.coeffs.rows() != state.d ||
        state.coeffs.cols() != state.n) {
        throw Error(ErrorCode::DimensionError, "pure state shape is inconsistent");
    }
    require_finite(state.coeffs, "coefficient matrix");
    if (std::abs(state.coeffs.norm() - 1.0) > kNormTol) {
        throw Error(ErrorCode::NotNormalized, "pure state is not normalized");
    }
}

ProductSumState make_product_sum(int d, int n, std::vector<ProductTerm> terms) {
    ProductSumState state;
    state.d = d;
    state.n = n;
    state.terms = std::move(terms);
    validate(state);
    return state;
}

void validate(const ProductSumState& state) {
    if (state.d < 1 || state.n < 1) {
        throw Error(ErrorCode::DimensionError, "product-sum dimensions must be positive");
    }
    if (state.terms.empty()) {
        throw Error(ErrorCode::InvalidInput, "product-sum state needs at least one term");
    }
    for (std::size_t i = 0; i < state.terms.size(); ++i) {
        const ProductTerm& term = state.terms[i];
        const std::string where = "term " + std::to_string(i);
        if (!std::isfinite(term.c.real()) || !std::isfinite(term.c.imag())) {
            throw Error(ErrorCode::NonFiniteEntry, where + " has a non-finite weight");
        }
        if (term.left.size() != state.d || term.right.size() != state.n) {
            throw Error(ErrorCode::DimensionError, where + " has factors of the wrong dimension");
        }
        require_finite(term.left, where + " left factor");
        require_finite(term.right, where + " right factor");
        if (std::abs(term.left.norm() - 1.0) > kNormTol) {
            throw Error(ErrorCode::NotNormalized, where + " left factor is not a unit vector");
        }
        if (std::abs(term.right.norm() - 1.0) > kNormTol) {
            throw Error(ErrorCode::NotNormalized, where + " right factor is not a unit vector");
        }
    }
}

Matrix assemble_raw(const ProductSumState& state) {
    Matrix coeffs = Matrix::Zero(state.d, state.n);
    for (const ProductTerm& term : state.terms) {
        coeffs.noalias() += term.c * term.left * term.right.transpose();
    }
    return coeffs;
}

PureState assemble(const ProductSumState& state) {
    validate(state);
    Matrix coeffs = assemble_raw(state);
    const double norm = coeffs.norm();
    if (std::abs(norm - 1.0) > kAssembledNormTol) {
        throw Error(ErrorCode::NotNormalized,
                    "assembled product sum has norm " + std::to_string(norm));
    }
    PureState result;
    result.d = state.d;
    result.n = state.n;
    result.coeffs = coeffs / norm;
    return result;
}

MixedPureState make_mixed_pure(const std::vector<Matrix>& slices, bool normalize) {
    if (slices.empty()) {
        throw Error(ErrorCode::InvalidInput, "mixed-pure state needs at least one slice");
    }
    const Eigen::Index d = slices.front().rows();
    if (d < 1 || slices.front().cols() != d) {
        throw Error(ErrorCode::DimensionError, "slices must be square and nonempty");
    }
    double norm_sq = 0.0;
    for (std::size_t k = 0; k < slices.size(); ++k) {
        const Matrix& slice = slices[k];
        if (slice.rows() != d || slice.cols() != d) {
            throw Error(ErrorCode::DimensionError,
                        "slice " + std::to_string(k) + " has inconsistent dimensions");
        }
        require_finite(slice, "slice " + std::to_string(k));
        norm_sq += slice.squaredNorm();
    }
    const double norm = std::sqrt(norm_sq);

    MixedPureState state;
    state.d = static_cast<int>(d);
    state.n = static_cast<int>(slices.size());
    state.slices = slices;
    // The Hilbert-Schmidt normalization of a mixed-pure tensor is recorded in
    // the flags below, never enforced: the natural normalization of Q lives
    // on the trace side and convex mixtures of factor states land strictly
    // inside the unit HS ball.
    if (normalize) {
        if (norm < kZeroNormTol) {
            throw Error(ErrorCode::ZeroVector, "cannot normalize a zero tensor");
        }
        for (Matrix& slice : state.slices) slice /= norm;
    }

    // Diagnostic flags. trace_one: the slice traces form a unit vector, as
    // they do when the tensor is rho tensor psi with unit-trace rho and unit
    // psi. h_purity: the slice Gram matrix is rank one, i.e. all slices are
    // proportional to a single operator.
    Vector traces(state.n);
    Matrix gram(state.n, state.n);
    for (int k = 0; k < state.n; ++k) {
        traces(k) = state.slices[k].trace();
        for (int l = 0; l < state.n; ++l) {
            gram(k, l) = (state.slices[k].adjoint() * state.slices[l]).trace();
        }
    }
    state.trace_one = std::abs(traces.norm() - 1.0) <= kNormTol;
    const double gram_trace = gram.trace().real();
    if (gram_trace > kZeroNormTol) {
        const double purity = (gram * gram).trace().real() / (gram_trace * gram_trace);
        state.h_purity = purity >= 1.0 - kNormTol;
    }
    return state;
}

void validate(const MixedPureState& state) {
    if (state.d < 1 || state.n < 1 || static_cast<int>(state.slices.size()) != state.n) {
        throw Error(ErrorCode::DimensionError, "mixed-pure shape is inconsistent");
    }
    for (std::size_t k = 0; k < state.slices.size(); ++k) {
        const Matrix& slice = state.slices[k];
        if (slice.rows() != state.d || slice.cols() != state.d) {
            throw Error(ErrorCode::DimensionError,
                        "slice " + std::to_string(k) + " has inconsistent dimensions");
        }
        require_finite(slice, "slice " + std::to_string(k));
    }
}

void validate(const SchmidtData& data) {
    const int d = static_cast<int>(data.left.rows());
    const int n = static_cast<int>(data.right.rows());
    const int k = std::min(d, n);
    if (d < 1 || n < 1 || data.left.cols() != d || data.right.cols() != k ||
        data.tau.size() != d) {
        throw Error(ErrorCode::DimensionError, "Schmidt data shape is inconsistent");
    }
    if (data.rank < 0 || data.rank > k) {
        throw Error(ErrorCode::InvalidInput, "Schmidt rank is out of range");
    }
    for (int i = 0; i < d; ++i) {
        if (!(data.tau(i) >= 0.0)) {
            throw Error(ErrorCode::InvalidInput, "Schmidt coefficients must be nonnegative");
        }
        if (i > 0 && data.tau(i) > data.tau(i - 1) + kNormTol) {
            throw Error(ErrorCode::InvalidInput, "Schmidt coefficients must be descending");
        }
    }
    if (std::abs(data.tau.norm() - 1.0) > kNormTol) {
        throw Error(ErrorCode::NotNormalized, "Schmidt coefficients do not have unit two-norm");
    }
    if ((data.left.adjoint() * data.left - Matrix::Identity(d, d)).norm() > kNormTol * d) {
        throw Error(ErrorCode::NumericalFailure, "left Schmidt basis is not unitary");
    }
    if ((data.right.adjoint() * data.right - Matrix::Identity(k, k)).norm() > kNormTol * k) {
        throw Error(ErrorCode::NumericalFailure, "right Schmidt basis is not orthonormal");
    }
}

void validate(const OperatorSchmidtData& data) {
    const std::size_t terms = data.factors.size();
    if (terms == 0 || data.vectors.size() != terms ||
        data.lambdas.size() != static_cast<Eigen::Index>(terms)) {
        throw Error(ErrorCode::DimensionError, "operator Schmidt data shape is inconsistent");
    }
    if (data.rank < 0 || data.rank > static_cast<int>(terms)) {
        throw Error(ErrorCode::InvalidInput, "operator Schmidt rank is out of range");
    }
    const Eigen::Index d = data.factors.front().rows();
    const Eigen::Index n = data.vectors.front().size();
    for (std::size_t i = 0; i < terms; ++i) {
        if (data.factors[i].rows() != d || data.factors[i].cols() != d ||
            data.vectors[i].size() != n) {
            throw Error(ErrorCode::DimensionError, "operator Schmidt data shape is inconsistent");
        }
        if (!(data.lambdas(static_cast<Eigen::Index>(i)) >= 0.0)) {
            throw Error(ErrorCode::InvalidInput, "operator Schmidt coefficients must be nonnegative");
        }
        if (i > 0 && data.lambdas(static_cast<Eigen::Index>(i)) >
                         data.lambdas(static_cast<Eigen::Index>(i - 1)) + kNormTol) {
            throw Error(ErrorCode::InvalidInput, "operator Schmidt coefficients must be descending");
        }
    }
    for (std::size_t i = 0; i < terms; ++i) {
        for (std::size_t j = i; j < terms; ++j) {
            const Complex fac = (data.factors[i].adjoint() * data.factors[j]).trace();
            const Complex vec = data.vectors[i].dot(data.vectors[j]);
            const double expected = i == j ? 1.0 : 0.0;
            if (std::abs(fac - expected) > kNormTol * 10 || std::abs(vec - expected) > kNormTol * 10) {
                throw Error(ErrorCode::NumericalFailure,
                            "operator Schmidt factors or vectors are not orthonormal");
            }
        }
    }
}

}  // namespace schmidtkit
