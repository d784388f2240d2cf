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

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace schmidtkit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// The reduced operator of a pure state on the finite side: Hermitian,
// positive semidefinite, unit trace. Stored as a plain matrix; the
// invariants are enforced by construction and checked in the test suites.
using DeltaMatrix = Matrix;

// Tolerance conventions, shared across modules.
//
// States handed in by the caller are expected to be normalized to high
// accuracy; sums of outer products assembled from many terms accumulate
// rounding and get a looser gate before renormalization.
inline constexpr double kNormTol = 1e-10;
inline constexpr double kAssembledNormTol = 1e-6;
inline constexpr double kZeroNormTol = 1e-14;

// Rank cutoffs are relative to the leading Schmidt coefficient.
inline constexpr double kDefaultRankTol = 1e-10;
inline constexpr double kDefaultWitnessTol = 1e-8;
inline constexpr double kDefaultMajorizeTol = 1e-9;

// Eigenvalues above this floor are treated as genuinely negative when
// checking positive semidefiniteness of Hermitian factors and probes.
inline constexpr double kPsdTol = 1e-9;

inline constexpr std::uint64_t kDefaultSeed = 0;

/// A normalized pure state of a (d, infinity) bipartite system, truncated to
/// the first n basis vectors of the infinite side. coeffs(alpha, k) is the
/// amplitude on |alpha> tensor |f_k>; the rows are the finite-side slots.
struct PureState {
    int d = 0;
    int n = 0;
    Matrix coeffs;
};

/// One term c * (left tensor right) of a finite product-sum expansion.
/// Both factors are unit vectors; c carries the weight.
struct ProductTerm {
    Complex c{};
    Vector left;
    Vector right;
};

/// A state given as a finite sum of product terms rather than a coefficient
/// matrix. The assembled sum must be normalized; the individual terms need
/// not be orthogonal.
struct ProductSumState {
    int d = 0;
    int n = 0;
    std::vector<ProductTerm> terms;
};

/// Schmidt decomposition of a PureState. tau holds the d Schmidt
/// coefficients in descending order, zero-padded past min(d, n); rank counts
/// the coefficients above the rank cutoff. left is a d x d unitary whose
/// columns are the finite-side Schmidt vectors; right is n x min(d, n) with
/// orthonormal columns. coeffs == left.leftCols(k) * tau.head(k).asDiagonal()
/// * right.adjoint() for k = min(d, n).
struct SchmidtData {
    int rank = 0;
    RealVector tau;
    Matrix left;
    Matrix right;
};

/// A mixed-pure tensor: an element of HS(C^d) tensor h, truncated to n slots
/// on the infinite side. slices[k] is the d x d operator coefficient of
/// |f_k>. The slices are arbitrary (not necessarily Hermitian); the tensor
/// carries unit Hilbert-Schmidt norm.
///
/// trace_one and h_purity are diagnostic flags recorded at construction:
/// trace_one reports whether the vector of slice traces has unit norm, and
/// h_purity whether the Gram matrix of the slices is rank one (both within
/// kNormTol). Neither is enforced.
struct MixedPureState {
    int d = 0;
    int n = 0;
    std::vector<Matrix> slices;
    bool trace_one = false;
    bool h_purity = false;
};

/// Operator Schmidt decomposition of a MixedPureState. lambdas holds the
/// min(d^2, n) coefficients in descending order; factors are pairwise
/// Hilbert-Schmidt orthonormal d x d operators; vectors are orthonormal
/// n-vectors. The tensor reconstructs as
///   slices[k] = sum_j lambdas[j] * vectors[j][k] * factors[j].
/// hermitian_factors records whether every factor is Hermitian.
struct OperatorSchmidtData {
    int rank = 0;
    RealVector lambdas;
    std::vector<Matrix> factors;
    std::vector<Vector> vectors;
    bool hermitian_factors = false;
};

enum class MajorizationVerdict {
    Convertible12,
    Convertible21,
    Equivalent,
    Incomparable,
};

}  // namespace schmidtkit
