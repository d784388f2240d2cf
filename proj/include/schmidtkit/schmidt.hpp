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

#include "schmidtkit/state_model.hpp"

namespace schmidtkit {

/// The reduced operator on the finite side, coeffs * coeffs^dagger.
/// Hermitian, positive semidefinite, unit trace; its eigenvalues are the
/// squared Schmidt coefficients.
DeltaMatrix delta_matrix(const PureState& state);

/// Schmidt decomposition via singular value decomposition of the coefficient
/// matrix. rank_tol is the relative cutoff (against the leading coefficient)
/// used for the rank count and must lie in (0, 1). The column phases are
/// fixed deterministically: each right vector's largest-magnitude entry is
/// made real and positive.
SchmidtData schmidt_decompose(const PureState& state, double rank_tol = kDefaultRankTol);

/// Schmidt decomposition of a product-sum state computed in the span of its
/// factors: both factor families are orthonormalized, the weight matrix is
/// decomposed there, and the bases are rotated back and completed. Agrees
/// with schmidt_decompose(assemble(state)) up to gauge.
SchmidtData decompose_product_sum(const ProductSumState& state,
                                  double rank_tol = kDefaultRankTol);

/// Reduced density operator reconstructed from Schmidt data,
/// left * diag(tau^2) * left^dagger. Equals delta_matrix of the state the
/// data came from.
Matrix reduced_density(const SchmidtData& data);

/// Entanglement entropy -sum tau^2 ln tau^2 in nats. Zero terms are skipped;
/// the result is clamped to be nonnegative.
double entanglement_entropy(const SchmidtData& data);

/// The maximally entangled state with d equal Schmidt coefficients 1/sqrt(d)
/// on an n-dimensional truncation, n >= d.
PureState max_entangled(int d, int n);

}  // namespace schmidtkit
