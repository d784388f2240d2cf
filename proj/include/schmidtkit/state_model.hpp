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

#include "schmidtkit/errors.hpp"
#include "schmidtkit/types.hpp"

namespace schmidtkit {

/// Builds a PureState from a d x n coefficient matrix. With normalize the
/// matrix is scaled to unit norm (ZeroVector if the norm is below
/// kZeroNormTol); without it the norm must already be 1 within kNormTol
/// (NotNormalized otherwise). Non-finite entries raise NonFiniteEntry.
PureState make_pure_state(const Matrix& coeffs, bool normalize = false);

/// Checks the PureState invariants: consistent shape, finite entries, unit
/// norm. Throws on violation.
void validate(const PureState& state);

/// Builds a ProductSumState. Every term must carry unit-norm factors of the
/// declared dimensions; the norm of the assembled sum is only checked when
/// the state is assembled.
ProductSumState make_product_sum(int d, int n, std::vector<ProductTerm> terms);

void validate(const ProductSumState& state);

/// The raw coefficient matrix sum_i c_i * left_i * right_i^T, without any
/// normalization check.
Matrix assemble_raw(const ProductSumState& state);

/// Assembles the coefficient matrix of a ProductSumState. The assembled norm
/// must be 1 within kAssembledNormTol; within that window the result is
/// renormalized exactly, outside it NotNormalized is thrown.
PureState assemble(const ProductSumState& state);

/// Builds a MixedPureState from d x d slices, normalizing the tensor to unit
/// Hilbert-Schmidt norm when requested, and records the trace_one and
/// h_purity diagnostic flags.
MixedPureState make_mixed_pure(const std::vector<Matrix>& slices, bool normalize = false);

void validate(const MixedPureState& state);

/// Checks SchmidtData invariants: tau descending and unit two-norm, left
/// unitary, right with orthonormal columns, shapes consistent.
void validate(const SchmidtData& data);

void validate(const OperatorSchmidtData& data);

}  // namespace schmidtkit
