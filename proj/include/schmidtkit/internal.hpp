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

#include <vector>

#include "schmidtkit/errors.hpp"
#include "schmidtkit/types.hpp"

// Helpers shared between the decomposition modules. Not part of the public
// interface; exposed in a header so the test suites can exercise them.

namespace schmidtkit::internal {

// Family members whose Gram-Schmidt residual falls below this are treated as
// linearly dependent on their predecessors.
inline constexpr double kDependentDropTol = 1e-12;

void check_rank_tol(double rank_tol);

/// Number of leading entries of a descending nonnegative vector that exceed
/// rank_tol times the first entry.
int coefficient_rank(const RealVector& values, double rank_tol);

/// Applies the deterministic phase gauge to paired singular vector columns;
/// see schmidt_decompose.
void canonicalize(Matrix& left, Matrix& right);

/// Extends a matrix with orthonormal columns to `target` orthonormal columns
/// (or trims it). The existing columns are kept verbatim.
Matrix complete_basis(const Matrix& basis, Eigen::Index target);

/// Orthonormal basis of the span of a vector family together with the
/// coordinates of every member: family[i] == basis * coords.col(i).
struct OrthoFamily {
    Matrix basis;
    Matrix coords;
};

OrthoFamily orthonormalize(const std::vector<Vector>& family, Eigen::Index dim);

/// Smallest eigenvalue of a Hermitian matrix (the input is symmetrized).
double min_eigenvalue(const Matrix& hermitian);

}  // namespace schmidtkit::internal
