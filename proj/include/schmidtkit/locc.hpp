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

/// A point of the probability simplex: squared Schmidt coefficients sorted
/// descending, summing to 1.
struct SchmidtProbVector {
    RealVector p;
};

/// The squared Schmidt coefficients of a decomposition as a probability
/// vector, sorted descending.
SchmidtProbVector to_prob_vector(const SchmidtData& data);

/// Prefix-sum partial sums of a probability vector.
RealVector prefix_sums(const SchmidtProbVector& v);

/// True iff b is majorized by a: every prefix sum of b stays within tol
/// below the corresponding prefix sum of a. Unequal lengths are zero-padded.
bool majorizes(const SchmidtProbVector& a, const SchmidtProbVector& b,
               double tol = kDefaultMajorizeTol);

/// LOCC convertibility verdict for two states of equal finite dimension:
/// state 1 converts to state 2 exactly when the probability vector of
/// state 1 is majorized by that of state 2.
MajorizationVerdict locc_verdict(const SchmidtData& psi1, const SchmidtData& psi2,
                                 double tol = kDefaultMajorizeTol);

const char* to_string(MajorizationVerdict v);

}  // namespace schmidtkit
