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

#include <cstdint>
#include <vector>

#include "schmidtkit/state_model.hpp"

namespace schmidtkit {

enum class WitnessVerdict {
    Entangled,
    Inconclusive,
};

struct WitnessReport {
    double lambda_sum = 0.0;
    WitnessVerdict verdict = WitnessVerdict::Inconclusive;
    // Pairing of the witness with the state itself, 1 - lambda_sum; negative
    // exactly when the verdict is Entangled.
    double self_pairing = 0.0;
    // Optional probe evaluations (probe id, pairing value); left empty
    // unless the caller supplies probes.
    std::vector<std::pair<std::string, double>> witness_pairings;
};

enum class PptVerdict {
    PositiveOnProbes,
    ViolationFound,
    Inconclusive,
};

enum class NonnegFactorFlag { Yes, Inconclusive };
enum class LowRankFlag { Yes, No };

struct SeparabilityFlags {
    NonnegFactorFlag nonneg_factor_separable = NonnegFactorFlag::Inconclusive;
    LowRankFlag low_rank_separable = LowRankFlag::No;
    PptVerdict ppt = PptVerdict::Inconclusive;
};

struct PptReport {
    PptVerdict verdict = PptVerdict::Inconclusive;
    // True when the Hermitian-rotated factors of the partial transpose are
    // all positive semidefinite, which certifies positivity outright.
    bool factors_psd = false;
    int probes_evaluated = 0;
    double min_expectation = 0.0;
};

/// Hermitian trace-orthonormal basis of the d x d matrices (generalized
/// Gell-Mann matrices), ordered: identity/sqrt(d), then the symmetric
/// off-diagonal pairs, then the antisymmetric ones (both in lexicographic
/// (p, q) order), then the d - 1 diagonal generators.
std::vector<Matrix> gellmann_basis(int d);

/// Coordinates of the slices over the Gell-Mann basis as a d^2 x n matrix;
/// column k holds slice k. Real exactly when every slice is Hermitian.
Matrix matricize(const MixedPureState& q);

/// Operator Schmidt decomposition via singular value decomposition of the
/// matricization. The tensor reconstructs as
/// slices[k] = sum_j lambdas[j] * vectors[j][k] * factors[j].
OperatorSchmidtData operator_schmidt(const MixedPureState& q,
                                     double rank_tol = kDefaultRankTol);

/// Rebuilds the tensor from its operator Schmidt data.
MixedPureState reconstruct_mixed(const OperatorSchmidtData& data, int d, int n);

/// When the tensor's Gell-Mann coordinate matrix is real within kPsdTol
/// (all slices Hermitian), recomputes the decomposition with a real
/// factorization so every factor is Hermitian, and sets hermitian_factors.
/// Otherwise returns the input unchanged. The coefficients are invariant.
OperatorSchmidtData hermitian_rotate(const OperatorSchmidtData& data);

/// Realignment-type witness: the state is entangled whenever the sum of its
/// operator Schmidt coefficients exceeds 1.
WitnessReport witness_test(const OperatorSchmidtData& data, double tol = kDefaultWitnessTol);

/// Pairing of the witness built from `data` with the factor probe
/// probe_q tensor probe_psi: 1 - sum_i Re tr(E_i probe_q) |<psi_i|probe_psi>|^2.
/// probe_q must be a density matrix and probe_psi a unit vector.
double witness_pairing(const Matrix& probe_q, const Vector& probe_psi,
                       const OperatorSchmidtData& data);

/// Slice-wise transpose of the finite factor. An involution and a
/// Hilbert-Schmidt isometry, so the operator Schmidt coefficients of
/// Hermitian-sliced tensors are invariant.
MixedPureState partial_transpose(const MixedPureState& q);

/// Expectation of the partially transposed tensor against a factor probe,
/// sum_i lambda_i Re tr(E_i probe_q) |<psi_i|probe_psi>|^2. Nonnegative for
/// every probe when all factors are PSD; a negative value exhibits a factor
/// state on which positivity fails.
double factor_expectation(const Matrix& probe_q, const Vector& probe_psi,
                          const OperatorSchmidtData& data);

/// Positivity test of the partial transpose. Certifies PositiveOnProbes when
/// the rotated factors are all PSD; otherwise sweeps a deterministic probe
/// grid (all computational-basis factor probes plus 512 seeded Haar probes)
/// and reports ViolationFound on any negative expectation, else
/// Inconclusive.
PptReport ppt_report(const MixedPureState& q, double rank_tol = kDefaultRankTol,
                     std::uint64_t probe_seed = kDefaultSeed);

PptVerdict ppt_test(const MixedPureState& q, double rank_tol = kDefaultRankTol,
                    std::uint64_t probe_seed = kDefaultSeed);

/// The checkable sufficient conditions for separability plus the PPT
/// verdict. Positivity of a mixed-pure tensor is never decided globally;
/// flags are Inconclusive whenever the respective condition fails to apply.
SeparabilityFlags separability_flags(const MixedPureState& q,
                                     double rank_tol = kDefaultRankTol,
                                     std::uint64_t probe_seed = kDefaultSeed);

const char* to_string(WitnessVerdict v);
const char* to_string(PptVerdict v);
const char* to_string(NonnegFactorFlag v);
const char* to_string(LowRankFlag v);

}  // namespace schmidtkit
