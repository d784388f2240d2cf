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

#include <array>
#include <cstdint>
#include <vector>

#include "schmidtkit/schmidt.hpp"
#include "schmidtkit/state_model.hpp"

namespace schmidtkit {

/// Spin-1/2 state c1 e1 tensor theta1 + c2 e2 tensor theta2 with
/// nonnegative weights, c1^2 + c2^2 = 1, and unit orbital factors.
struct BlochInput {
    double c1 = 0.0;
    double c2 = 0.0;
    Vector theta1;
    Vector theta2;
};

enum class BlochRegime {
    Orthogonal,
    Dependent,
    Intermediate,
};

struct BlochReport {
    // Orbital overlap <theta1|theta2>.
    Complex sigma{};
    // Index of similarity |1 - sigma|.
    double delta = 0.0;
    // Reduced spin density matrix [[c1^2, c1 c2 sigma], [c1 c2 conj(sigma), c2^2]].
    Matrix rho;
    double entropy = 0.0;
    BlochRegime regime = BlochRegime::Intermediate;
};

BlochInput make_bloch_input(double c1, double c2, Vector theta1, Vector theta2);

/// Builds a BlochInput with the prescribed real overlap sigma in [0, 1]:
/// theta1 = f1 and theta2 = sigma f1 + sqrt(1 - sigma^2) f2.
BlochInput bloch_input_from_sigma(double c1, double sigma);

/// The 2 x n coefficient matrix of the Bloch state.
PureState assemble_bloch(const BlochInput& input);

/// Entanglement analysis of the Bloch state from the 2 x 2 reduced density
/// matrix. Agrees with the Schmidt route on the assembled state.
BlochReport bloch_analyze(const BlochInput& input);

const char* to_string(BlochRegime regime);

/// Four-component spinor with square-summable components and joint norm 1.
struct DiracSpinor {
    std::array<Vector, 4> components;
};

DiracSpinor make_dirac_spinor(std::array<Vector, 4> components);

/// The spinor's coefficient matrix as a 4 x n pure state.
PureState spinor_state(const DiracSpinor& spinor);

/// Gram matrix G(a, b) = <psi_a|psi_b> of the components: Hermitian,
/// positive semidefinite, unit trace. Its eigenvalues are the squared
/// Schmidt coefficients of the spinor.
Matrix gram_matrix(const DiracSpinor& spinor);

struct DiracReport {
    SchmidtData schmidt;
    double entropy = 0.0;
};

DiracReport dirac_analyze(const DiracSpinor& spinor);

struct DiracScanResult {
    double max_entropy = 0.0;
    DiracSpinor argmax;
    int samples = 0;
};

/// Samples Haar-random spinors (independent complex Gaussian coordinates,
/// normalized) on an n-slot truncation and records the entropy maximum.
/// Deterministic for a fixed seed; extra spinors join the pool after the
/// random samples. The maximum provably cannot exceed ln 4.
DiracScanResult dirac_conjecture_scan(int samples, int n, std::uint64_t seed,
                                      const std::vector<DiracSpinor>& extra = {});

struct MixedScanResult {
    double max_surrogate_entropy = 0.0;
    int samples = 0;
};

/// Exploratory companion scan over random normalized mixed-pure d = 4
/// tensors. The surrogate entropy is the Shannon entropy of the normalized
/// squared operator Schmidt spectrum; no ceiling is claimed for it.
MixedScanResult mixed_pure_scan(int samples, int n, std::uint64_t seed);

}  // namespace schmidtkit
