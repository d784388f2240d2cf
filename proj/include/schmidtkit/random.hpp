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
#include <random>

#include "schmidtkit/types.hpp"

namespace schmidtkit {

/// SplitMix64 step, used to derive independent per-sample seeds from a
/// master seed. Stable across platforms.
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic random source for sampling states and operators. All
/// distributions are implemented on top of the raw 64-bit stream, so a seed
/// reproduces the same values on every platform and standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Standard normal via Box-Muller on the uniform stream.
    double gaussian();

    Complex complex_gaussian();

    /// Matrix of independent standard complex Gaussians.
    Matrix ginibre(int rows, int cols);

    /// Haar-distributed unitary (QR of a Ginibre matrix with the standard
    /// phase correction).
    Matrix haar_unitary(int d);

    /// Random density matrix G G^dagger / tr, full rank almost surely.
    Matrix density_matrix(int d);

    /// Haar-random unit vector in C^dim.
    Vector unit_vector(int dim);

    /// Random normalized PureState with Ginibre coefficients.
    PureState pure_state(int d, int n);

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace schmidtkit
