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

#include "schmidtkit/physics.hpp"

#include <cmath>
#include <utility>

#include "schmidtkit/mixed_pure.hpp"
#include "schmidtkit/random.hpp"

namespace schmidtkit {

namespace {

// Regime thresholds on |sigma|: below the lower one the orbitals count as
// orthogonal, above the upper one as linearly dependent.
constexpr double kRegimeTol = 1e-10;

double shannon_entropy(const RealVector& probs) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
        const double p = probs(i);
        if (p > 0.0) h -= p * std::log(p);
    }
    return std::max(h, 0.0);
}

DiracSpinor spinor_from_state(const PureState& state) {
    std::array<Vector, 4> components;
    for (int mu = 0; mu < 4; ++mu) {
        components[static_cast<std::size_t>(mu)] = state.coeffs.row(mu).transpose();
    }
    return DiracSpinor{std::move(components)};
}

}  // namespace

BlochInput make_bloch_input(double c1, double c2, Vector theta1, Vector theta2) {
    if (!std::isfinite(c1) || !std::isfinite(c2) || c1 < 0.0 || c2 < 0.0) {
        throw Error(ErrorCode::InvalidInput, "weights must be finite and nonnegative");
    }
    if (std::abs(c1 * c1 + c2 * c2 - 1.0) > kNormTol) {
        throw Error(ErrorCode::InvalidInput, "weights must satisfy c1^2 + c2^2 = 1");
    }
    if (theta1.size() < 1 || theta1.size() != theta2.size()) {
        throw Error(ErrorCode::InvalidInput, "orbital factors must have equal positive dimension");
    }
    if (!theta1.allFinite() || !theta2.allFinite()) {
        throw Error(ErrorCode::InvalidInput, "orbital factors contain a non-finite entry");
    }
    if (std::abs(theta1.norm() - 1.0) > kNormTol || std::abs(theta2.norm() - 1.0) > kNormTol) {
        throw Error(ErrorCode::InvalidInput, "orbital factors must be unit vectors");
    }
    return BlochInput{c1, c2, std::move(theta1), std::move(theta2)};
}

BlochInput bloch_input_from_sigma(double c1, double sigma) {
    if (!std::isfinite(sigma) || sigma < 0.0 || sigma > 1.0) {
        throw Error(ErrorCode::InvalidInput, "sigma must lie in [0, 1]");
    }
    if (!std::isfinite(c1) || c1 < 0.0 || c1 > 1.0) {
        throw Error(ErrorCode::InvalidInput, "c1 must lie in [0, 1]");
    }
    const double c2 = std::sqrt(std::max(0.0, 1.0 - c1 * c1));
    Vector theta1 = Vector::Zero(2);
    theta1(0) = 1.0;
    Vector theta2 = Vector::Zero(2);
    theta2(0) = sigma;
    theta2(1) = std::sqrt(std::max(0.0, 1.0 - sigma * sigma));
    return make_bloch_input(c1, c2, std::move(theta1), std::move(theta2));
}

PureState assemble_bloch(const BlochInput& input) {
    Matrix coeffs(2, input.theta1.size());
    coeffs.row(0) = input.c1 * input.theta1.transpose();
    coeffs.row(1) = input.c2 * input.theta2.transpose();
    return make_pure_state(coeffs);
}

BlochReport bloch_analyze(const BlochInput& input) {
    make_bloch_input(input.c1, input.c2, input.theta1, input.theta2);

    BlochReport report;
    report.sigma = input.theta1.dot(input.theta2);
    report.delta = std::abs(Complex(1.0, 0.0) - report.sigma);

    const Complex cross = input.c1 * input.c2 * report.sigma;
    report.rho = Matrix(2, 2);
    report.rho(0, 0) = input.c1 * input.c1;
    report.rho(0, 1) = cross;
    report.rho(1, 0) = std::conj(cross);
    report.rho(1, 1) = input.c2 * input.c2;

    Eigen::SelfAdjointEigenSolver<Matrix> solver(report.rho, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::NumericalFailure, "eigenvalue computation did not converge");
    }
    report.entropy = shannon_entropy(solver.eigenvalues().cwiseMax(0.0));

    const double overlap = std::abs(report.sigma);
    if (overlap < kRegimeTol) {
        report.regime = BlochRegime::Orthogonal;
    } else if (overlap > 1.0 - kRegimeTol) {
        report.regime = BlochRegime::Dependent;
    } else {
        report.regime = BlochRegime::Intermediate;
    }
    return report;
}

const char* to_string(BlochRegime regime) {
    switch (regime) {
        case BlochRegime::Orthogonal: return "Orthogonal";
        case BlochRegime::Dependent: return "Dependent";
        case BlochRegime::Intermediate: return "Intermediate";
    }
    return "Intermediate";
}

DiracSpinor make_dirac_spinor(std::array<Vector, 4> components) {
    const Eigen::Index n = components[0].size();
    for (const Vector& component : components) {
        if (component.size() != n || n < 1) {
            throw Error(ErrorCode::DimensionError, "spinor components must have equal dimension");
        }
    }
    DiracSpinor spinor{std::move(components)};
    spinor_state(spinor);
    return spinor;
}

PureState spinor_state(const DiracSpinor& spinor) {
    const Eigen::Index n = spinor.components[0].size();
    Matrix coeffs(4, n);
    for (int mu = 0; mu < 4; ++mu) {
        coeffs.row(mu) = spinor.components[static_cast<std::size_t>(mu)].transpose();
    }
    return make_pure_state(coeffs);
}

Matrix gram_matrix(const DiracSpinor& spinor) {
    spinor_state(spinor);
    Matrix gram(4, 4);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            gram(a, b) = spinor.components[static_cast<std::size_t>(a)].dot(
                spinor.components[static_cast<std::size_t>(b)]);
        }
    }
    return gram;
}

DiracReport dirac_analyze(const DiracSpinor& spinor) {
    DiracReport report;
    report.schmidt = schmidt_decompose(spinor_state(spinor));
    report.entropy = entanglement_entropy(report.schmidt);
    return report;
}

DiracScanResult dirac_conjecture_scan(int samples, int n, std::uint64_t seed,
                                      const std::vector<DiracSpinor>& extra) {
    if (samples < 1) {
        throw Error(ErrorCode::InvalidInput, "need at least one sample");
    }
    if (n < 4) {
        throw Error(ErrorCode::InvalidInput, "scan needs n >= 4");
    }
    DiracScanResult result;
    result.max_entropy = -1.0;
    const auto consider = [&result](const DiracSpinor& spinor) {
        const double entropy = dirac_analyze(spinor).entropy;
        if (entropy > result.max_entropy) {
            result.max_entropy = entropy;
            result.argmax = spinor;
        }
        ++result.samples;
    };
    for (int i = 0; i < samples; ++i) {
        // Independent per-sample seeds from the SplitMix64 stream keep the
        // scan reproducible under any evaluation order.
        Rng rng(splitmix64(seed + static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ULL));
        consider(spinor_from_state(rng.pure_state(4, n)));
    }
    for (const DiracSpinor& spinor : extra) {
        consider(spinor);
    }
    return result;
}

MixedScanResult mixed_pure_scan(int samples, int n, std::uint64_t seed) {
    if (samples < 1 || n < 1) {
        throw Error(ErrorCode::InvalidInput, "need at least one sample and one slot");
    }
    MixedScanResult result;
    for (int i = 0; i < samples; ++i) {
        Rng rng(splitmix64(seed + static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ULL));
        std::vector<Matrix> slices;
        slices.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) slices.push_back(rng.ginibre(4, 4));
        const MixedPureState q = make_mixed_pure(slices, true);
        const OperatorSchmidtData osd = operator_schmidt(q);
        const double surrogate = shannon_entropy(osd.lambdas.cwiseProduct(osd.lambdas));
        result.max_surrogate_entropy = std::max(result.max_surrogate_entropy, surrogate);
        ++result.samples;
    }
    return result;
}

}  // namespace schmidtkit
