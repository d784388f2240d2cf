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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "schmidtkit/physics.hpp"
#include "schmidtkit/random.hpp"
#include "schmidtkit/schmidt.hpp"
#include "test_helpers.hpp"

using namespace schmidtkit;
using namespace schmidtkit::testing;

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kLn4 = 1.3862943611198906;
// Direct evaluation of -sum p ln p at (0.75, 0.25).
constexpr double kEntropyThreeQuarters = 0.5623351446188083;
// Direct evaluation at (0.4, 0.3, 0.2, 0.1).
constexpr double kEntropyTenths = 1.2798542258336674;

DiracSpinor diagonal_spinor(const std::array<double, 4>& weights, int n) {
    std::array<Vector, 4> components;
    for (int mu = 0; mu < 4; ++mu) {
        components[static_cast<std::size_t>(mu)] = Vector::Zero(n);
        components[static_cast<std::size_t>(mu)](mu) =
            std::sqrt(weights[static_cast<std::size_t>(mu)]);
    }
    return make_dirac_spinor(std::move(components));
}

DiracSpinor random_spinor(Rng& rng, int n) {
    std::array<Vector, 4> components;
    double total = 0.0;
    for (Vector& component : components) {
        component = Vector(n);
        for (Eigen::Index i = 0; i < n; ++i) component(i) = rng.complex_gaussian();
        total += component.squaredNorm();
    }
    for (Vector& component : components) component /= std::sqrt(total);
    return make_dirac_spinor(std::move(components));
}

}  // namespace

TEST_CASE("orthogonal orbitals give a maximally entangled spin") {
    const BlochReport report = bloch_analyze(bloch_input_from_sigma(std::sqrt(0.5), 0.0));
    CHECK(std::abs(report.sigma) < 1e-15);
    CHECK(report.delta == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.entropy == doctest::Approx(kLn2).epsilon(1e-12));
    CHECK(report.regime == BlochRegime::Orthogonal);
}

TEST_CASE("identical orbitals give a product state") {
    Vector theta = Vector::Zero(3);
    theta(1) = 1.0;
    const BlochReport report =
        bloch_analyze(make_bloch_input(0.6, 0.8, theta, theta));
    CHECK(std::abs(report.sigma - 1.0) < 1e-15);
    CHECK(report.delta < 1e-15);
    CHECK(report.entropy < 1e-12);
    CHECK(report.regime == BlochRegime::Dependent);
}

TEST_CASE("half overlap at equal weights") {
    const BlochReport report = bloch_analyze(bloch_input_from_sigma(std::sqrt(0.5), 0.5));
    CHECK(report.entropy == doctest::Approx(kEntropyThreeQuarters).epsilon(1e-12));
    CHECK(report.regime == BlochRegime::Intermediate);
    const std::vector<double> eigs = hermitian_eigenvalues(report.rho);
    CHECK(eigs[0] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(eigs[1] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(std::abs(report.rho.trace() - 1.0) < 1e-12);
}

TEST_CASE("reduced-density route agrees with the assembled Schmidt route") {
    Rng rng(51);
    for (int trial = 0; trial < 200; ++trial) {
        const double c1 = std::sqrt(rng.uniform());
        const double c2 = std::sqrt(std::max(0.0, 1.0 - c1 * c1));
        const Vector theta1 = rng.unit_vector(4);
        const Vector theta2 = rng.unit_vector(4);
        const BlochInput input = make_bloch_input(c1, c2, theta1, theta2);
        const BlochReport report = bloch_analyze(input);

        const double schmidt_route =
            entanglement_entropy(schmidt_decompose(assemble_bloch(input)));
        CHECK(std::abs(report.entropy - schmidt_route) < 1e-9);
        CHECK(report.delta == doctest::Approx(std::abs(Complex(1, 0) - report.sigma))
                                  .epsilon(1e-12));
        CHECK(report.entropy <= kLn2 + 1e-12);
        CHECK(std::abs(report.sigma - theta1.dot(theta2)) < 1e-12);
    }
}

TEST_CASE("bloch input validation") {
    Vector unit = Vector::Zero(2);
    unit(0) = 1.0;
    const double s = std::sqrt(0.5);
    CHECK_THROWS_AS(make_bloch_input(0.9, 0.9, unit, unit), Error);
    CHECK_THROWS_AS(make_bloch_input(-s, s, unit, unit), Error);
    CHECK_THROWS_AS(make_bloch_input(s, s, 2.0 * unit, unit), Error);
    CHECK_THROWS_AS(make_bloch_input(s, s, unit, Vector::Zero(3)), Error);
    CHECK_THROWS_AS(make_bloch_input(s, s, Vector(), Vector()), Error);
    CHECK_THROWS_AS(bloch_input_from_sigma(s, -0.1), Error);
    CHECK_THROWS_AS(bloch_input_from_sigma(s, 1.1), Error);
    CHECK_THROWS_AS(bloch_input_from_sigma(1.5, 0.5), Error);
}

TEST_CASE("entropy decreases strictly along the overlap sweep") {
    double previous = kLn2;
    for (int i = 1; i <= 19; ++i) {
        const double sigma = 0.05 * i;
        const BlochReport report =
            bloch_analyze(bloch_input_from_sigma(std::sqrt(0.5), sigma));
        CHECK(report.entropy < kLn2);
        CHECK(report.entropy < previous);
        previous = report.entropy;
    }
}

TEST_CASE("gram matrix of orthogonal components is diagonal") {
    const DiracSpinor spinor = diagonal_spinor({0.4, 0.3, 0.2, 0.1}, 4);
    const Matrix gram = gram_matrix(spinor);
    CHECK(max_abs_diff(gram, gram.adjoint()) < 1e-15);
    CHECK(std::abs(gram.trace() - 1.0) < 1e-12);
    CHECK(std::abs(gram(0, 0) - 0.4) < 1e-15);
    CHECK(std::abs(gram(1, 1) - 0.3) < 1e-15);
    CHECK(std::abs(gram(2, 2) - 0.2) < 1e-15);
    CHECK(std::abs(gram(3, 3) - 0.1) < 1e-15);
    CHECK(dirac_analyze(spinor).entropy == doctest::Approx(kEntropyTenths).epsilon(1e-12));
}

TEST_CASE("gram spectrum equals the squared Schmidt coefficients") {
    Rng rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        const DiracSpinor spinor = random_spinor(rng, 3 + trial % 6);
        const Matrix gram = gram_matrix(spinor);
        const std::vector<double> gram_eigs = hermitian_eigenvalues(gram);
        CHECK(gram_eigs.back() > -1e-12);
        const DiracReport report = dirac_analyze(spinor);
        for (Eigen::Index i = 0; i < report.schmidt.tau.size(); ++i) {
            const double tau2 = report.schmidt.tau(i) * report.schmidt.tau(i);
            CHECK(std::abs(gram_eigs[static_cast<std::size_t>(i)] - tau2) < 1e-10);
        }
    }
}

TEST_CASE("proportional components collapse to a product spinor") {
    Vector base = Vector::Zero(5);
    base(2) = 0.5;
    std::array<Vector, 4> components{base, base, base, base};
    const DiracSpinor spinor = make_dirac_spinor(std::move(components));
    const Matrix gram = gram_matrix(spinor);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            CHECK(std::abs(gram(a, b) - 0.25) < 1e-15);
        }
    }
    CHECK(dirac_analyze(spinor).entropy < 1e-12);
}

TEST_CASE("spinor validation") {
    Vector unit = Vector::Zero(2);
    unit(0) = 1.0;
    Vector longer = Vector::Zero(3);
    longer(0) = 1.0;
    CHECK_THROWS_AS(make_dirac_spinor({unit, unit, unit, longer}), Error);
    CHECK_THROWS_AS(make_dirac_spinor({Vector(), Vector(), Vector(), Vector()}), Error);
    CHECK_THROWS_AS(make_dirac_spinor({unit, unit, unit, unit}), Error);
}

TEST_CASE("scan is deterministic and capped at ln 4") {
    const DiracScanResult first = dirac_conjecture_scan(200, 4, 777);
    const DiracScanResult second = dirac_conjecture_scan(200, 4, 777);
    CHECK(first.max_entropy == second.max_entropy);
    CHECK(first.samples == 200);
    CHECK(first.max_entropy <= kLn4 + 1e-12);
    CHECK(first.max_entropy == doctest::Approx(1.1990925498546192).epsilon(1e-12));
    for (int mu = 0; mu < 4; ++mu) {
        CHECK(max_abs_diff(first.argmax.components[static_cast<std::size_t>(mu)],
                           second.argmax.components[static_cast<std::size_t>(mu)]) == 0.0);
    }
}

TEST_CASE("injected maximizer saturates the bound") {
    const DiracSpinor maximizer = diagonal_spinor({0.25, 0.25, 0.25, 0.25}, 8);
    const DiracScanResult result = dirac_conjecture_scan(50, 8, 99, {maximizer});
    CHECK(result.samples == 51);
    CHECK(result.max_entropy == doctest::Approx(kLn4).epsilon(1e-12));
    CHECK(dirac_analyze(result.argmax).entropy == doctest::Approx(kLn4).epsilon(1e-12));
}

TEST_CASE("scan validation") {
    CHECK_THROWS_AS(dirac_conjecture_scan(0, 8, 1), Error);
    CHECK_THROWS_AS(dirac_conjecture_scan(10, 3, 1), Error);
    CHECK_THROWS_AS(mixed_pure_scan(0, 4, 1), Error);
    CHECK_THROWS_AS(mixed_pure_scan(10, 0, 1), Error);
}

TEST_CASE("mixed-pure companion scan runs deterministically") {
    const MixedScanResult first = mixed_pure_scan(20, 4, 1234);
    const MixedScanResult second = mixed_pure_scan(20, 4, 1234);
    CHECK(first.samples == 20);
    CHECK(first.max_surrogate_entropy == second.max_surrogate_entropy);
    CHECK(first.max_surrogate_entropy > 0.0);
}
