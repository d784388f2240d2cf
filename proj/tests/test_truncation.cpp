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

#include "schmidtkit/random.hpp"
#include "schmidtkit/truncation.hpp"
#include "test_helpers.hpp"

using namespace schmidtkit;
using namespace schmidtkit::testing;

TEST_CASE("geometric source matches closed-form sums") {
    const GeometricSource source({1.0}, {0.5});
    CHECK(source.dim() == 1);

    // Row mass captured by the first four slots: 1 - 2^-4.
    const Truncation truncated = truncate(source, 4);
    CHECK(std::abs(truncated.raw_norm - std::sqrt(0.9375)) < 1e-15);
    CHECK(std::abs(truncated.raw_norm - 0.9682458365518543) < 1e-15);
    CHECK(std::abs(truncated.state.coeffs.norm() - 1.0) < 1e-12);

    const auto tail = source.tail_bound(4);
    REQUIRE(tail.has_value());
    CHECK(std::abs(*tail - 0.0625) < 1e-15);

    double direct = 0.0;
    for (int k = 1; k <= 4; ++k) direct += std::norm(source.coeff(0, k));
    CHECK(std::abs(direct - 0.9375) < 1e-15);
}

TEST_CASE("geometric source rejects bad parameters") {
    CHECK_THROWS_AS(GeometricSource({1.0}, {1.0}), Error);
    CHECK_THROWS_AS(GeometricSource({1.0}, {0.0}), Error);
    CHECK_THROWS_AS(GeometricSource({1.0}, {0.5, 0.5}), Error);
    CHECK_THROWS_AS(GeometricSource({}, {}), Error);
}

TEST_CASE("interleaved rows occupy disjoint slot classes") {
    const GeometricSource source({std::sqrt(0.6), std::sqrt(0.4)}, {0.3, 0.5});
    for (int k = 1; k <= 8; ++k) {
        for (int alpha = 0; alpha < 2; ++alpha) {
            const bool occupied = (k - 1) % 2 == alpha;
            CHECK((std::abs(source.coeff(alpha, k)) > 0.0) == occupied);
        }
    }
}

TEST_CASE("power-law source normalizes and bounds its tail") {
    const PowerLawSource source({1.0}, {1.2});
    double mass = 0.0;
    for (int k = 1; k <= 20000; ++k) mass += std::norm(source.coeff(0, k));
    const auto tail = source.tail_bound(20000);
    REQUIRE(tail.has_value());
    CHECK(mass <= 1.0 + 1e-12);
    CHECK(mass + *tail >= 1.0 - 1e-9);
    CHECK_THROWS_AS(PowerLawSource({1.0}, {0.5}), Error);
}

TEST_CASE("finite source reproduces its state and certifies zero tail") {
    Rng rng(21);
    const PureState psi = rng.pure_state(2, 6);
    const FiniteSource source(psi);
    for (int k = 1; k <= 6; ++k) {
        CHECK(std::abs(source.coeff(0, k) - psi.coeffs(0, k - 1)) < 1e-15);
    }
    CHECK(std::abs(source.coeff(0, 7)) == 0.0);
    CHECK(std::abs(*source.tail_bound(6)) == 0.0);
    CHECK(*source.tail_bound(3) > 0.0);
}

TEST_CASE("truncate raises ZeroVector when nothing is captured") {
    Matrix c = Matrix::Zero(1, 3);
    c(0, 2) = 1.0;
    const FiniteSource source(make_pure_state(c));
    CHECK_THROWS_AS(truncate(source, 1), Error);
    try {
        truncate(source, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroVector);
    }
}

TEST_CASE("weyl gap closed form and soundness") {
    Matrix a = Matrix::Zero(2, 2);
    a(0, 0) = 1.0;
    Matrix b = Matrix::Zero(2, 2);
    b(0, 0) = 0.9;
    b(1, 1) = 0.1;
    CHECK(std::abs(weyl_gap(a, b) - 0.1) < 1e-15);
    CHECK(weyl_gap(a, a) == 0.0);
    CHECK_THROWS_AS(weyl_gap(a, Matrix::Zero(3, 3)), Error);

    Rng rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const Matrix ga = rng.ginibre(3, 3);
        const Matrix gb = rng.ginibre(3, 3);
        const Matrix ha = (ga + ga.adjoint()) / 2.0;
        const Matrix hb = (gb + gb.adjoint()) / 2.0;
        const std::vector<double> ea = hermitian_eigenvalues(ha);
        const std::vector<double> eb = hermitian_eigenvalues(hb);
        double max_gap = 0.0;
        for (std::size_t i = 0; i < ea.size(); ++i) {
            max_gap = std::max(max_gap, std::abs(ea[i] - eb[i]));
        }
        CHECK(max_gap <= weyl_gap(ha, hb) + 1e-12);
    }
}

TEST_CASE("convergence on the two-row geometric source hits the analytic limit") {
    const double w1 = std::sqrt(0.6);
    const double w2 = std::sqrt(0.4);
    const GeometricSource source({w1, w2}, {0.3, 0.5});
    const ConvergenceReport report = converge_schmidt(source, 1e-10, 2, 1 << 20);

    CHECK(report.weyl_bound < 1e-10);
    CHECK(report.rank_certified);
    CHECK(report.schmidt.rank == 2);
    // Disjoint row supports make the rows orthogonal, so the limiting tau
    // are exactly the row weights.
    CHECK(std::abs(report.schmidt.tau(0) - w1) < 1e-9);
    CHECK(std::abs(report.schmidt.tau(1) - w2) < 1e-9);

    // Monotone capture and the Weyl bound between successive snapshots.
    for (std::size_t i = 1; i < report.iterations.size(); ++i) {
        const auto& prev = report.iterations[i - 1];
        const auto& next = report.iterations[i];
        CHECK(next.tau.norm() >= prev.tau.norm() - 1e-15);
        const Matrix block_a = truncation_block(source, prev.n);
        const Matrix block_b = truncation_block(source, next.n);
        const Matrix delta_a = block_a * block_a.adjoint();
        const Matrix delta_b = block_b * block_b.adjoint();
        const double gap = weyl_gap(delta_a, delta_b);
        for (int alpha = 0; alpha < 2; ++alpha) {
            const double move =
                std::abs(prev.tau(alpha) * prev.tau(alpha) - next.tau(alpha) * next.tau(alpha));
            CHECK(move <= gap + 1e-12);
        }
    }
}

TEST_CASE("finitely supported sources stop at the first covering truncation") {
    Matrix c = Matrix::Zero(2, 8);
    c(0, 0) = std::sqrt(0.5);
    c(1, 7) = std::sqrt(0.5);
    const FiniteSource source(make_pure_state(c));
    const ConvergenceReport report = converge_schmidt(source, 1e-12, 1, 1 << 20);
    CHECK(report.final_n == 8);
    CHECK(report.weyl_bound == 0.0);
    CHECK(std::abs(report.schmidt.tau(0) - std::sqrt(0.5)) < 1e-12);
    CHECK(report.rank_certified);
}

TEST_CASE("convergence failure carries the partial report") {
    const GeometricSource source({1.0}, {0.999});
    try {
        converge_schmidt(source, 1e-12, 2, 64);
        FAIL_CHECK("expected NoConvergenceError");
    } catch (const NoConvergenceError& e) {
        CHECK(e.code() == ErrorCode::NoConvergence);
        CHECK(e.partial().final_n == 64);
        CHECK(!e.partial().iterations.empty());
    }
}

TEST_CASE("tolerance validation") {
    const GeometricSource source({1.0}, {0.5});
    CHECK_THROWS_AS(converge_schmidt(source, 0.0, 2, 16), Error);
    CHECK_THROWS_AS(converge_schmidt(source, -1.0, 2, 16), Error);
    CHECK_THROWS_AS(converge_schmidt(source, 1e-8, 0, 16), Error);
    CHECK_THROWS_AS(converge_schmidt(source, 1e-8, 32, 16), Error);
}

TEST_CASE("rank is nondecreasing in the truncation size on finite sources") {
    Rng rng(23);
    const PureState psi = rng.pure_state(3, 12);
    const FiniteSource source(psi);
    int last_rank = 0;
    for (int n = 1; n <= 12; n *= 2) {
        const SchmidtData sd = schmidt_decompose(truncate(source, n).state);
        CHECK(sd.rank >= last_rank);
        last_rank = sd.rank;
    }
}
