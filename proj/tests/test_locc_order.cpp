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
#include <vector>

#include "schmidtkit/locc.hpp"
#include "schmidtkit/random.hpp"
#include "schmidtkit/schmidt.hpp"
#include "test_helpers.hpp"

using namespace schmidtkit;
using namespace schmidtkit::testing;

namespace {

SchmidtProbVector probs(std::initializer_list<double> values) {
    SchmidtProbVector v;
    v.p = RealVector(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) v.p(i++) = x;
    return v;
}

// A pure state whose squared Schmidt coefficients are the given probability
// vector, via a diagonal coefficient matrix.
SchmidtData state_with_spectrum(const std::vector<double>& p) {
    const int d = static_cast<int>(p.size());
    Matrix coeffs = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) coeffs(i, i) = std::sqrt(p[static_cast<std::size_t>(i)]);
    return schmidt_decompose(make_pure_state(coeffs));
}

// Random point of the probability simplex with `d` entries.
std::vector<double> random_simplex(Rng& rng, int d) {
    std::vector<double> p(static_cast<std::size_t>(d));
    double total = 0.0;
    for (double& x : p) {
        const double g = rng.gaussian();
        x = g * g;
        total += x;
    }
    for (double& x : p) x /= total;
    return p;
}

}  // namespace

TEST_CASE("probability vectors square, sort, and sum to one") {
    const SchmidtData bell = state_with_spectrum({0.5, 0.5});
    const SchmidtProbVector v = to_prob_vector(bell);
    REQUIRE(v.p.size() == 2);
    CHECK(v.p(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(v.p(1) == doctest::Approx(0.5).epsilon(1e-12));

    const SchmidtData skew = state_with_spectrum({0.25, 0.5, 0.25});
    const SchmidtProbVector w = to_prob_vector(skew);
    CHECK(w.p(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w.p(1) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(w.p(2) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(w.p.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("prefix sums accumulate") {
    const RealVector sums = prefix_sums(probs({0.5, 0.3, 0.2}));
    REQUIRE(sums.size() == 3);
    CHECK(sums(0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sums(1) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(sums(2) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("majorization on hand-computed pairs") {
    CHECK(majorizes(probs({1.0, 0.0}), probs({0.5, 0.5})));
    CHECK_FALSE(majorizes(probs({0.5, 0.5}), probs({1.0, 0.0})));
    CHECK(majorizes(probs({0.7, 0.3}), probs({0.6, 0.4})));
    CHECK_FALSE(majorizes(probs({0.6, 0.4}), probs({0.7, 0.3})));
    // Classic incomparable pair: prefix sums cross.
    CHECK_FALSE(majorizes(probs({0.5, 0.25, 0.25}), probs({0.4, 0.4, 0.2})));
    CHECK_FALSE(majorizes(probs({0.4, 0.4, 0.2}), probs({0.5, 0.25, 0.25})));
    // Every vector majorizes itself.
    CHECK(majorizes(probs({0.4, 0.4, 0.2}), probs({0.4, 0.4, 0.2})));
}

TEST_CASE("unequal lengths are zero padded") {
    CHECK(majorizes(probs({0.6, 0.4}), probs({0.6, 0.2, 0.2})));
    CHECK_FALSE(majorizes(probs({0.6, 0.2, 0.2}), probs({0.6, 0.4})));
    CHECK(majorizes(probs({1.0}), probs({0.5, 0.5})));
    CHECK(majorizes(probs({0.5, 0.5, 0.0}), probs({0.5, 0.5})));
    CHECK(majorizes(probs({0.5, 0.5}), probs({0.5, 0.5, 0.0})));
}

TEST_CASE("tolerance absorbs small prefix deficits") {
    CHECK_FALSE(majorizes(probs({0.5, 0.5}), probs({0.5 + 1e-6, 0.5 - 1e-6}), 1e-9));
    CHECK(majorizes(probs({0.5, 0.5}), probs({0.5 + 1e-6, 0.5 - 1e-6}), 1e-5));
    CHECK_THROWS_AS(majorizes(probs({1.0}), probs({1.0}), -1.0), Error);
    CHECK_THROWS_AS(majorizes(probs({1.0}), probs({1.0}), std::nan("")), Error);
}

TEST_CASE("verdicts on landmark pairs") {
    const SchmidtData bell = state_with_spectrum({0.5, 0.5});
    const SchmidtData product = state_with_spectrum({1.0, 0.0});
    CHECK(locc_verdict(bell, product) == MajorizationVerdict::Convertible12);
    CHECK(locc_verdict(product, bell) == MajorizationVerdict::Convertible21);
    CHECK(locc_verdict(bell, bell) == MajorizationVerdict::Equivalent);

    const SchmidtData a = state_with_spectrum({0.5, 0.25, 0.25});
    const SchmidtData b = state_with_spectrum({0.4, 0.4, 0.2});
    CHECK(locc_verdict(a, b) == MajorizationVerdict::Incomparable);
    CHECK(locc_verdict(b, a) == MajorizationVerdict::Incomparable);

    CHECK_THROWS_AS(locc_verdict(a, bell), Error);
}

TEST_CASE("uniform spectrum converts to everything, product only to itself") {
    Rng rng(41);
    const int d = 4;
    const SchmidtData uniform = state_with_spectrum({0.25, 0.25, 0.25, 0.25});
    const SchmidtData product = state_with_spectrum({1.0, 0.0, 0.0, 0.0});
    for (int trial = 0; trial < 200; ++trial) {
        const SchmidtData target = state_with_spectrum(random_simplex(rng, d));
        const MajorizationVerdict from_uniform = locc_verdict(uniform, target);
        CHECK((from_uniform == MajorizationVerdict::Convertible12 ||
               from_uniform == MajorizationVerdict::Equivalent));
        const MajorizationVerdict from_product = locc_verdict(product, target);
        CHECK((from_product == MajorizationVerdict::Convertible21 ||
               from_product == MajorizationVerdict::Equivalent));
    }
}

TEST_CASE("majorization order laws on random triples") {
    Rng rng(42);
    for (int trial = 0; trial < 2000; ++trial) {
        const int d = 2 + trial % 4;
        SchmidtProbVector a, b, c;
        auto fill = [&](SchmidtProbVector& v) {
            const std::vector<double> p = random_simplex(rng, d);
            v.p = RealVector(d);
            for (int i = 0; i < d; ++i) v.p(i) = p[static_cast<std::size_t>(i)];
            std::sort(v.p.begin(), v.p.end(), std::greater<double>());
        };
        fill(a);
        fill(b);
        fill(c);
        // Reflexivity.
        CHECK(majorizes(a, a, 0.0));
        // Transitivity.
        if (majorizes(a, b, 0.0) && majorizes(b, c, 0.0)) {
            CHECK(majorizes(a, c, 1e-12));
        }
        // Antisymmetry of the induced order on sorted vectors.
        if (majorizes(a, b, 0.0) && majorizes(b, a, 0.0)) {
            CHECK((a.p - b.p).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("order is blind to the construction basis") {
    Rng rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const std::vector<double> p = random_simplex(rng, 3);
        Matrix coeffs = Matrix::Zero(3, 5);
        for (int i = 0; i < 3; ++i) coeffs(i, i) = std::sqrt(p[static_cast<std::size_t>(i)]);
        const Matrix rotated = rng.haar_unitary(3) * coeffs * rng.haar_unitary(5).transpose();
        const SchmidtData diag_form = schmidt_decompose(make_pure_state(coeffs));
        const SchmidtData rotated_form = schmidt_decompose(make_pure_state(rotated));
        CHECK(locc_verdict(diag_form, rotated_form) == MajorizationVerdict::Equivalent);
    }
}
