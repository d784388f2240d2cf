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
#include <functional>

#include "schmidtkit/json_io.hpp"
#include "schmidtkit/random.hpp"
#include "schmidtkit/state_model.hpp"
#include "test_helpers.hpp"

using namespace schmidtkit;
using namespace schmidtkit::testing;

namespace {

const double kInvSqrt2 = std::sqrt(0.5);

Matrix bell_coeffs() {
    Matrix c = Matrix::Zero(2, 2);
    c(0, 0) = kInvSqrt2;
    c(1, 1) = kInvSqrt2;
    return c;
}

void check_error(ErrorCode expected, const std::function<void()>& fn) {
    try {
        fn();
        FAIL_CHECK("expected an error, code ", error_code_name(expected));
    } catch (const Error& e) {
        CHECK(e.code() == expected);
    }
}

}  // namespace

TEST_CASE("make_pure_state accepts normalized coefficients") {
    const PureState state = make_pure_state(bell_coeffs());
    CHECK(state.d == 2);
    CHECK(state.n == 2);
    CHECK(state.coeffs.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("make_pure_state rejects bad inputs") {
    check_error(ErrorCode::NotNormalized, [] { make_pure_state(Matrix::Zero(2, 3)); });
    check_error(ErrorCode::ZeroVector, [] { make_pure_state(Matrix::Zero(2, 3), true); });
    check_error(ErrorCode::NotNormalized, [] { make_pure_state(2.0 * bell_coeffs()); });
    check_error(ErrorCode::InvalidInput, [] { make_pure_state(Matrix()); });
    Matrix bad = bell_coeffs();
    bad(0, 1) = Complex(std::nan(""), 0.0);
    check_error(ErrorCode::NonFiniteEntry, [bad] { make_pure_state(bad); });
}

TEST_CASE("make_pure_state renormalizes on request") {
    const PureState state = make_pure_state(2.0 * bell_coeffs(), true);
    CHECK(state.coeffs.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(state.coeffs(0, 0) - Complex(kInvSqrt2, 0.0)) < 1e-12);
}

TEST_CASE("product-sum terms validate factor norms") {
    ProductTerm term;
    term.c = Complex(1.0, 0.0);
    term.left = Vector::Zero(2);
    term.left(0) = Complex(2.0, 0.0);
    term.right = Vector::Zero(3);
    term.right(0) = Complex(1.0, 0.0);
    check_error(ErrorCode::NotNormalized, [&] { make_product_sum(2, 3, {term}); });
}

TEST_CASE("assemble of an orthogonal product sum reproduces the matrix") {
    std::vector<ProductTerm> terms(2);
    for (int i = 0; i < 2; ++i) {
        terms[i].c = Complex(kInvSqrt2, 0.0);
        terms[i].left = Vector::Zero(2);
        terms[i].left(i) = Complex(1.0, 0.0);
        terms[i].right = Vector::Zero(2);
        terms[i].right(i) = Complex(1.0, 0.0);
    }
    const ProductSumState state = make_product_sum(2, 2, terms);
    const PureState assembled = assemble(state);
    CHECK(max_abs_diff(assembled.coeffs, bell_coeffs()) < 1e-12);
}

TEST_CASE("assemble rejects a far-from-normalized sum") {
    // Two copies of the same product term add coherently to norm sqrt(2).
    ProductTerm term;
    term.c = Complex(kInvSqrt2, 0.0);
    term.left = Vector::Zero(2);
    term.left(0) = Complex(1.0, 0.0);
    term.right = Vector::Zero(2);
    term.right(0) = Complex(1.0, 0.0);
    const ProductSumState state = make_product_sum(2, 2, {term, term});
    check_error(ErrorCode::NotNormalized, [&] { assemble(state); });
}

TEST_CASE("assemble repairs rounding-level norm drift") {
    ProductTerm term;
    term.c = Complex(1.0 + 1e-8, 0.0);
    term.left = Vector::Zero(2);
    term.left(0) = Complex(1.0, 0.0);
    term.right = Vector::Zero(2);
    term.right(0) = Complex(1.0, 0.0);
    const PureState assembled = assemble(make_product_sum(2, 2, {term}));
    CHECK(assembled.coeffs.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mixed-pure flags record trace and purity structure") {
    std::vector<Matrix> slices(2, Matrix::Zero(2, 2));
    slices[0](0, 0) = Complex(0.6, 0.0);
    slices[1](1, 1) = Complex(0.8, 0.0);
    const MixedPureState state = make_mixed_pure(slices);
    CHECK(state.trace_one);

    std::vector<Matrix> traceless(1, Matrix::Zero(2, 2));
    traceless[0](0, 1) = Complex(1.0, 0.0);
    CHECK_FALSE(make_mixed_pure(traceless).trace_one);
}

TEST_CASE("mixed-pure construction rejects shape mismatches") {
    std::vector<Matrix> slices;
    slices.push_back(Matrix::Zero(2, 2));
    slices.push_back(Matrix::Zero(3, 3));
    check_error(ErrorCode::DimensionError, [&] { make_mixed_pure(slices); });
    check_error(ErrorCode::InvalidInput, [] { make_mixed_pure({}); });
}

TEST_CASE("state JSON round trip preserves every kind") {
    Rng rng(7);
    const PureState pure = rng.pure_state(3, 5);
    const StateVariant round = parse_state(dump_line(state_to_json(pure)));
    CHECK(max_abs_diff(std::get<PureState>(round).coeffs, pure.coeffs) < 1e-15);

    const MixedPureState mixed = random_hermitian_mixed(rng, 2, 3);
    const StateVariant mixed_round = parse_state(dump_line(state_to_json(mixed)));
    const MixedPureState& mixed_back = std::get<MixedPureState>(mixed_round);
    REQUIRE(mixed_back.slices.size() == mixed.slices.size());
    for (std::size_t k = 0; k < mixed.slices.size(); ++k) {
        CHECK(max_abs_diff(mixed_back.slices[k], mixed.slices[k]) < 1e-15);
    }
}

TEST_CASE("parse_state reports schema violations precisely") {
    check_error(ErrorCode::SchemaError, [] { parse_state("not json at all"); });
    check_error(ErrorCode::SchemaError, [] { parse_state("{\"kind\":\"banana\"}"); });
    check_error(ErrorCode::SchemaError,
                [] { parse_state("{\"kind\":\"pure\",\"d\":2,\"n\":2}"); });
    check_error(ErrorCode::NonFiniteEntry, [] {
        parse_state("{\"kind\":\"pure\",\"d\":1,\"n\":1,\"coeffs\":[[[NaN,0]]]}");
    });
    check_error(ErrorCode::NonFiniteEntry, [] {
        parse_state("{\"kind\":\"pure\",\"d\":1,\"n\":1,\"coeffs\":[[[\"inf\",0]]]}");
    });
    check_error(ErrorCode::DimensionError, [] {
        parse_state("{\"kind\":\"pure\",\"d\":3,\"n\":1,\"coeffs\":[[[1.0,0]]]}");
    });
    check_error(ErrorCode::DimensionError, [] {
        parse_state("{\"kind\":\"pure\",\"d\":0,\"n\":1,\"coeffs\":[[[1.0,0]]]}");
    });
    check_error(ErrorCode::InvalidInput, [] { load_state_file("/nonexistent/state.json"); });
}

TEST_CASE("serialization collapses negative zero") {
    Matrix c = Matrix::Zero(1, 2);
    c(0, 0) = Complex(1.0, -0.0);
    c(0, 1) = Complex(-0.0, 0.0);
    const Json j = state_to_json(make_pure_state(c));
    CHECK(dump_line(j).find("-0") == std::string::npos);
}

TEST_CASE("schmidt data validation rejects tampered invariants") {
    SchmidtData data;
    data.rank = 1;
    data.tau = RealVector::Zero(2);
    data.tau(0) = 0.5;
    data.tau(1) = 1.0;
    data.left = Matrix::Identity(2, 2);
    data.right = Matrix::Identity(2, 2);
    check_error(ErrorCode::InvalidInput, [&] { validate(data); });

    data.tau(0) = 1.0;
    data.tau(1) = 0.0;
    data.left(0, 0) = Complex(2.0, 0.0);
    check_error(ErrorCode::NumericalFailure, [&] { validate(data); });
}
