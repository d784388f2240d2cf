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

#include "schmidtkit/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace schmidtkit {

namespace {

// Collapses -0.0 to 0.0 so that byte-level output does not depend on the
// sign of a zero produced along the way.
double clean(double x) {
    return x == 0.0 ? 0.0 : x;
}

double number_from_json(const Json& j, const std::string& where) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (s.find("nan") != std::string::npos || s.find("inf") != std::string::npos) {
            throw Error(ErrorCode::NonFiniteEntry, where + " is not finite");
        }
        throw Error(ErrorCode::SchemaError, where + " must be a number");
    }
    if (!j.is_number()) {
        throw Error(ErrorCode::SchemaError, where + " must be a number");
    }
    const double x = j.get<double>();
    if (!std::isfinite(x)) {
        throw Error(ErrorCode::NonFiniteEntry, where + " is not finite");
    }
    return x;
}

int positive_int_from_json(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) {
        throw Error(ErrorCode::SchemaError, where + " must be an integer");
    }
    const std::int64_t value = j.get<std::int64_t>();
    if (value < 1 || value > 1 << 24) {
        throw Error(ErrorCode::DimensionError, where + " is out of range");
    }
    return static_cast<int>(value);
}

const Json& member(const Json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw Error(ErrorCode::SchemaError, std::string("missing key \"") + key + "\"");
    }
    return *it;
}

PureState pure_from_json(const Json& j) {
    const int d = positive_int_from_json(member(j, "d"), "d");
    const int n = positive_int_from_json(member(j, "n"), "n");
    const Matrix coeffs = matrix_from_json(member(j, "coeffs"), "coeffs");
    if (coeffs.rows() != d || coeffs.cols() != n) {
        throw Error(ErrorCode::DimensionError, "coeffs shape does not match declared d and n");
    }
    return make_pure_state(coeffs);
}

ProductSumState product_sum_from_json(const Json& j) {
    const int d = positive_int_from_json(member(j, "d"), "d");
    const int n = positive_int_from_json(member(j, "n"), "n");
    const Json& terms_json = member(j, "terms");
    if (!terms_json.is_array() || terms_json.empty()) {
        throw Error(ErrorCode::SchemaError, "\"terms\" must be a nonempty array");
    }
    std::vector<ProductTerm> terms;
    terms.reserve(terms_json.size());
    for (std::size_t i = 0; i < terms_json.size(); ++i) {
        const Json& term_json = terms_json[i];
        const std::string where = "terms[" + std::to_string(i) + "]";
        if (!term_json.is_object()) {
            throw Error(ErrorCode::SchemaError, where + " must be an object");
        }
        ProductTerm term;
        term.c = complex_from_json(member(term_json, "c"), where + ".c");
        term.left = vector_from_json(member(term_json, "left"), where + ".left");
        term.right = vector_from_json(member(term_json, "right"), where + ".right");
        terms.push_back(std::move(term));
    }
    return make_product_sum(d, n, std::move(terms));
}

MixedPureState mixed_pure_from_json(const Json& j) {
    const int d = positive_int_from_json(member(j, "d"), "d");
    const int n = positive_int_from_json(member(j, "n"), "n");
    const Json& slices_json = member(j, "slices");
    if (!slices_json.is_array() || static_cast<int>(slices_json.size()) != n) {
        throw Error(ErrorCode::DimensionError, "\"slices\" must be an array of length n");
    }
    std::vector<Matrix> slices;
    slices.reserve(slices_json.size());
    for (std::size_t k = 0; k < slices_json.size(); ++k) {
        const std::string where = "slices[" + std::to_string(k) + "]";
        Matrix slice = matrix_from_json(slices_json[k], where);
        if (slice.rows() != d || slice.cols() != d) {
            throw Error(ErrorCode::DimensionError, where + " must be a d x d matrix");
        }
        slices.push_back(std::move(slice));
    }
    return make_mixed_pure(slices);
}

}  // namespace

Json complex_to_json(const Complex& z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorCode::NonFiniteEntry, "cannot serialize a non-finite value");
    }
    return Json::array({clean(z.real()), clean(z.imag())});
}

Complex complex_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) {
        throw Error(ErrorCode::SchemaError, where + " must be an [re, im] pair");
    }
    return Complex(number_from_json(j[0], where + "[0]"), number_from_json(j[1], where + "[1]"));
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(complex_to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) {
        throw Error(ErrorCode::SchemaError, where + " must be a nonempty array of rows");
    }
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) {
        throw Error(ErrorCode::SchemaError, where + "[0] must be a nonempty row");
    }
    const std::size_t cols = j[0].size();
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string row_where = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != cols) {
            throw Error(ErrorCode::SchemaError, row_where + " has inconsistent length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
                complex_from_json(j[i][c], row_where + "[" + std::to_string(c) + "]");
        }
    }
    return m;
}

Json vector_to_json(const Vector& v) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        arr.push_back(complex_to_json(v(i)));
    }
    return arr;
}

Vector vector_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) {
        throw Error(ErrorCode::SchemaError, where + " must be a nonempty array");
    }
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) =
            complex_from_json(j[i], where + "[" + std::to_string(i) + "]");
    }
    return v;
}

Json real_vector_to_json(const RealVector& v) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v(i))) {
            throw Error(ErrorCode::NonFiniteEntry, "cannot serialize a non-finite value");
        }
        arr.push_back(clean(v(i)));
    }
    return arr;
}

Json state_to_json(const PureState& state) {
    return Json{{"kind", "pure"},
                {"d", state.d},
                {"n", state.n},
                {"coeffs", matrix_to_json(state.coeffs)}};
}

Json state_to_json(const ProductSumState& state) {
    Json terms = Json::array();
    for (const ProductTerm& term : state.terms) {
        terms.push_back(Json{{"c", complex_to_json(term.c)},
                             {"left", vector_to_json(term.left)},
                             {"right", vector_to_json(term.right)}});
    }
    return Json{{"kind", "product_sum"}, {"d", state.d}, {"n", state.n}, {"terms", terms}};
}

Json state_to_json(const MixedPureState& state) {
    Json slices = Json::array();
    for (const Matrix& slice : state.slices) {
        slices.push_back(matrix_to_json(slice));
    }
    return Json{{"kind", "mixed_pure"}, {"d", state.d}, {"n", state.n}, {"slices", slices}};
}

Json state_to_json(const StateVariant& state) {
    return std::visit([](const auto& s) { return state_to_json(s); }, state);
}

StateVariant state_from_json(const Json& j) {
    if (!j.is_object()) {
        throw Error(ErrorCode::SchemaError, "state document must be a JSON object");
    }
    const Json& kind_json = member(j, "kind");
    if (!kind_json.is_string()) {
        throw Error(ErrorCode::SchemaError, "\"kind\" must be a string");
    }
    const std::string kind = kind_json.get<std::string>();
    if (kind == "pure") return pure_from_json(j);
    if (kind == "product_sum") return product_sum_from_json(j);
    if (kind == "mixed_pure") return mixed_pure_from_json(j);
    throw Error(ErrorCode::SchemaError, "unknown state kind \"" + kind + "\"");
}

StateVariant parse_state(const std::string& text) {
    const Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        std::string lower = text;
        std::transform(lower.begin(), lower.end(), lower.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (lower.find("nan") != std::string::npos || lower.find("inf") != std::string::npos) {
            throw Error(ErrorCode::NonFiniteEntry, "document contains a non-finite literal");
        }
        throw Error(ErrorCode::SchemaError, "document is not valid JSON");
    }
    return state_from_json(j);
}

StateVariant load_state_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::InvalidInput, "cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state(buffer.str());
}

std::string dump_line(const Json& j) {
    return j.dump() + "\n";
}

Json schmidt_to_json(const SchmidtData& data) {
    return Json{{"rank", data.rank},
                {"tau", real_vector_to_json(data.tau)},
                {"left", matrix_to_json(data.left)},
                {"right", matrix_to_json(data.right)}};
}

Json operator_schmidt_to_json(const OperatorSchmidtData& data) {
    Json factors = Json::array();
    for (const Matrix& factor : data.factors) {
        factors.push_back(matrix_to_json(factor));
    }
    Json vectors = Json::array();
    for (const Vector& vector : data.vectors) {
        vectors.push_back(vector_to_json(vector));
    }
    return Json{{"rank", data.rank},
                {"lambdas", real_vector_to_json(data.lambdas)},
                {"factors", factors},
                {"vectors", vectors},
                {"hermitian_factors", data.hermitian_factors}};
}

}  // namespace schmidtkit
