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

#include <string>
#include <variant>

#include <json.hpp>

#include "schmidtkit/state_model.hpp"

namespace schmidtkit {

using Json = nlohmann::json;
using StateVariant = std::variant<PureState, ProductSumState, MixedPureState>;

// Wire format. Complex numbers are two-element [re, im] arrays; matrices are
// row-major nested arrays. States carry a "kind" discriminator:
//   pure:        {"kind": "pure", "d", "n", "coeffs": d x n matrix}
//   product_sum: {"kind": "product_sum", "d", "n",
//                 "terms": [{"c": [re, im], "left": [...], "right": [...]}]}
//   mixed_pure:  {"kind": "mixed_pure", "d", "n", "slices": n d x d matrices}
// Serialization round-trips every finite double exactly; -0.0 is normalized
// to 0.0 so equal states serialize to identical bytes.

Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j, const std::string& where);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& where);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, const std::string& where);

Json real_vector_to_json(const RealVector& v);

Json state_to_json(const PureState& state);
Json state_to_json(const ProductSumState& state);
Json state_to_json(const MixedPureState& state);
Json state_to_json(const StateVariant& state);

/// Parses any of the three state kinds from its JSON form. Malformed
/// documents raise SchemaError; embedded NaN/Inf tokens raise NonFiniteEntry;
/// dimension and normalization problems raise the usual construction errors.
StateVariant state_from_json(const Json& j);

StateVariant parse_state(const std::string& text);
StateVariant load_state_file(const std::string& path);

/// Compact single-line serialization with a trailing newline, the format all
/// command line output uses.
std::string dump_line(const Json& j);

Json schmidt_to_json(const SchmidtData& data);
Json operator_schmidt_to_json(const OperatorSchmidtData& data);

}  // namespace schmidtkit
