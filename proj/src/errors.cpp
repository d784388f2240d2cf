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

#include "schmidtkit/errors.hpp"

namespace schmidtkit {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::DimensionError: return "DimensionError";
        case ErrorCode::NumericalFailure: return "NumericalFailure";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::InvalidTolerance: return "InvalidTolerance";
        case ErrorCode::InvalidProbe: return "InvalidProbe";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "InvalidInput";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

}  // namespace schmidtkit
