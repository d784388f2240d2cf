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

#include <stdexcept>
#include <string>

namespace schmidtkit {

enum class ErrorCode {
    ZeroVector,
    NotNormalized,
    NonFiniteEntry,
    SchemaError,
    DimensionError,
    NumericalFailure,
    NoConvergence,
    InvalidTolerance,
    InvalidProbe,
    InvalidInput,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception. `code()` is stable and machine-readable; the
/// what() string carries a human-readable detail message.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& detail);
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace schmidtkit
