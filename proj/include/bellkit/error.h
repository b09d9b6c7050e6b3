// Copyright 2026 The Bellkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELLKIT_ERROR_H
#define BELLKIT_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace bellkit {

enum class ErrorCode {
    DimMismatch,
    NotHermitian,
    TraceNotOne,
    NotPsd,
    NotBipartiteSquare,
    InvalidRepresentation,
    SymmetrizedRepUnsupported,
    IncompatibleReps,
    DifferentStates,
    InvalidOutcomes,
    NotPsdEffect,
    Incomplete,
    UnknownOutcome,
    ImaginaryTrace,
    OutOfRange,
    NonpositiveBound,
    ZeroGammas,
    BoundMismatch,
    BoundNotUnit,
    InvalidGammaConstraint,
    UnknownProperty,
    InvalidDistribution,
    InvalidModel,
    WrongDimension,
    InvalidConfig,
    ParseError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library. The message always starts with the
/// error code name so CLI output can be matched against it.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &detail);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace bellkit

#endif
