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

#include "bellkit/error.h"

namespace bellkit {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimMismatch:
            return "DimMismatch";
        case ErrorCode::NotHermitian:
            return "NotHermitian";
        case ErrorCode::TraceNotOne:
            return "TraceNotOne";
        case ErrorCode::NotPsd:
            return "NotPsd";
        case ErrorCode::NotBipartiteSquare:
            return "NotBipartiteSquare";
        case ErrorCode::InvalidRepresentation:
            return "InvalidRepresentation";
        case ErrorCode::SymmetrizedRepUnsupported:
            return "SymmetrizedRepUnsupported";
        case ErrorCode::IncompatibleReps:
            return "IncompatibleReps";
        case ErrorCode::DifferentStates:
            return "DifferentStates";
        case ErrorCode::InvalidOutcomes:
            return "InvalidOutcomes";
        case ErrorCode::NotPsdEffect:
            return "NotPsdEffect";
        case ErrorCode::Incomplete:
            return "Incomplete";
        case ErrorCode::UnknownOutcome:
            return "UnknownOutcome";
        case ErrorCode::ImaginaryTrace:
            return "ImaginaryTrace";
        case ErrorCode::OutOfRange:
            return "OutOfRange";
        case ErrorCode::NonpositiveBound:
            return "NonpositiveBound";
        case ErrorCode::ZeroGammas:
            return "ZeroGammas";
        case ErrorCode::BoundMismatch:
            return "BoundMismatch";
        case ErrorCode::BoundNotUnit:
            return "BoundNotUnit";
        case ErrorCode::InvalidGammaConstraint:
            return "InvalidGammaConstraint";
        case ErrorCode::UnknownProperty:
            return "UnknownProperty";
        case ErrorCode::InvalidDistribution:
            return "InvalidDistribution";
        case ErrorCode::InvalidModel:
            return "InvalidModel";
        case ErrorCode::WrongDimension:
            return "WrongDimension";
        case ErrorCode::InvalidConfig:
            return "InvalidConfig";
        case ErrorCode::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {
}

}  // namespace bellkit
