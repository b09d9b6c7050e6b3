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

#ifndef BELLKIT_IO_H
#define BELLKIT_IO_H

#include <string>
#include <string_view>

#include "json.hpp"

#include "bellkit/classical.h"
#include "bellkit/inequalities.h"
#include "bellkit/sweep.h"

namespace bellkit::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaTag = "bellkit/1";

/// Fixed-point, 9 decimals; negative zero prints as zero.
std::string format_fixed(double v);

/// Serializes with 2-space indentation, every floating value through
/// format_fixed. Key order is insertion order.
std::string dump_fixed(const Json &j);

// Readers throw Error(ParseError) naming the JSON path of the offending
// value, or the validation error of the constructed object.

Json parse_text(const std::string &text, const std::string &source);
Json read_file(const std::string &path);

ComplexMatrix matrix_from_json(const Json &j, const std::string &path = "$");
Json matrix_to_json(const ComplexMatrix &m);

DensityOperator density_from_json(const Json &j, const std::string &path = "$");
Json density_to_json(const DensityOperator &rho);

SeparableRepresentation representation_from_json(const Json &j, const std::string &path = "$");
Json representation_to_json(const SeparableRepresentation &rep);

/// Accepts "povm" objects and the "spin_observable" shorthand.
DiscretePovm povm_from_json(const Json &j, const std::string &path = "$");
Json povm_to_json(const DiscretePovm &p);

LhvModel model_from_json(const Json &j, const std::string &path = "$");
Json model_to_json(const LhvModel &m);

Json report_to_json(const InequalityReport &r);

enum class SweepMode { Grid, Soundness };

struct SweepRequest {
    SweepMode mode = SweepMode::Grid;
    SweepConfig config;
};

/// `state` may be an inline object or one of "rho_zero", "rho_zero_symmetric",
/// "maximally_mixed"; `state_file` is resolved relative to `base_dir`.
SweepRequest sweep_request_from_json(const Json &j, const std::string &base_dir = ".");
Json sweep_result_to_json(const SweepRequest &req, const SweepResult &res);

/// CSV with header settings..., lhs, rhs, slack, violated; LF line endings.
std::string sweep_rows_to_csv(const SweepResult &res);

/// One-row CSV for a report.
std::string report_to_csv(const InequalityReport &r);

/// JSON schema documents for every file format, keyed by kind.
Json schemas();

}  // namespace bellkit::io

#endif
