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

#ifndef BELLKIT_TOOLS_CLI_H
#define BELLKIT_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace bellkit::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kHolds = 0;
inline constexpr int kInputError = 1;
inline constexpr int kViolated = 2;

/// Runs the command line (args excludes the program name). Normal output goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace bellkit::cli

#endif
