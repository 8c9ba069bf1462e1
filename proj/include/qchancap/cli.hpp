// Copyright 2026 The qchancap Authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace qchancap::cli {

inline constexpr const char* kSchema = "qchancap/1";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kValidation = 3,
  kSizeCap = 4,
};

/// Runs one command line (without the program name). JSON results go to
/// `out`, progress and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qchancap::cli
