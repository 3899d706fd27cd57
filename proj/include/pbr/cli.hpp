// Copyright 2026 The pbr-workbench Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pbr::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Process exit codes; stable across versions.
enum ExitCode : int {
  kOk = 0,
  kCertificateRejected = 1,
  kInvalidInput = 2,
  kUnexpectedVerdict = 3,
  kArgumentInapplicable = 4,
};

/// Runs `pbr <args...>` (args excludes the program name) against the given
/// streams and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

}  // namespace pbr::cli
