// Copyright 2026 The ltq-edhc Authors
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

namespace ltq::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kRefused = 2,
  kMalformedInput = 3,
};

/// Largest dimension the CLI will construct or render.
inline constexpr int kMaxCliDim = 24;

/// Runs the `ltq` command line. args[0] is the program name. Results go to
/// `out` unless --output names a file; diagnostics go to `err`. `in` is read
/// by `verify` when no --input is given.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace ltq::cli
