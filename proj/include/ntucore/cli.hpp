// Copyright 2026 The Authors.
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

#include <ostream>
#include <string>
#include <vector>

namespace ntucore::cli {

/// Exit codes of run().
enum ExitCode : int {
  kInCore = 0,      // in the core / core non-empty
  kBlocked = 1,     // blocked / core empty
  kUsage = 2,       // bad arguments or malformed input
  kResource = 3,    // method not applicable or a cap was exceeded
  kInternal = 4,    // an internal consistency check failed
};

/// Runs one command line (without the program name). Results go to out; a
/// single "error: <category>: <reason>" line goes to err on failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ntucore::cli
