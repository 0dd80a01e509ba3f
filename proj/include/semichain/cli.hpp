// Copyright 2026 The semichain Authors
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

#ifndef SEMICHAIN_CLI_HPP
#define SEMICHAIN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace semichain {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,      // success, or the checked property holds
  kExitFalse = 1,   // the checked property fails, or a library error
  kExitUsage = 2,   // bad arguments or unreadable input
};

/// Runs the command line `args` (args[0] is the program name). Output is
/// deterministic for a given input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semichain

#endif  // SEMICHAIN_CLI_HPP
