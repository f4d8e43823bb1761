// Copyright 2026 The rsuplan Authors
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

#ifndef RSUPLAN_CLI_HPP_
#define RSUPLAN_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace rsu {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitUsage = 2,
  kExitParse = 3,
  kExitResource = 4,
  kExitInternal = 5,
};

/// Runs one command line (without the program name). Reports go to `out`, or
/// to the --out file with a one-line summary on `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsu

#endif  // RSUPLAN_CLI_HPP_
