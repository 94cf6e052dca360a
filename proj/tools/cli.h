// Copyright 2026 The wsmp Authors
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

#ifndef WSMP_TOOLS_CLI_H_
#define WSMP_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace wsmp {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitWrongSolver = 3,
  kExitLimit = 4,
  kExitInfeasible = 5,
};

// Runs one invocation; args[0] is the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsmp

#endif  // WSMP_TOOLS_CLI_H_
