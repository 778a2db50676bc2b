// Copyright 2026 The Stairnet Authors
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

#ifndef STAIRNET_TOOLS_CLI_H_
#define STAIRNET_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace stairnet {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;   // bad flags or violated preconditions
inline constexpr int kExitGuard = 3;   // a resource guard tripped

// Runs one command. `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`; artifacts are written to the paths given by flags.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace stairnet

#endif  // STAIRNET_TOOLS_CLI_H_
