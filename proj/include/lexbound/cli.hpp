// Copyright 2026 The lexbound Authors
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

#ifndef LEXBOUND_CLI_HPP
#define LEXBOUND_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lexbound {

/// Exit codes of the command-line tool.
constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitResource = 2;

/// Runs the tool on `args` (args[0] is the program name). The report goes to
/// `out` only when the command succeeds; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lexbound

#endif  // LEXBOUND_CLI_HPP
