// Copyright 2026 The robsel authors
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

#ifndef ROBSEL_CLI_HPP
#define ROBSEL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace robsel {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRefused = 2;  ///< infeasible input / cap exceeded

/// Command-line dispatch. `args` excludes the program name; instance
/// arguments read from `in` when given as "-". Results print as JSON on
/// `out`, diagnostics on `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace robsel

#endif  // ROBSEL_CLI_HPP
