// Copyright 2026 The bibennett Authors.
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

// Command-line front end. Exit codes: 0 success, 1 a certificate failed,
// 2 bad input.

#ifndef BIBENNETT_CLI_HPP_
#define BIBENNETT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace bibennett {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

// Environment variable holding the default tolerance.
inline constexpr const char* kTolEnv = "BIBENNETT_TOL";

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace bibennett

#endif  // BIBENNETT_CLI_HPP_
