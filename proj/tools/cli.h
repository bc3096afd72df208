// Copyright 2026 The matchreg Authors.
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

#ifndef MATCHREG_TOOLS_CLI_H_
#define MATCHREG_TOOLS_CLI_H_

#include <ostream>

namespace matchreg::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;  // check; also violation rows
inline constexpr int kExitError = 2;
inline constexpr int kExitOracleDisagreement = 3;
inline constexpr int kExitBudget = 4;
inline constexpr int kExitNonTermination = 5;

// Entry point of the matchreg tool. Verbs: gen, check, solve, simulate, poa,
// ratio-audit, reduce-vc. Results go to out, diagnostics to err.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace matchreg::cli

#endif  // MATCHREG_TOOLS_CLI_H_
