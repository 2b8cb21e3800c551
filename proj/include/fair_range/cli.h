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

#ifndef FAIR_RANGE_CLI_H_
#define FAIR_RANGE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace fair_range {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;

// Runs the command line with `args` excluding the program name:
//   solve PATH [--p P] [--k K] [--ranges a:b,...] [--oracle] [--out FILE]
//              [--tol-override T] [--seed S] [--lenient]
//   generate figure1|random [--k K] [--n N] [--m m] [--M M] [--p P]
//              [--groups L] [--ranges a:b,...] [--seed S]
//              [--allow-nonmetric] [--out FILE]
//   bench [--n N,...] [--k K,...] [--groups L,...] [--p P,...] [--seeds S]
//              [--seed FIRST] [--out FILE]
// Reports go to --out or `out`; diagnostics go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace fair_range

#endif  // FAIR_RANGE_CLI_H_
