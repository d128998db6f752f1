/*
 * Copyright (c) 2026 The sigmadet Authors. All Rights Reserved
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SIGMADET_CLI_COMMANDS_HPP
#define SIGMADET_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sigmadet::cli
{

inline constexpr int exit_pass = 0;
inline constexpr int exit_tolerance_failure = 1;
inline constexpr int exit_error = 2;

// Runs one command line (without the program name). Reports and values go to
// `out`; on exit code 2 the only thing written to `out` is a single line
//   error kind=<ErrorKind> arg=<option> value=<json string>
// and a human-readable explanation goes to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace sigmadet::cli

#endif
