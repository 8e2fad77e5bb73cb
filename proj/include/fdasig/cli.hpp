// Copyright 2026 The fdasig Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FDASIG_CLI_HPP
#define FDASIG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fdasig::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,       // signature or evidence does not verify
  kUsage = 2,         // usage, format, parameter, or budget error
  kUndetectable = 4,  // forged signature equals the legitimate one
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdasig::cli

#endif  // FDASIG_CLI_HPP
