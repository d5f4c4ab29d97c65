// Copyright 2026 The CICI Authors.
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

#ifndef CICI_TOOLS_COMMANDS_H_
#define CICI_TOOLS_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

#include "cici/verification.h"

namespace cici::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kParseFailure = 2,
  kDomainFailure = 3,
  kUsageFailure = 4,
};

// Runs the command line given as args (args[0] is the program name).
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// verify with an explicit config; exposed so tests can inject faults.
int RunVerify(const verify::Config& config, bool json, std::ostream& out);

}  // namespace cici::cli

#endif  // CICI_TOOLS_COMMANDS_H_
