// Copyright 2026 The qlr Authors
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

#ifndef QLR_TOOLS_COMMANDS_H
#define QLR_TOOLS_COMMANDS_H

#include <ostream>
#include <string>
#include <vector>

namespace qlr::cli {

enum ExitCode : int {
    kOk = 0,
    kNegative = 1,  // not correctable, inconsistent syndrome, undefined minimum
    kInputError = 2,
    kSizeRefused = 3,
    kInternalError = 4,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qlr::cli

#endif
