// Copyright 2026 The bilip Authors
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


#ifndef BILIP_CLI_HPP_
#define BILIP_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "bilip/error.hpp"

namespace bilip::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCertificate = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitIo = 4;

int ExitCodeFor(ErrorCode code);

// Runs one command line (args[0] is the subcommand). Reports go to the
// -o file when given, otherwise to `out`; errors are written to `err` as a
// JSON object with a machine-readable code.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bilip::cli

#endif  // BILIP_CLI_HPP_
