// Copyright 2026 The fockop Authors
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

#ifndef FOCKOP_CLI_CLI_HPP
#define FOCKOP_CLI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fockop::cli {

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 on success, 2 on input errors and 1 on
/// internal invariant violations.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fockop::cli

#endif  // FOCKOP_CLI_CLI_HPP
