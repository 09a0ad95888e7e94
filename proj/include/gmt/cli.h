// Copyright 2026 The gmtkit Authors.
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

#ifndef GMT_CLI_H_
#define GMT_CLI_H_

#include <ostream>

namespace gmt {

// Process exit codes of the gmt command.
enum ExitStatus : int {
  kExitOk = 0,
  kExitFindings = 1,  // validation or conversion produced errors
  kExitFailure = 2,   // unreadable input, malformed input, bad usage
};

// Runs the gmt command line. Data goes to `out`, diagnostics to `err`.
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

}  // namespace gmt

#endif  // GMT_CLI_H_
