// Copyright 2026 The DGSP Authors.
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

#ifndef DGSP_CLI_H_
#define DGSP_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace dgsp {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitDataMismatch = 3,
  kExitNumerical = 4,
  kExitAssumption = 5,
};

// Entry point of the `dgsp` tool: generate, transform, denoise, perturb and
// spread subcommands. Every run writes manifest.json into --out echoing the
// resolved configuration.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace dgsp

#endif  // DGSP_CLI_H_
