// Copyright 2026 The qfreeze Authors
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

#pragma once

#include <iosfwd>

namespace qfreeze {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNumerical = 3,
  kExitIo = 4,
};

// Entry point of the qfreeze command line tool:
//
//   qfreeze [--threads N] [--seed N] run <config.json> [--out PATH]
//   qfreeze [--threads N] [--seed N] builtin <fig1|fig2|fig3> [--out PATH] [--format csv|jsonl]
//   qfreeze validate <config.json>
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qfreeze
