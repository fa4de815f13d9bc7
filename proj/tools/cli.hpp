// Copyright 2025-2026 The qcpaul developers
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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qcpaul::cli {

struct CliConfig {
  double tolerance = 1e-10;  // QCPAUL_TOL overrides, --tol wins
  bool json = false;
  std::uint64_t seed = 0xC0FFEE;
};

/// Entry point behind main(): parses argv (program name excluded),
/// dispatches the subcommand and writes to the given streams.
/// Exit codes: 0 success / all-pass, 1 verification failure,
/// 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qcpaul::cli
