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
#include <string>
#include <vector>

#include "qcpaul/identities.hpp"

namespace qcpaul::cli {

/// Machine-readable verification report. Key order is fixed:
///   {"tolerance", "seed", "results": [{"id", "citation", "points",
///    "max_deviation", "pass", "ms"}], "all_pass"}
/// Deviations carry three significant digits in scientific notation. The
/// emitted bytes depend only on the reports' content, never on wall-clock
/// timing, so identical argv and seed give identical output; the "ms"
/// field is pinned to 0 for that reason (text mode shows measured times).
std::string report_json(const std::vector<VerificationReport>& reports,
                        double tolerance, std::uint64_t seed);

/// JSON string escaping for the report emitter.
std::string json_escape(const std::string& s);

/// Shortest round-trip decimal form of a double (printf %.17g trimmed).
std::string json_number(double x);

}  // namespace qcpaul::cli
