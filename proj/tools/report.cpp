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

#include "report.hpp"

#include <cstdio>
#include <cstdlib>

namespace qcpaul::cli {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string json_number(double x) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

namespace {
std::string sci3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", x);
  return buf;
}
}  // namespace

std::string report_json(const std::vector<VerificationReport>& reports,
                        double tolerance, std::uint64_t seed) {
  std::string out = "{\"tolerance\": " + json_number(tolerance) +
                    ", \"seed\": " + std::to_string(seed) + ", \"results\": [";
  bool all_pass = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const VerificationReport& r = reports[i];
    all_pass = all_pass && r.pass;
    if (i) out += ", ";
    out += "{\"id\": \"" + json_escape(r.id) + "\", \"citation\": \"" +
           json_escape(r.citation) +
           "\", \"points\": " + std::to_string(r.points) +
           ", \"max_deviation\": " + sci3(r.max_deviation) +
           ", \"pass\": " + (r.pass ? "true" : "false") + ", \"ms\": 0}";
  }
  out += "], \"all_pass\": ";
  out += all_pass ? "true" : "false";
  out += "}\n";
  return out;
}

}  // namespace qcpaul::cli
