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

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "qcpaul/parse.hpp"
#include "qcpaul/qft.hpp"
#include "report.hpp"

using namespace qcpaul;
using json = nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = std::string("/tmp/qcpaul_test_") + name;
  std::ofstream f(path);
  f << body;
  return path;
}

}  // namespace

TEST_CASE("verify --id exits 0 on a passing identity") {
  const RunResult r = run_cli({"verify", "--id", "exch.3cnot"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("verify --id on an unknown identity is a usage error") {
  const RunResult r = run_cli({"verify", "--id", "nope"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("verify needs exactly one of --all or --id") {
  CHECK(run_cli({"verify"}).code == 2);
  CHECK(run_cli({"verify", "--all", "--id", "exch.3cnot"}).code == 2);
}

TEST_CASE("unknown subcommands exit 2 with usage text") {
  const RunResult r = run_cli({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
}

TEST_CASE("report_json schema and key order") {
  VerificationReport rep;
  rep.id = "x.y";
  rep.citation = "says \"things\"";
  rep.points = 7;
  rep.max_deviation = 1.234e-13;
  rep.pass = true;
  rep.elapsed_ms = 5;

  const std::string s = cli::report_json({rep}, 1e-10, 0xC0FFEE);
  CHECK(s.rfind("{\"tolerance\": 1e-10, \"seed\": 12648430, \"results\": "
                "[{\"id\": \"x.y\", \"citation\": ",
                0) == 0);
  CHECK(s.find("\"max_deviation\": 1.23e-13") != std::string::npos);
  CHECK(s.find("\"ms\": 0") != std::string::npos);

  const json parsed = json::parse(s);
  CHECK(parsed["tolerance"] == doctest::Approx(1e-10));
  CHECK(parsed["seed"] == 0xC0FFEE);
  CHECK(parsed["results"][0]["id"] == "x.y");
  CHECK(parsed["results"][0]["citation"] == "says \"things\"");
  CHECK(parsed["results"][0]["points"] == 7);
  CHECK(parsed["results"][0]["pass"] == true);
  CHECK(parsed["all_pass"] == true);

  // Empty input still carries the full schema.
  const json empty = json::parse(cli::report_json({}, 1e-10, 1));
  CHECK(empty["results"].empty());
  CHECK(empty["all_pass"] == true);

  // One failing report flips all_pass.
  rep.pass = false;
  const json failing = json::parse(cli::report_json({rep}, 1e-10, 1));
  CHECK(failing["all_pass"] == false);
}

TEST_CASE("verify --all --json is byte-identical across runs") {
  const RunResult a = run_cli({"verify", "--all", "--json"});
  const RunResult b = run_cli({"verify", "--all", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const json parsed = json::parse(a.out);
  CHECK(parsed["all_pass"] == true);
  CHECK(parsed["results"].size() >= 50);
}

TEST_CASE("verify --id agrees with the matching --all entry") {
  const RunResult all = run_cli({"verify", "--all", "--json"});
  const RunResult one = run_cli({"verify", "--id", "tele.main", "--json"});
  const json ja = json::parse(all.out);
  const json jo = json::parse(one.out);
  bool found = false;
  for (const auto& entry : ja["results"])
    if (entry["id"] == "tele.main") {
      found = true;
      CHECK(entry == jo["results"][0]);
    }
  CHECK(found);
}

TEST_CASE("eval emits the Bell state vector") {
  const std::string path = write_temp(
      "bell.qc", "wires: a b\nket a |0>\nket b |0>\nH a\nCNOT a -> b\n");
  const RunResult r = run_cli({"eval", path, "--json"});
  REQUIRE(r.code == 0);
  const json m = json::parse(r.out);
  CHECK(m["rows"] == 4);
  CHECK(m["cols"] == 1);
  CHECK(m["in_wires"].empty());
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(m["matrix"][0][0][0] == doctest::Approx(s));
  CHECK(m["matrix"][1][0][0] == doctest::Approx(0.0));
  CHECK(m["matrix"][2][0][0] == doctest::Approx(0.0));
  CHECK(m["matrix"][3][0][0] == doctest::Approx(s));

  CHECK(run_cli({"eval", "/tmp/qcpaul_no_such_file.qc"}).code == 2);
  const std::string bad = write_temp("bad.qc", "wires: a\nFOO a\n");
  CHECK(run_cli({"eval", bad}).code == 2);
}

TEST_CASE("rewrite prints the transformed circuit and a soundness witness") {
  const std::string path = write_temp(
      "chain.qc", "wires: a b c\nCNOT c -> b\nCNOT b -> a\n");
  const RunResult text = run_cli(
      {"rewrite", path, "--rule", "wake-chain", "--at", "0"});
  REQUIRE(text.code == 0);
  // The output parses back and has the wake appended.
  const std::string dsl = text.out.substr(0, text.out.find('#'));
  const Circuit back = parse(dsl);
  CHECK(back.elements.size() == 3);

  const RunResult js = run_cli(
      {"rewrite", path, "--rule", "wake-chain", "--at", "0", "--json"});
  REQUIRE(js.code == 0);
  const json j = json::parse(js.out);
  CHECK(j["before"]["rows"] == 8);
  CHECK(j["after"]["rows"] == 8);

  // No site at index 1.
  CHECK(run_cli({"rewrite", path, "--rule", "wake-chain", "--at", "1"}).code ==
        2);
}

TEST_CASE("qft emits DSL that reproduces the reference matrix") {
  const RunResult r = run_cli({"qft", "--nb", "4", "--form", "123", "--check"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("wires: q3 q2 q1 q0", 0) == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  // The emitted text is a valid program for the evaluator.
  const std::string dsl = r.out.substr(0, r.out.find('#'));
  const Circuit c = parse(dsl);
  CHECK(max_abs_diff(evaluate(c).matrix, dft_matrix(4)) <= 1e-9);

  const RunResult bad = run_cli({"qft", "--nb", "12"});
  CHECK(bad.code == 2);
}

TEST_CASE("the QCPAUL_TOL environment default and --tol override") {
  setenv("QCPAUL_TOL", "0.5", 1);
  const RunResult loose = run_cli({"verify", "--id", "exch.3cnot", "--json"});
  CHECK(json::parse(loose.out)["tolerance"] == doctest::Approx(0.5));
  const RunResult strict = run_cli(
      {"verify", "--id", "exch.3cnot", "--json", "--tol", "1e-10"});
  CHECK(json::parse(strict.out)["tolerance"] == doctest::Approx(1e-10));
  unsetenv("QCPAUL_TOL");
}

TEST_CASE("seed changes the draws but not the schema") {
  const RunResult a = run_cli(
      {"verify", "--id", "exch.uv-invariance", "--json", "--seed", "1"});
  const RunResult b = run_cli(
      {"verify", "--id", "exch.uv-invariance", "--json", "--seed", "2"});
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(json::parse(a.out)["seed"] == 1);
  CHECK(json::parse(b.out)["seed"] == 2);
}
