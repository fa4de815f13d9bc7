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
#include <set>

#include "qcpaul/identities.hpp"

using namespace qcpaul;

TEST_CASE("catalog size and id uniqueness") {
  const auto& cat = list_identities();
  CHECK(cat.size() >= 50);
  std::set<std::string> ids;
  for (const Identity& ident : cat) {
    CHECK(ids.insert(ident.id).second);
    CHECK_FALSE(ident.citation.empty());
  }
  CHECK_THROWS_AS(find_identity("nope.nothing"), Error);
}

TEST_CASE("every entry builds well-formed circuits at a sample point") {
  for (const Identity& ident : list_identities()) {
    const ParamPoint pt = sample_point(ident.id);
    if (ident.is_pair()) {
      const auto [lhs, rhs] = instantiate(ident.id, pt);
      CHECK_NOTHROW(validate(lhs));
      CHECK_NOTHROW(validate(rhs));
      CHECK(lhs.wires == rhs.wires);
    } else {
      CHECK(ident.custom(pt) < 1.0);
    }
  }
}

TEST_CASE("three CNOTs are an exchanger, to rounding") {
  const VerificationReport r = verify("exch.3cnot");
  CHECK(r.pass);
  CHECK(r.max_deviation <= 1e-15);
}

TEST_CASE("the CNOT-to-two-measurements conversion covers all 8 outcomes") {
  const VerificationReport r = verify("meas.cnot-to-2meas");
  CHECK(r.pass);
  CHECK(r.points == 8);
}

TEST_CASE("Bell marginals are uniform at every outcome") {
  const VerificationReport r = verify("bell.marginals");
  CHECK(r.pass);
  CHECK(r.points == 16);
}

TEST_CASE("teleportation instantiates with the factor of two") {
  ParamPoint pt = sample_point("tele.main");
  pt.bits["x"] = 1;
  pt.bits["z"] = 1;
  const auto [lhs, rhs] = instantiate("tele.main", pt);
  bool has_two = false;
  for (const CircuitElement& e : lhs.elements)
    if (const auto* s = std::get_if<ScalarFactor>(&e))
      has_two = has_two || s->value == Complex(2.0, 0.0);
  CHECK(has_two);
  // The right side is the bare state on the last wire (plus parked wires).
  const EvalResult rr = evaluate(rhs);
  CHECK(rr.out_wires == WireList{"c"});
  CHECK(rr.in_wires.empty());
  CHECK(max_abs_diff(evaluate(lhs).matrix, rr.matrix) <= 1e-12);
}

TEST_CASE("decomposition identities draw on the diagonalizer") {
  ParamPoint pt = sample_point("gen.ctrl-u-decomp");
  pt.unitaries["U"] = rotation({0.3, 0.7, -0.2});
  const auto [lhs, rhs] = instantiate("gen.ctrl-u-decomp", pt);
  CHECK(max_abs_diff(evaluate(lhs).matrix, evaluate(rhs).matrix) <= 1e-12);
}

TEST_CASE("instantiate refuses direct numeric checks") {
  CHECK_THROWS_AS(instantiate("bell.marginals", sample_point("bell.marginals")),
                  Error);
}

TEST_CASE("zero tolerance surfaces float rounding") {
  const auto reports = verify_all(0.0);
  bool any_fail = false;
  for (const VerificationReport& r : reports) {
    any_fail = any_fail || !r.pass;
    CHECK(r.max_deviation <= 1e-12);  // rounding scale only
  }
  CHECK(any_fail);
}

TEST_CASE("full catalog passes at the default tolerance") {
  for (const VerificationReport& r : verify_all(1e-10)) {
    INFO(r.id);
    CHECK(r.pass);
  }
}

TEST_CASE("verification is deterministic for a fixed seed") {
  const auto a = verify_all(1e-10, 12345);
  const auto b = verify_all(1e-10, 12345);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].points == b[i].points);
    CHECK(a[i].max_deviation == b[i].max_deviation);  // bitwise
    CHECK(a[i].pass == b[i].pass);
  }
  // A different seed still passes but may change the deviations.
  for (const VerificationReport& r : verify_all(1e-10, 999)) {
    INFO(r.id);
    CHECK(r.pass);
  }
}

TEST_CASE("Bell completeness: the four projectors sum to the identity") {
  ComplexMatrix sum(4, 4);
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z) {
      ParamPoint pt = sample_point("bell.sub-circuit");
      pt.bits["x"] = x;
      pt.bits["z"] = z;
      const auto [lhs, rhs] = instantiate("bell.sub-circuit", pt);
      const ComplexMatrix v = evaluate(lhs).matrix;  // 4x1 state
      sum = sum + v * v.dagger();
    }
  CHECK(max_abs_diff(sum, ComplexMatrix::identity(4)) <= 1e-12);
}

TEST_CASE("boolean spaces enumerate exhaustively") {
  CHECK(verify("bell.orthonormal").points == 16);  // 4 bits
  CHECK(verify("dense.coding").points == 4);       // 2 bits
  // tele.main: 2 bits x (10 draws + |0>) states.
  CHECK(verify("tele.main").points == 4 * 11);
}
