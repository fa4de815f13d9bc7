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
//
// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits nonzero if anything failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "oracles.hpp"
#include "qcpaul/identities.hpp"
#include "qcpaul/qft.hpp"
#include "qcpaul/rewrite.hpp"
#include "rule_cases.hpp"

using namespace qcpaul;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str());
  if (!pass) ++g_failures;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", x);
  return buf;
}

// 1. Full catalog at 1e-10, >= 50 identities, exhaustive boolean spaces.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = verify_all(1e-10);
  const double elapsed = ms_since(t0);
  bool all = reports.size() >= 50;
  double worst = 0.0;
  std::string first_fail;
  for (const VerificationReport& r : reports) {
    worst = std::max(worst, r.max_deviation);
    if (!r.pass && first_fail.empty()) first_fail = r.id;
    all = all && r.pass;
  }
  std::size_t tele_points = 0, conv_points = 0;
  for (const VerificationReport& r : reports) {
    if (r.id == "tele.main") tele_points = r.points;
    if (r.id == "meas.cnot-to-2meas") conv_points = r.points;
  }
  all = all && tele_points == 44 && conv_points == 8;  // 4 (x,z); 8 (k,j1,j2)
  all = all && elapsed < 30000.0;
  report(1, all,
         "catalog of " + std::to_string(reports.size()) +
             " identities at tol 1e-10, max deviation " + fmt(worst) +
             ", boolean spaces exhaustive, " + fmt(elapsed / 1000.0) + " s" +
             (first_fail.empty() ? "" : ", first failure " + first_fail));
}

// 2. Scalar prefactors are load-bearing and exactly reproduced.
void criterion_2() {
  bool ok = true;
  for (const char* id : {"tele.main", "scat.cnot1", "scat.cnot2", "scat.proj",
                         "meas.cnot-to-2meas"})
    ok = ok && verify(id, 1e-10).pass;

  // Negative control: drop each identity's scalar and the sides must
  // disagree grossly, proving the factor is what balances the equation.
  for (const char* id : {"tele.main", "scat.proj", "meas.cnot-to-2meas"}) {
    ParamPoint pt = sample_point(id);
    auto [lhs, rhs] = instantiate(id, pt);
    auto strip = [](Circuit& c) {
      for (auto it = c.elements.begin(); it != c.elements.end();)
        it = std::get_if<ScalarFactor>(&*it) ? c.elements.erase(it) : it + 1;
    };
    strip(lhs);
    strip(rhs);
    ok = ok &&
         max_abs_diff(evaluate(lhs).matrix, evaluate(rhs).matrix) > 1e-3;
  }
  report(2, ok,
         "prefactors 2, sqrt 2 and (-1)^{(k+j1) j2} 2 sqrt 2 reproduced "
         "exactly; removing them breaks the equalities");
}

// 3. QFT builds against the reference matrix, symmetry, local factors.
void criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  double worst_build = 0.0;
  for (std::size_t nb = 1; nb <= 8; ++nb) {
    const ComplexMatrix ref = dft_matrix(nb);
    for (const QftForm f : {QftForm::OneTwoThree, QftForm::ThreeTwoOne}) {
      const double dev = max_abs_diff(evaluate(build_qft(nb, f)).matrix, ref);
      worst_build = std::max(worst_build, dev);
      ok = ok && dev <= 1e-9;
    }
    ok = ok && max_abs_diff(ref, ref.transpose()) <= 1e-10;
  }
  double worst_elem = 0.0;
  const ComplexMatrix ref4 = dft_matrix(4);
  for (std::size_t x = 0; x < 16; ++x)
    for (std::size_t y = 0; y < 16; ++y) {
      std::vector<int> xb(4), yb(4);
      for (int k = 0; k < 4; ++k) {
        xb[k] = int((x >> k) & 1u);
        yb[k] = int((y >> k) & 1u);
      }
      worst_elem = std::max(
          worst_elem, std::abs(qft_matrix_element(xb, yb) - ref4(y, x)));
    }
  ok = ok && worst_elem <= 1e-12;
  const double elapsed = ms_since(t0);
  ok = ok && elapsed < 10000.0;
  report(3, ok,
         "both forms match the reference for 1..8 wires (worst " +
             fmt(worst_build) + " <= 1e-9), matrix symmetric, 256 local-" +
             "factor products within " + fmt(worst_elem) + ", " +
             fmt(elapsed / 1000.0) + " s");
}

// 4. GHZ stabilizer expectations.
void criterion_4() {
  auto ghz_expect = [](const char* ops) {
    Circuit c({"a", "b", "c"});
    c.add(make_ket_bit("a", 0)).add(make_ket_bit("b", 0)).add(make_ket_bit("c", 0));
    c.add(make_gate("H", {"c"})).add(make_cnot("c", "b")).add(make_cnot("c", "a"));
    const WireList ws = {"a", "b", "c"};
    for (std::size_t block = 0; ops[block * 3] != '\0'; ++block)
      for (std::size_t i = 0; i < 3; ++i)
        c.add(make_gate(std::string(1, ops[block * 3 + i]), {ws[i]}));
    // Contract with <GHZ|: the adjoint preparation.
    c.add(make_cnot("c", "a")).add(make_cnot("c", "b")).add(make_gate("H", {"c"}));
    c.add(make_bra_bit("a", 0)).add(make_bra_bit("b", 0)).add(make_bra_bit("c", 0));
    return evaluate(c).matrix(0, 0);
  };
  const Complex xyy = ghz_expect("XYY");
  const Complex xxx = ghz_expect("XXX");
  const Complex triple = ghz_expect("YYXYXYXYY");
  const bool ok = std::abs(xyy - Complex(-1, 0)) <= 1e-12 &&
                  std::abs(xxx - Complex(1, 0)) <= 1e-12 &&
                  std::abs(triple - Complex(-1, 0)) <= 1e-12;
  report(4, ok,
         "<GHZ|s_XYY|GHZ> = " + std::to_string(xyy.real()) +
             ", <GHZ|s_XXX|GHZ> = " + std::to_string(xxx.real()) +
             ", triple product = " + std::to_string(triple.real()));
}

// 5. Bell statistics: Gram matrix and marginals.
void criterion_5() {
  auto bell = [](int x, int z) {
    Circuit c({"a", "b"});
    c.add(make_ket_bit("a", z)).add(make_ket_bit("b", x));
    c.add(make_gate("H", {"a"})).add(make_cnot("a", "b"));
    return evaluate(c).matrix;  // 4x1
  };
  double worst_gram = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Complex ip =
          (bell(i & 1, i >> 1).dagger() * bell(j & 1, j >> 1))(0, 0);
      worst_gram =
          std::max(worst_gram, std::abs(ip - Complex(i == j ? 1.0 : 0.0, 0)));
    }

  double worst_marginal = 0.0;
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z) {
      const ComplexMatrix v = bell(x, z);
      for (int o = 0; o < 2; ++o) {
        double pa = 0.0, pb = 0.0;
        for (int hidden = 0; hidden < 2; ++hidden) {
          pa += std::norm(v((o << 1) | hidden, 0));
          pb += std::norm(v((hidden << 1) | o, 0));
        }
        worst_marginal = std::max(worst_marginal, std::abs(pa - 0.5));
        worst_marginal = std::max(worst_marginal, std::abs(pb - 0.5));
      }
    }
  const bool ok = worst_gram <= 1e-12 && worst_marginal <= 1e-12;
  report(5, ok,
         "Gram deviation " + fmt(worst_gram) + ", marginal deviation " +
             fmt(worst_marginal) + " across all 16 cases");
}

// 6. Rewrite soundness: 500 circuits per registered rule + the Toffoli
// lowering chain.
void criterion_6() {
  bool ok = true;
  double worst = 0.0;
  std::string worst_rule;
  for (const RewriteRule& rule : list_rules()) {
    const double dev = qcpaul::testing::soundness_sweep(rule.id, 500, 0xC0FFEE);
    if (dev > worst) {
      worst = dev;
      worst_rule = rule.id;
    }
    ok = ok && dev <= 1e-10;
  }

  Circuit toffoli({"a", "b", "t"});
  toffoli.add(
      make_gate("X", {"t"}, {ControlSpec::n("a"), ControlSpec::n("b")}));
  Circuit lowered =
      reduce_control(toffoli, find_sites(toffoli, "reduce-control")[0]);
  for (;;) {
    bool did = false;
    const auto sites = find_sites(lowered, "decompose-ctrl-u");
    for (const Site& s : sites) {
      const auto* g =
          std::get_if<GateElement>(&lowered.elements[s.start]);
      if (g && max_abs_diff(g->matrix, pauli(Axis::X)) > 1e-12) {
        lowered = decompose_controlled_u(lowered, s);
        did = true;
        break;
      }
    }
    if (!did) break;
  }
  ComplexMatrix toff = ComplexMatrix::identity(8);
  toff(6, 6) = toff(7, 7) = 0;
  toff(6, 7) = toff(7, 6) = 1;
  const double toff_dev = max_abs_diff(evaluate(lowered).matrix, toff);
  ok = ok && toff_dev <= 1e-10;
  report(6, ok,
         std::to_string(list_rules().size()) +
             " rules x 500 circuits, worst deviation " + fmt(worst) + " (" +
             worst_rule + "); lowered Toffoli within " + fmt(toff_dev));
}

// 7. Dense evaluator vs the independent basis-application oracle.
void criterion_7() {
  Rng rng = seeded_rng(0xC0FFEE, "acceptance/oracle");
  double worst = 0.0;
  bool shape_ok = true;
  for (int i = 0; i < 200; ++i) {
    const Circuit c = qcpaul::testing::random_circuit(rng, 4, 8);
    const EvalResult a = evaluate(c);
    const EvalResult b = qcpaul::testing::oracle_evaluate(c);
    shape_ok = shape_ok && a.in_wires == b.in_wires &&
               a.out_wires == b.out_wires;
    worst = std::max(worst, max_abs_diff(a.matrix, b.matrix));
  }
  report(7, shape_ok && worst <= 1e-12,
         "200 random circuits (<= 4 wires, <= 8 elements), max deviation " +
             fmt(worst));
}

// 8. Byte-identical machine-readable verification output.
void criterion_8() {
  std::ostringstream out1, err1, out2, err2;
  const int c1 = cli::run({"verify", "--all", "--json"}, out1, err1);
  const int c2 = cli::run({"verify", "--all", "--json"}, out2, err2);
  const bool ok = c1 == 0 && c2 == 0 && out1.str() == out2.str() &&
                  !out1.str().empty();
  report(8, ok,
         "two `verify --all --json` runs, " +
             std::to_string(out1.str().size()) + " bytes each, " +
             (out1.str() == out2.str() ? "identical" : "DIFFER"));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (g_failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
