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

#include <benchmark/benchmark.h>

#include "qcpaul/identities.hpp"
#include "qcpaul/qft.hpp"
#include "qcpaul/rewrite.hpp"

using namespace qcpaul;

namespace {

void BM_Kron(benchmark::State& state) {
  const ComplexMatrix h = hadamard(4);
  for (auto _ : state) benchmark::DoNotOptimize(kron(h, h));
}
BENCHMARK(BM_Kron);

void BM_Embed(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  WireList all;
  for (std::size_t i = 0; i < n; ++i) all.push_back("w" + std::to_string(i));
  for (auto _ : state)
    benchmark::DoNotOptimize(embed(cnot_matrix(), {all[0], all[n - 1]}, all));
}
BENCHMARK(BM_Embed)->Arg(4)->Arg(6)->Arg(8);

void BM_EvaluateQft(benchmark::State& state) {
  const Circuit c = build_qft(static_cast<std::size_t>(state.range(0)),
                              QftForm::OneTwoThree);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(c));
}
BENCHMARK(BM_EvaluateQft)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_VerifyIdentity(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify("gen.sqrt-reduction", 1e-10));
}
BENCHMARK(BM_VerifyIdentity);

void BM_FindSites(benchmark::State& state) {
  Circuit c({"a", "b", "c"});
  for (int i = 0; i < 32; ++i) {
    c.add(make_cnot("c", "b"));
    c.add(make_cnot("b", "a"));
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(find_sites(c, "wake-chain"));
}
BENCHMARK(BM_FindSites);

}  // namespace

BENCHMARK_MAIN();
