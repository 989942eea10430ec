// Copyright 2026 The holoqc Authors
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

#include "holoqc/gates.hpp"
#include "holoqc/geometry.hpp"
#include "holoqc/oracle.hpp"
#include "holoqc/random.hpp"
#include "holoqc/torus.hpp"

namespace {

using namespace holoqc;

void BM_CircuitHolomorphic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(0xC0FFEE);
  const auto circuit = random_circuit(n, 30, rng);
  const auto psi = random_state(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(run_circuit_holo(circuit, psi));
  state.SetItemsProcessed(state.iterations() * 30);
}
BENCHMARK(BM_CircuitHolomorphic)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_CircuitOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(0xC0FFEE);
  const auto circuit = random_circuit(n, 30, rng);
  const auto psi = StateVector::from_holo(random_state(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(run_circuit_matrix(circuit, psi));
  state.SetItemsProcessed(state.iterations() * 30);
}
BENCHMARK(BM_CircuitOracle)->Arg(2)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

void BM_GateForms(benchmark::State& state) {
  const auto form = state.range(0) == 0 ? GateForm::kPreferred : GateForm::kDifferential;
  Rng rng(7);
  const auto poly = to_poly(random_state(6, rng));
  const auto op = gate_operator({GateKind::H, {2}, {}}, 6, form);
  for (auto _ : state) benchmark::DoNotOptimize(apply_operator(op, poly));
}
BENCHMARK(BM_GateForms)->Arg(0)->Arg(1);

void BM_EntanglementMeasure(benchmark::State& state) {
  Rng rng(11);
  const auto psi = random_state(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(entanglement_measure(psi));
}
BENCHMARK(BM_EntanglementMeasure)->Arg(2)->Arg(4)->Arg(6);

void BM_TorusFlow(benchmark::State& state) {
  const FlowSpec spec{PauliGenerator::X, 0, 10.0, 1e-3};
  for (auto _ : state) benchmark::DoNotOptimize(flow_map(spec, {0.3, -0.2}));
}
BENCHMARK(BM_TorusFlow);

}  // namespace
BENCHMARK_MAIN();
