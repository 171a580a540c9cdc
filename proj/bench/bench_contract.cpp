// Copyright 2026 The zxpivot Authors
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

#include <random>

#include "zxpivot/normalform.hpp"
#include "zxpivot/semantics.hpp"
#include "zxpivot/tensor.hpp"

namespace zxp {
namespace {

// Contracts a rank-(k+2) tensor with a rank-(k+2) tensor over two shared
// labels, leaving 2k open indices.
std::pair<tn::Tensor, tn::Tensor> pair_of_rank(int k) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  tn::Tensor a, b;
  for (int i = 0; i < k; ++i) a.labels.push_back(i);
  for (int i = 0; i < k; ++i) b.labels.push_back(100 + i);
  for (int l : {1000, 1001}) {
    a.labels.push_back(l);
    b.labels.push_back(l);
  }
  for (std::size_t i = 0; i < (std::size_t{1} << a.rank()); ++i)
    a.data.emplace_back(g(rng), g(rng));
  for (std::size_t i = 0; i < (std::size_t{1} << b.rank()); ++i)
    b.data.emplace_back(g(rng), g(rng));
  return {a, b};
}

void BM_ContractSerial(benchmark::State& state) {
  auto [a, b] = pair_of_rank(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(tn::contract_serial(a, b, {1000, 1001}));
  state.SetComplexityN(state.range(0));
}

void BM_ContractParallel(benchmark::State& state) {
  auto [a, b] = pair_of_rank(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(tn::contract_parallel(a, b, {1000, 1001}));
  state.SetComplexityN(state.range(0));
}

void BM_Interpret(benchmark::State& state, tn::Exec exec) {
  CircuitOptions o;
  o.qubits = static_cast<int>(state.range(0));
  o.depth = 4 * o.qubits;
  o.projected = 1;
  Diagram d = random_circuit_state(o, 3);
  for (auto _ : state) benchmark::DoNotOptimize(interpret(d, exec));
}

BENCHMARK(BM_ContractSerial)->DenseRange(4, 10, 2);
BENCHMARK(BM_ContractParallel)->DenseRange(4, 10, 2);
BENCHMARK_CAPTURE(BM_Interpret, serial, tn::Exec::Serial)->DenseRange(4, 12, 4);
BENCHMARK_CAPTURE(BM_Interpret, parallel, tn::Exec::Parallel)
    ->DenseRange(4, 12, 4);

}  // namespace
}  // namespace zxp

BENCHMARK_MAIN();
