// Copyright 2026 The qscd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference vs OpenMP kernel for the advantage estimator and the
// attack pipeline.

#include <benchmark/benchmark.h>

#include "qscd/parallel.h"
#include "qscd/reductions.h"

namespace {

using namespace qscd;

const Permutation& key() {
    static const Permutation pi = Permutation::from_cycles(10, {{1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}});
    return pi;
}

TupleSource plus_source() {
    return [](Rng& rng) { return plus_tuple(key(), 1, rng); };
}
TupleSource minus_source() {
    return [](Rng& rng) { return minus_tuple(key(), 1, rng); };
}

void BM_AdvantageSerial(benchmark::State& state) {
    const auto dist = omniscient_distinguisher(key());
    const auto trials = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_advantage_serial(dist, plus_source(), minus_source(), trials, 1));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(2 * trials));
}

void BM_AdvantageParallel(benchmark::State& state) {
    const auto dist = omniscient_distinguisher(key());
    const auto trials = static_cast<std::size_t>(state.range(0));
    kernels::set_jobs(static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_advantage(dist, plus_source(), minus_source(), trials, 1));
    }
    kernels::set_jobs(0);
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(2 * trials));
}

void BM_AttackPlanted(benchmark::State& state) {
    Graph tree(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}});
    const auto instance = PromiseInstance::verified(disjoint_union(tree, tree));
    const auto dist = omniscient_distinguisher(*instance.automorphism);
    AttackParams params = AttackParams::from_polynomial(14, 1, 1);
    kernels::set_jobs(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ga_attack(instance, dist, params, 1));
    kernels::set_jobs(0);
}

}  // namespace

BENCHMARK(BM_AdvantageSerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdvantageParallel)
    ->ArgsProduct({{1000, 4000}, {1, 2, 4}})
    ->ArgNames({"trials", "jobs"})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AttackPlanted)->Arg(1)->Arg(4)->ArgName("jobs")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
