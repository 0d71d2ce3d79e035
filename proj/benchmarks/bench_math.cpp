/*
   Copyright 2026 The defrost authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <vector>

#include "defrost/egf.hpp"
#include "defrost/families.hpp"
#include "defrost/stirling.hpp"
#include "defrost/verify.hpp"

using namespace defrost;

namespace {

const rational bench_u(-3, 5);
const rational bench_lambda(1, 2);

void BM_dfe_numbers(benchmark::State& state) {
    const int max_n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dfe_numbers(bench_u, bench_lambda, max_n));
    }
}
BENCHMARK(BM_dfe_numbers)->Arg(16)->Arg(32)->Arg(64);

void BM_dfe_poly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dfe_poly(n, bench_u, bench_lambda));
    }
}
BENCHMARK(BM_dfe_poly)->Arg(12)->Arg(24);

void BM_dfe_egf_oracle(benchmark::State& state) {
    const std::size_t order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dfe_egf(bench_u, bench_lambda, order));
    }
}
BENCHMARK(BM_dfe_egf_oracle)->Arg(12)->Arg(24);

void BM_bernoulli_numbers(benchmark::State& state) {
    const int max_n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(deg_bernoulli_numbers(bench_lambda, max_n));
    }
}
BENCHMARK(BM_bernoulli_numbers)->Arg(32)->Arg(64);

void BM_s2_transform(benchmark::State& state) {
    const int max_m = static_cast<int>(state.range(0));
    std::vector<poly> seq;
    seq.reserve(static_cast<std::size_t>(max_m) + 1);
    for (int n = 0; n <= max_m; ++n) {
        seq.push_back(dfe_poly(n, bench_u, bench_lambda));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(s2_transform<poly>(seq, bench_lambda));
    }
}
BENCHMARK(BM_s2_transform)->Arg(12)->Arg(24);

void BM_check_reflection(benchmark::State& state) {
    const int max_n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            verify::check_T2_reflection(rational(2), rational(1, 3), max_n));
    }
}
BENCHMARK(BM_check_reflection)->Arg(8)->Arg(16);

} // namespace

BENCHMARK_MAIN();
