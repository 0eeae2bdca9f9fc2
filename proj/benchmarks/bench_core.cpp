// SPDX-License-Identifier: Apache-2.0
//
// risq - beam-squint aware phase design for RIS-aided wideband mmWave links
// Copyright (C) 2026 The risq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "risq/risq.hpp"

using namespace risq;

namespace
{

ChannelRealization make_channels(Scenario s, std::size_t K, std::size_t M)
{
    Rng rng(7);
    const PathSet paths = sample_path_set(rng, s, s == Scenario::LoS ? 1 : 5);
    return gen_channels(paths, build_frequency_grid(28e9, 2e9, K), 64, M);
}

} // namespace

static void BM_GenChannels(benchmark::State &state)
{
    Rng rng(1);
    const PathSet paths = sample_path_set(rng, Scenario::NLoS, 5);
    const FrequencyGrid grid = build_frequency_grid(28e9, 2e9, 128);
    const auto M = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gen_channels(paths, grid, 64, M));
}
BENCHMARK(BM_GenChannels)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_DesignMccm(benchmark::State &state)
{
    const auto ch = make_channels(Scenario::NLoS, 128, static_cast<std::size_t>(state.range(0)));
    const LinkBudget budget = LinkBudget::from_snr_db(10.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(design_mccm(ch, budget));
}
BENCHMARK(BM_DesignMccm)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_SumRate(benchmark::State &state)
{
    const auto M = static_cast<std::size_t>(state.range(0));
    const auto ch = make_channels(Scenario::LoS, 128, M);
    Rng rng(2);
    const PhaseProfile p = design_random(rng, M);
    const LinkBudget budget = LinkBudget::from_snr_db(10.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(sum_rate(ch, p, budget));
}
BENCHMARK(BM_SumRate)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

// Full Monte Carlo point at the reference setup, 10 trials.
static void BM_RunPoint(benchmark::State &state)
{
    ScenarioConfig c;
    c.scenario = state.range(0) ? Scenario::NLoS : Scenario::LoS;
    c.trials = 10;
    c.threads = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_point(c, Scheme::Ideal));
}
BENCHMARK(BM_RunPoint)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
