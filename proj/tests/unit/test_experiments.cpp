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

#include <catch2/catch_amalgamated.hpp>

#include "risq/experiments.hpp"

#include <cmath>

using namespace risq;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

ScenarioConfig small_config(Scenario s = Scenario::LoS)
{
    ScenarioConfig c;
    c.scenario = s;
    c.num_subcarriers = 16;
    c.num_bs_antennas = 8;
    c.num_ris_elements = 16;
    c.trials = 20;
    c.seed = 42;
    return c;
}

} // namespace

TEST_CASE("Names - round trip")
{
    for (Scheme s : all_schemes())
        CHECK(parse_scheme(to_string(s)) == s);
    CHECK(parse_scheme("MCCM") == Scheme::Mccm);
    CHECK_THROWS_AS(parse_scheme("best"), std::invalid_argument);
    for (SweepVariable v : {SweepVariable::SnrDb, SweepVariable::BandwidthHz, SweepVariable::Elements})
        CHECK(parse_sweep_variable(to_string(v)) == v);
    CHECK_THROWS_AS(parse_sweep_variable("K"), std::invalid_argument);
}

TEST_CASE("Schemes - scenario support")
{
    for (Scheme s : {Scheme::Central, Scheme::RandomIndex, Scheme::SideIndex})
    {
        CHECK(scheme_supports(s, Scenario::LoS));
        CHECK(!scheme_supports(s, Scenario::NLoS));
    }
    for (Scheme s : {Scheme::Ideal, Scheme::Random, Scheme::Mccm, Scheme::CentralCov})
    {
        CHECK(scheme_supports(s, Scenario::LoS));
        CHECK(scheme_supports(s, Scenario::NLoS));
    }
    CHECK_THROWS_AS(run_point(small_config(Scenario::NLoS), Scheme::Central), std::invalid_argument);
}

TEST_CASE("Config - validation")
{
    ScenarioConfig c = small_config();
    CHECK_NOTHROW(c.validate());
    c.trials = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = small_config();
    c.num_ris_elements = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = small_config();
    c.snr_db.clear();
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = small_config();
    c.bandwidth_hz = -1.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    CHECK_THROWS_AS(small_config().with({SweepVariable::Elements, 12.5}), std::invalid_argument);
    CHECK(small_config().with({SweepVariable::Elements, 32}).num_ris_elements == 32);
    CHECK(small_config().with({SweepVariable::BandwidthHz, 1e9}).bandwidth_hz == 1e9);
    CHECK(small_config().with({SweepVariable::SnrDb, -5}).snr_db == std::vector<double>{-5.0});
}

TEST_CASE("Summarize - mean and standard error")
{
    const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
    const PointEstimate e = summarize(x);
    CHECK_THAT(e.mean_rate_bits, WithinRel(2.5, 1e-15));
    CHECK_THAT(e.std_error_bits, WithinRel(std::sqrt(5.0 / 3.0) / 2.0, 1e-14));
    const std::vector<double> one{7.0};
    CHECK(summarize(one).std_error_bits == 0.0);
    CHECK(summarize(one).mean_rate_bits == 7.0);
}

TEST_CASE("Point - ideal unit-gain LoS is deterministic across trials")
{
    ScenarioConfig c = small_config();
    c.gain_mode = GainMode::Unit;
    const PointEstimate e = run_point(c, Scheme::Ideal);
    CHECK_THAT(e.mean_rate_bits, WithinRel(std::log2(1.0 + 10.0 * 8 * 16 * 16), 1e-12));
    CHECK_THAT(e.std_error_bits, WithinAbs(0.0, 1e-12));
}

TEST_CASE("Point - single trial has zero standard error")
{
    ScenarioConfig c = small_config(Scenario::NLoS);
    c.trials = 1;
    CHECK(run_point(c, Scheme::Mccm).std_error_bits == 0.0);
}

TEST_CASE("Trials - reproducible and independent of thread count")
{
    const std::vector<Scheme> schemes{Scheme::Ideal, Scheme::Mccm, Scheme::Random, Scheme::RandomIndexCov};
    ScenarioConfig c = small_config(Scenario::NLoS);
    c.threads = 1;
    const auto serial = trial_rates(c, schemes);
    c.threads = 3;
    const auto parallel = trial_rates(c, schemes);
    CHECK(serial == parallel);
    CHECK(serial == trial_rates(c, schemes));
    REQUIRE(serial.size() == 20);
    CHECK(serial.front().size() == 4);

    c.seed = 43;
    CHECK(trial_rates(c, schemes) != serial);
}

TEST_CASE("Trials - a scheme's rate does not depend on which other schemes run")
{
    ScenarioConfig c = small_config(Scenario::NLoS);
    const std::vector<Scheme> one{Scheme::Random};
    const std::vector<Scheme> many{Scheme::Mccm, Scheme::Random, Scheme::Ideal};
    const auto a = trial_rates(c, one);
    const auto b = trial_rates(c, many);
    for (std::size_t t = 0; t < a.size(); ++t)
        CHECK(a[t][0] == b[t][1]);
}

TEST_CASE("Trials - ideal dominates every scheme in every trial")
{
    for (Scenario s : {Scenario::LoS, Scenario::NLoS})
    {
        std::vector<Scheme> schemes;
        for (Scheme x : all_schemes())
            if (scheme_supports(x, s))
                schemes.push_back(x);
        const auto rates = trial_rates(small_config(s), schemes);
        for (const auto &row : rates)
            for (double r : row)
                CHECK(r <= row[0] + 1e-9);
    }
}

TEST_CASE("Sweep - ordering and single row")
{
    const ScenarioConfig c = small_config();
    const std::vector<Scheme> one{Scheme::Central};
    const std::vector<double> v{5.0};
    const SweepResult r = run_sweep(c, one, SweepVariable::SnrDb, v);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].scheme == Scheme::Central);
    CHECK(r.rows[0].sweep_value == 5.0);
    CHECK(r.rows[0].trials == 20);
    CHECK(r.rows[0].seed == 42);
    CHECK(r.rows[0].mean_rate_bits == run_point(c, Scheme::Central, SweepPoint{SweepVariable::SnrDb, 5.0}).mean_rate_bits);

    const std::vector<Scheme> two{Scheme::Ideal, Scheme::Random};
    const std::vector<double> vals{10.0, -10.0};
    const SweepResult s = run_sweep(c, two, SweepVariable::SnrDb, vals);
    REQUIRE(s.rows.size() == 4);
    CHECK(s.rows[0].sweep_value == 10.0);
    CHECK(s.rows[0].scheme == Scheme::Ideal);
    CHECK(s.rows[1].scheme == Scheme::Random);
    CHECK(s.rows[2].sweep_value == -10.0);
    CHECK(s.rows[0].mean_rate_bits > s.rows[2].mean_rate_bits);

    CHECK_THROWS_AS(run_sweep(c, {}, SweepVariable::SnrDb, vals), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(c, two, SweepVariable::SnrDb, {}), std::invalid_argument);
}

TEST_CASE("Figures - presets")
{
    for (int id : {2, 3, 4})
    {
        const FigurePreset p = figure_preset(id, 7, 9);
        CHECK(p.config.scenario == Scenario::LoS);
        CHECK(p.config.trials == 7);
        CHECK(p.config.seed == 9);
        CHECK(p.schemes.size() == 5);
        for (Scheme s : p.schemes)
            CHECK(scheme_supports(s, Scenario::LoS));
    }
    for (int id : {5, 6})
    {
        const FigurePreset p = figure_preset(id, 7, 9);
        CHECK(p.config.scenario == Scenario::NLoS);
        CHECK(p.schemes.front() == Scheme::Ideal);
        for (Scheme s : p.schemes)
            CHECK(scheme_supports(s, Scenario::NLoS));
    }
    CHECK(figure_preset(2, 1, 1).variable == SweepVariable::SnrDb);
    CHECK(figure_preset(3, 1, 1).values == default_bandwidth_grid_hz);
    CHECK(figure_preset(4, 1, 1).variable == SweepVariable::Elements);
    CHECK(figure_preset(6, 1, 1).variable == SweepVariable::BandwidthHz);
    CHECK_THROWS_AS(figure_preset(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(figure_preset(7, 1, 1), std::invalid_argument);
}
