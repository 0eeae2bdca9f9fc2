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

#pragma once

#include "risq/channel.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace risq
{

/// Phase design schemes compared by the Monte Carlo harness.
///
/// Central, RandomIndex and SideIndex are the angle-based LoS designs. Their
/// `*Cov` counterparts design from the covariance of one subcarrier (the carrier,
/// a random subcarrier, the lowest subcarrier) and are the NLoS baselines.
enum class Scheme
{
    Ideal,
    Central,
    Random,
    RandomIndex,
    SideIndex,
    Mccm,
    CentralCov,
    RandomIndexCov,
    SideIndexCov
};

std::string_view to_string(Scheme s);

/// Accepts the names produced by to_string (case-insensitive). Throws std::invalid_argument.
Scheme parse_scheme(std::string_view name);

bool scheme_supports(Scheme s, Scenario scenario);

std::span<const Scheme> all_schemes();

enum class SweepVariable
{
    SnrDb,
    BandwidthHz,
    Elements
};

std::string_view to_string(SweepVariable v);
SweepVariable parse_sweep_variable(std::string_view name);

struct SweepPoint
{
    SweepVariable variable = SweepVariable::SnrDb;
    double value = 0.0;
};

/// Simulation parameters. Defaults are the reference setup: 28 GHz carrier,
/// 2 GHz bandwidth, 128 subcarriers, 64 BS antennas, 64 RIS elements, 5 NLoS paths.
struct ScenarioConfig
{
    double carrier_hz = 28e9;
    double bandwidth_hz = 2e9;
    std::size_t num_subcarriers = 128;
    std::size_t num_bs_antennas = 64;
    std::size_t num_ris_elements = 64;
    std::size_t num_paths = 5;
    Scenario scenario = Scenario::LoS;
    std::vector<double> snr_db{10.0};
    std::size_t trials = 500;
    std::uint64_t seed = 1;
    GainMode gain_mode = GainMode::Random;
    /// Worker threads for the trial loop; 0 selects default_thread_count().
    std::size_t threads = 0;

    /// Throws std::invalid_argument on a parameter that cannot be simulated.
    void validate() const;

    /// Copy with the sweep variable set to the given value.
    ScenarioConfig with(const SweepPoint &point) const;
};

/// RISQ_THREADS if set to a positive integer, else the hardware concurrency.
std::size_t default_thread_count();

struct PointEstimate
{
    double mean_rate_bits = 0.0;
    double std_error_bits = 0.0;
};

struct SweepRow
{
    Scenario scenario = Scenario::LoS;
    Scheme scheme = Scheme::Ideal;
    SweepVariable sweep_variable = SweepVariable::SnrDb;
    double sweep_value = 0.0;
    double mean_rate_bits = 0.0;
    double std_error_bits = 0.0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

struct SweepResult
{
    std::vector<SweepRow> rows;
};

/// Mean and standard error (sample sd / sqrt(trials), 0 for one trial).
PointEstimate summarize(std::span<const double> samples);

/// Mean rate of every scheme on every trial at one operating point, indexed
/// [trial][scheme]. All schemes see the same channel realization in a trial.
/// The SNR is point->value for an SNR point, otherwise config.snr_db.front().
std::vector<std::vector<double>> trial_rates(const ScenarioConfig &config, std::span<const Scheme> schemes,
                                             const std::optional<SweepPoint> &point = std::nullopt);

/// Throws std::invalid_argument for a scheme that does not support the scenario.
PointEstimate run_point(const ScenarioConfig &config, Scheme scheme,
                        const std::optional<SweepPoint> &point = std::nullopt);

/// Rows follow the given value order, then the given scheme order.
SweepResult run_sweep(const ScenarioConfig &config, std::span<const Scheme> schemes, SweepVariable variable,
                      std::span<const double> values);

struct FigurePreset
{
    ScenarioConfig config;
    std::vector<Scheme> schemes;
    SweepVariable variable = SweepVariable::SnrDb;
    std::vector<double> values;
};

/// Presets for the five reference comparisons: 2 LoS vs SNR, 3 LoS vs bandwidth,
/// 4 LoS vs RIS size, 5 NLoS vs SNR, 6 NLoS vs bandwidth.
FigurePreset figure_preset(int figure_id, std::size_t trials, std::uint64_t seed);

SweepResult reproduce_figure(int figure_id, std::size_t trials, std::uint64_t seed);

inline const std::vector<double> default_snr_grid_db{-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0};
inline const std::vector<double> default_bandwidth_grid_hz{0.25e9, 0.5e9, 1e9, 2e9, 4e9};
inline const std::vector<double> default_elements_grid{16.0, 32.0, 64.0, 128.0, 256.0};

} // namespace risq
