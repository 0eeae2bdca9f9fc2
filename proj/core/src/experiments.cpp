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

#include "risq/experiments.hpp"
#include "risq/phase_design.hpp"
#include "risq/rate_eval.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace risq
{

namespace
{

constexpr std::array<Scheme, 9> kAllSchemes{Scheme::Ideal,      Scheme::Central,        Scheme::Random,
                                            Scheme::RandomIndex, Scheme::SideIndex,      Scheme::Mccm,
                                            Scheme::CentralCov,  Scheme::RandomIndexCov, Scheme::SideIndexCov};

std::string lowercase(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

// Index-ordered parallel loop. Results land in caller-owned slots, so the
// reduction order does not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t threads, Fn &&fn)
{
    threads = std::max<std::size_t>(1, std::min(threads, n));
    if (threads == 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++)
                {
                    try
                    {
                        fn(i);
                    }
                    catch (...)
                    {
                        std::lock_guard lock(error_mutex);
                        if (!error)
                            error = std::current_exception();
                        next = n;
                    }
                }
            });
    }
    if (error)
        std::rethrow_exception(error);
}

double scheme_rate(Scheme scheme, const ChannelRealization &channels, const LinkBudget &budget, Rng &rng)
{
    const PathSet &paths = channels.source_paths;
    const FrequencyGrid &grid = channels.grid;
    const std::size_t M = channels.num_elements();
    const std::size_t K = grid.num_subcarriers();

    switch (scheme)
    {
    case Scheme::Ideal:
        return ideal_rate(channels, budget).sum_rate_bits;
    case Scheme::Central:
        return sum_rate(channels, design_central(paths, M), budget).sum_rate_bits;
    case Scheme::Random:
        return sum_rate(channels, design_random(rng, M), budget).sum_rate_bits;
    case Scheme::RandomIndex:
        return sum_rate(channels, design_indexed(paths, grid, M, rng.uniform_index(K)), budget).sum_rate_bits;
    case Scheme::SideIndex:
        return sum_rate(channels, design_indexed(paths, grid, M, 0), budget).sum_rate_bits;
    case Scheme::Mccm:
        return sum_rate(channels, design_mccm(channels, budget).profile, budget).sum_rate_bits;
    case Scheme::CentralCov:
        return sum_rate(channels, design_subcarrier_covariance(channels, std::nullopt, budget).profile, budget)
            .sum_rate_bits;
    case Scheme::RandomIndexCov:
        return sum_rate(channels, design_subcarrier_covariance(channels, rng.uniform_index(K), budget).profile, budget)
            .sum_rate_bits;
    case Scheme::SideIndexCov:
        return sum_rate(channels, design_subcarrier_covariance(channels, 0, budget).profile, budget).sum_rate_bits;
    }
    throw std::logic_error("scheme_rate: unhandled scheme");
}

void require_supported(std::span<const Scheme> schemes, Scenario scenario)
{
    for (Scheme s : schemes)
        if (!scheme_supports(s, scenario))
            throw std::invalid_argument("scheme '" + std::string(to_string(s)) + "' requires the LoS scenario; got " +
                                        std::string(to_string(scenario)));
}

} // namespace

std::string_view to_string(Scheme s)
{
    switch (s)
    {
    case Scheme::Ideal: return "ideal";
    case Scheme::Central: return "central";
    case Scheme::Random: return "random";
    case Scheme::RandomIndex: return "random-index";
    case Scheme::SideIndex: return "side-index";
    case Scheme::Mccm: return "mccm";
    case Scheme::CentralCov: return "central-cov";
    case Scheme::RandomIndexCov: return "random-index-cov";
    case Scheme::SideIndexCov: return "side-index-cov";
    }
    return "unknown";
}

Scheme parse_scheme(std::string_view name)
{
    const std::string key = lowercase(name);
    for (Scheme s : kAllSchemes)
        if (key == to_string(s))
            return s;
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

bool scheme_supports(Scheme s, Scenario scenario)
{
    switch (s)
    {
    case Scheme::Central:
    case Scheme::RandomIndex:
    case Scheme::SideIndex:
        return scenario == Scenario::LoS;
    default:
        return true;
    }
}

std::span<const Scheme> all_schemes()
{
    return kAllSchemes;
}

std::string_view to_string(SweepVariable v)
{
    switch (v)
    {
    case SweepVariable::SnrDb: return "snr_db";
    case SweepVariable::BandwidthHz: return "bandwidth_hz";
    case SweepVariable::Elements: return "M";
    }
    return "unknown";
}

SweepVariable parse_sweep_variable(std::string_view name)
{
    const std::string key = lowercase(name);
    if (key == "snr_db" || key == "snr")
        return SweepVariable::SnrDb;
    if (key == "bandwidth_hz" || key == "bandwidth")
        return SweepVariable::BandwidthHz;
    if (key == "m" || key == "elements")
        return SweepVariable::Elements;
    throw std::invalid_argument("unknown sweep variable '" + std::string(name) + "'");
}

void ScenarioConfig::validate() const
{
    (void)build_frequency_grid(carrier_hz, bandwidth_hz, num_subcarriers);
    if (num_bs_antennas == 0)
        throw std::invalid_argument("ScenarioConfig: N must be at least 1");
    if (num_ris_elements == 0)
        throw std::invalid_argument("ScenarioConfig: M must be at least 1");
    if (num_paths == 0)
        throw std::invalid_argument("ScenarioConfig: L must be at least 1");
    if (trials == 0)
        throw std::invalid_argument("ScenarioConfig: trials must be at least 1");
    if (snr_db.empty())
        throw std::invalid_argument("ScenarioConfig: at least one SNR value is required");
    for (double s : snr_db)
        if (!std::isfinite(s))
            throw std::invalid_argument("ScenarioConfig: SNR values must be finite");
}

ScenarioConfig ScenarioConfig::with(const SweepPoint &point) const
{
    ScenarioConfig c = *this;
    switch (point.variable)
    {
    case SweepVariable::SnrDb:
        c.snr_db = {point.value};
        break;
    case SweepVariable::BandwidthHz:
        c.bandwidth_hz = point.value;
        break;
    case SweepVariable::Elements:
        if (!(point.value >= 1.0) || point.value != std::floor(point.value))
            throw std::invalid_argument("ScenarioConfig: M sweep values must be positive integers");
        c.num_ris_elements = static_cast<std::size_t>(point.value);
        break;
    }
    return c;
}

std::size_t default_thread_count()
{
    if (const char *env = std::getenv("RISQ_THREADS"))
    {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

PointEstimate summarize(std::span<const double> samples)
{
    PointEstimate e;
    if (samples.empty())
        return e;
    const double n = static_cast<double>(samples.size());
    double acc = 0.0;
    for (double x : samples)
        acc += x;
    e.mean_rate_bits = acc / n;
    if (samples.size() > 1)
    {
        double ss = 0.0;
        for (double x : samples)
            ss += (x - e.mean_rate_bits) * (x - e.mean_rate_bits);
        e.std_error_bits = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return e;
}

std::vector<std::vector<double>> trial_rates(const ScenarioConfig &base, std::span<const Scheme> schemes,
                                             const std::optional<SweepPoint> &point)
{
    const ScenarioConfig config = point ? base.with(*point) : base;
    config.validate();
    require_supported(schemes, config.scenario);

    const FrequencyGrid grid = build_frequency_grid(config.carrier_hz, config.bandwidth_hz, config.num_subcarriers);
    const LinkBudget budget = LinkBudget::from_snr_db(config.snr_db.front());
    const std::size_t threads = config.threads ? config.threads : default_thread_count();

    std::vector<std::vector<double>> out(config.trials, std::vector<double>(schemes.size()));
    parallel_for(config.trials, threads, [&](std::size_t t) {
        Rng path_rng = Rng::substream(config.seed, {t, 0});
        const PathSet paths = sample_path_set(path_rng, config.scenario, config.num_paths, config.gain_mode);
        const ChannelRealization channels =
            gen_channels(paths, grid, config.num_bs_antennas, config.num_ris_elements);
        for (std::size_t s = 0; s < schemes.size(); ++s)
        {
            Rng scheme_rng = Rng::substream(config.seed, {t, 1 + static_cast<std::uint64_t>(schemes[s])});
            out[t][s] = scheme_rate(schemes[s], channels, budget, scheme_rng);
        }
    });
    return out;
}

PointEstimate run_point(const ScenarioConfig &config, Scheme scheme, const std::optional<SweepPoint> &point)
{
    const Scheme schemes[] = {scheme};
    const auto rates = trial_rates(config, schemes, point);
    std::vector<double> samples;
    samples.reserve(rates.size());
    for (const auto &row : rates)
        samples.push_back(row.front());
    return summarize(samples);
}

SweepResult run_sweep(const ScenarioConfig &config, std::span<const Scheme> schemes, SweepVariable variable,
                      std::span<const double> values)
{
    if (schemes.empty())
        throw std::invalid_argument("run_sweep: at least one scheme is required");
    if (values.empty())
        throw std::invalid_argument("run_sweep: at least one sweep value is required");
    require_supported(schemes, config.scenario);

    SweepResult result;
    result.rows.reserve(schemes.size() * values.size());
    for (double value : values)
    {
        const SweepPoint point{variable, value};
        const auto rates = trial_rates(config, schemes, point);
        for (std::size_t s = 0; s < schemes.size(); ++s)
        {
            std::vector<double> samples(rates.size());
            for (std::size_t t = 0; t < rates.size(); ++t)
                samples[t] = rates[t][s];
            const PointEstimate est = summarize(samples);
            result.rows.push_back(SweepRow{config.scenario, schemes[s], variable, value, est.mean_rate_bits,
                                           est.std_error_bits, config.trials, config.seed});
        }
    }
    return result;
}

FigurePreset figure_preset(int figure_id, std::size_t trials, std::uint64_t seed)
{
    FigurePreset p;
    p.config.trials = trials;
    p.config.seed = seed;
    p.config.snr_db = {10.0};

    const std::vector<Scheme> los{Scheme::Ideal, Scheme::Central, Scheme::RandomIndex, Scheme::SideIndex,
                                  Scheme::Random};
    const std::vector<Scheme> nlos{Scheme::Ideal,          Scheme::Mccm,         Scheme::CentralCov,
                                   Scheme::RandomIndexCov, Scheme::SideIndexCov, Scheme::Random};
    switch (figure_id)
    {
    case 2:
        p.config.scenario = Scenario::LoS;
        p.schemes = los;
        p.variable = SweepVariable::SnrDb;
        p.values = default_snr_grid_db;
        break;
    case 3:
        p.config.scenario = Scenario::LoS;
        p.schemes = los;
        p.variable = SweepVariable::BandwidthHz;
        p.values = default_bandwidth_grid_hz;
        break;
    case 4:
        p.config.scenario = Scenario::LoS;
        p.schemes = los;
        p.variable = SweepVariable::Elements;
        p.values = default_elements_grid;
        break;
    case 5:
        p.config.scenario = Scenario::NLoS;
        p.schemes = nlos;
        p.variable = SweepVariable::SnrDb;
        p.values = default_snr_grid_db;
        break;
    case 6:
        p.config.scenario = Scenario::NLoS;
        p.schemes = nlos;
        p.variable = SweepVariable::BandwidthHz;
        p.values = default_bandwidth_grid_hz;
        break;
    default:
        throw std::invalid_argument("unknown figure id " + std::to_string(figure_id) + " (expected 2-6)");
    }
    return p;
}

SweepResult reproduce_figure(int figure_id, std::size_t trials, std::uint64_t seed)
{
    const FigurePreset p = figure_preset(figure_id, trials, seed);
    return run_sweep(p.config, p.schemes, p.variable, p.values);
}

} // namespace risq
