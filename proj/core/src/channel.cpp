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

#include "risq/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace risq
{

namespace
{

constexpr double two_pi = 2.0 * std::numbers::pi;

cdouble delay_factor(double delay_s, double f_hz)
{
    return std::polar(1.0, -two_pi * delay_s * f_hz);
}

} // namespace

std::string_view to_string(Scenario s)
{
    return s == Scenario::LoS ? "los" : "nlos";
}

std::string_view to_string(GainMode g)
{
    return g == GainMode::Unit ? "unit" : "random";
}

FrequencyGrid::FrequencyGrid(double carrier_hz, double bandwidth_hz, std::size_t num_subcarriers)
    : carrier_hz_(carrier_hz), bandwidth_hz_(bandwidth_hz)
{
    if (num_subcarriers == 0)
        throw std::invalid_argument("FrequencyGrid: number of subcarriers must be at least 1");
    if (!(carrier_hz > 0.0) || !std::isfinite(carrier_hz))
        throw std::invalid_argument("FrequencyGrid: carrier frequency must be positive");
    if (!(bandwidth_hz >= 0.0) || !std::isfinite(bandwidth_hz))
        throw std::invalid_argument("FrequencyGrid: bandwidth must be nonnegative");
    if (bandwidth_hz >= 2.0 * carrier_hz)
        throw std::invalid_argument("FrequencyGrid: bandwidth must be below twice the carrier frequency");

    const double spacing = bandwidth_hz / static_cast<double>(num_subcarriers);
    const double centre = (static_cast<double>(num_subcarriers) - 1.0) / 2.0;
    frequencies_.resize(num_subcarriers);
    for (std::size_t k = 0; k < num_subcarriers; ++k)
        frequencies_[k] = carrier_hz + spacing * (static_cast<double>(k) - centre);
}

FrequencyGrid build_frequency_grid(double carrier_hz, double bandwidth_hz, std::size_t num_subcarriers)
{
    return FrequencyGrid(carrier_hz, bandwidth_hz, num_subcarriers);
}

double spatial_angle(double f_hz, double theta_rad, double carrier_hz)
{
    return f_hz / (2.0 * carrier_hz) * std::sin(theta_rad);
}

CVector array_response(std::size_t n_elements, double phi)
{
    if (n_elements == 0)
        throw std::invalid_argument("array_response: number of elements must be at least 1");
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_elements));
    CVector a(static_cast<Eigen::Index>(n_elements));
    for (std::size_t m = 0; m < n_elements; ++m)
        a[static_cast<Eigen::Index>(m)] = std::polar(scale, two_pi * static_cast<double>(m) * phi);
    return a;
}

void PathSet::validate() const
{
    if (ru_paths.empty())
        throw std::invalid_argument("PathSet: at least one RIS-user path is required");
    if (scenario == Scenario::LoS && ru_paths.size() != 1)
        throw std::invalid_argument("PathSet: LoS scenario requires exactly one RIS-user path, got " +
                                    std::to_string(ru_paths.size()));
    auto check_delay = [](double d) {
        if (!(d >= 0.0) || !std::isfinite(d))
            throw std::invalid_argument("PathSet: delays must be finite and nonnegative");
    };
    check_delay(bs_ris_delay_s);
    for (const auto &p : ru_paths)
        check_delay(p.delay_s);
}

PathSet sample_path_set(Rng &rng, Scenario scenario, std::size_t num_paths, GainMode gains)
{
    if (num_paths == 0)
        throw std::invalid_argument("sample_path_set: number of paths must be at least 1");
    const std::size_t L = scenario == Scenario::LoS ? 1 : num_paths;

    auto gain = [&]() -> cdouble { return gains == GainMode::Unit ? cdouble{1.0, 0.0} : rng.complex_normal(); };

    PathSet p;
    p.scenario = scenario;
    p.bs_ris_aoa_rad = rng.uniform_open_closed(two_pi);
    p.bs_ris_aod_rad = rng.uniform_open_closed(two_pi);
    p.bs_ris_gain = gain();
    p.bs_ris_delay_s = rng.uniform_open_closed(max_path_delay_s);
    p.ru_paths.reserve(L);
    for (std::size_t l = 0; l < L; ++l)
    {
        RuPath r;
        r.angle_rad = rng.uniform_open_closed(two_pi);
        r.gain = gain();
        r.delay_s = rng.uniform_open_closed(max_path_delay_s);
        p.ru_paths.push_back(r);
    }
    return p;
}

double bs_ris_spatial_angle(const PathSet &paths, double f_hz, double carrier_hz)
{
    return spatial_angle(f_hz, paths.bs_ris_aoa_rad, carrier_hz);
}

CMatrix bs_ris_channel(const PathSet &paths, double f_hz, double carrier_hz, std::size_t n_bs, std::size_t n_ris)
{
    const double gamma = std::sqrt(static_cast<double>(n_ris * n_bs));
    const cdouble coeff = gamma * paths.bs_ris_gain * delay_factor(paths.bs_ris_delay_s, f_hz);
    const CVector a_ris = array_response(n_ris, spatial_angle(f_hz, paths.bs_ris_aoa_rad, carrier_hz));
    const CVector a_bs = array_response(n_bs, spatial_angle(f_hz, paths.bs_ris_aod_rad, carrier_hz));
    return coeff * a_ris * a_bs.adjoint();
}

CRowVector ris_user_channel(const PathSet &paths, double f_hz, double carrier_hz, std::size_t n_ris)
{
    const double L = static_cast<double>(paths.ru_paths.size());
    const double gamma = paths.scenario == Scenario::LoS ? std::sqrt(static_cast<double>(n_ris))
                                                         : std::sqrt(static_cast<double>(n_ris) / L);
    CRowVector h = CRowVector::Zero(static_cast<Eigen::Index>(n_ris));
    for (const auto &p : paths.ru_paths)
    {
        const cdouble coeff = gamma * p.gain * delay_factor(p.delay_s, f_hz);
        h += coeff * array_response(n_ris, spatial_angle(f_hz, p.angle_rad, carrier_hz)).adjoint();
    }
    return h;
}

ChannelRealization gen_channels(const PathSet &paths, const FrequencyGrid &grid, std::size_t n_bs, std::size_t n_ris)
{
    if (n_bs == 0 || n_ris == 0)
        throw std::invalid_argument("gen_channels: antenna and element counts must be at least 1");
    paths.validate();

    ChannelRealization ch{{}, {}, grid, paths};
    const std::size_t K = grid.num_subcarriers();
    ch.h_bs_ris.reserve(K);
    ch.h_ris_user.reserve(K);
    for (std::size_t k = 0; k < K; ++k)
    {
        ch.h_bs_ris.push_back(bs_ris_channel(paths, grid[k], grid.carrier_hz(), n_bs, n_ris));
        ch.h_ris_user.push_back(ris_user_channel(paths, grid[k], grid.carrier_hz(), n_ris));
    }
    return ch;
}

} // namespace risq
