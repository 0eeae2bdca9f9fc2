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

#include "risq/rate_eval.hpp"
#include "risq/phase_design.hpp"
#include "detail/covariance_design.hpp"

#include <cmath>
#include <numbers>
#include <algorithm>
#include <stdexcept>
#include <string>

namespace risq
{

namespace
{

constexpr double two_pi = 2.0 * std::numbers::pi;

bool has_unit_gains(const PathSet &paths)
{
    auto unit = [](cdouble g) { return std::abs(std::abs(g) - 1.0) <= 1e-12; };
    if (!unit(paths.bs_ris_gain))
        return false;
    for (const auto &p : paths.ru_paths)
        if (!unit(p.gain))
            return false;
    return true;
}

void require_los(const PathSet &paths, const char *who)
{
    if (paths.scenario != Scenario::LoS || paths.ru_paths.size() != 1)
        throw std::invalid_argument(std::string(who) + ": requires a LoS path set");
}

RateReport make_report(std::vector<double> rates)
{
    RateReport r;
    r.per_subcarrier_bits = std::move(rates);
    double acc = 0.0;
    for (double x : r.per_subcarrier_bits)
        acc += x;
    r.sum_rate_bits = r.per_subcarrier_bits.empty() ? 0.0 : acc / static_cast<double>(r.per_subcarrier_bits.size());
    return r;
}

} // namespace

LinkBudget::LinkBudget(double transmit_power, double noise_power)
    : transmit_power_(transmit_power), noise_power_(noise_power)
{
    if (!(transmit_power > 0.0) || !std::isfinite(transmit_power))
        throw std::invalid_argument("LinkBudget: transmit power must be positive");
    if (!(noise_power > 0.0) || !std::isfinite(noise_power))
        throw std::invalid_argument("LinkBudget: noise power must be positive");
}

LinkBudget LinkBudget::from_snr_db(double snr_db)
{
    return LinkBudget(std::pow(10.0, snr_db / 10.0), 1.0);
}

CRowVector effective_channel(const CRowVector &h_ru_k, const PhaseProfile &profile, const CMatrix &h_br_k)
{
    const auto M = static_cast<Eigen::Index>(profile.size());
    if (h_ru_k.size() != M || h_br_k.rows() != M)
        throw std::invalid_argument("effective_channel: dimension mismatch (h_ru " + std::to_string(h_ru_k.size()) +
                                    ", profile " + std::to_string(M) + ", H_br rows " +
                                    std::to_string(h_br_k.rows()) + ")");
    const CRowVector reflected = h_ru_k.cwiseProduct(profile.reflection().transpose());
    return reflected * h_br_k;
}

CVector mrt_beamformer(const CRowVector &effective, double transmit_power)
{
    const double norm = effective.norm();
    if (norm == 0.0)
        return CVector::Zero(effective.size());
    return (std::sqrt(transmit_power) / norm) * effective.adjoint();
}

double subcarrier_rate(const CRowVector &effective, const LinkBudget &budget)
{
    return std::log2(1.0 + budget.snr_linear() * effective.squaredNorm());
}

RateReport sum_rate(const ChannelRealization &channels, const PhaseProfile &profile, const LinkBudget &budget)
{
    const std::size_t K = channels.num_subcarriers();
    std::vector<double> rates(K);
    for (std::size_t k = 0; k < K; ++k)
        rates[k] = subcarrier_rate(effective_channel(channels.h_ris_user[k], profile, channels.h_bs_ris[k]), budget);
    RateReport r = make_report(std::move(rates));
    const PathSet &paths = channels.source_paths;
    if (paths.scenario == Scenario::LoS && has_unit_gains(paths))
        r.upper_bound_bits = rate_upper_bound(paths, profile, channels.grid, channels.num_bs_antennas(), budget);
    return r;
}

RateReport ideal_rate(const ChannelRealization &channels, const LinkBudget &budget)
{
    const std::size_t K = channels.num_subcarriers();
    const std::size_t M = channels.num_elements();
    const PathSet &paths = channels.source_paths;
    const double fc = channels.grid.carrier_hz();
    std::vector<double> rates(K);

    for (std::size_t k = 0; k < K; ++k)
    {
        const CRowVector &h = channels.h_ris_user[k];
        const CMatrix &H = channels.h_bs_ris[k];
        if (paths.scenario == Scenario::LoS)
        {
            rates[k] = subcarrier_rate(effective_channel(h, design_ideal(paths, channels.grid, M, k), H), budget);
        }
        else
        {
            const auto receive = detail::receive_phases(paths, channels.grid[k], fc, M);
            const auto [plain, conjugate] =
                detail::candidate_profiles(receive, principal_direction(h).vector, {SchemeTag::Kind::Ideal, k});
            rates[k] = std::max(subcarrier_rate(effective_channel(h, plain, H), budget),
                                subcarrier_rate(effective_channel(h, conjugate, H), budget));
        }
    }
    return make_report(std::move(rates));
}

cdouble z_factor(const PathSet &paths, const PhaseProfile &profile, const FrequencyGrid &grid, std::size_t k)
{
    require_los(paths, "z_factor");
    if (k >= grid.num_subcarriers())
        throw std::invalid_argument("z_factor: subcarrier index outside grid");
    const double f = grid[k];
    const double phi_br = spatial_angle(f, paths.bs_ris_aoa_rad, grid.carrier_hz());
    const double phi_ru = spatial_angle(f, paths.ru_paths.front().angle_rad, grid.carrier_hz());
    const auto phases = profile.phases();
    cdouble z{0.0, 0.0};
    for (std::size_t m = 0; m < phases.size(); ++m)
        z += std::polar(1.0, two_pi * static_cast<double>(m) * (phi_br - phi_ru) + phases[m]);
    return z;
}

double rate_upper_bound(const PathSet &paths, const PhaseProfile &profile, const FrequencyGrid &grid,
                        std::size_t n_bs, const LinkBudget &budget)
{
    require_los(paths, "rate_upper_bound");
    const std::size_t K = grid.num_subcarriers();
    double acc = 0.0;
    for (std::size_t k = 0; k < K; ++k)
        acc += std::norm(z_factor(paths, profile, grid, k));
    return std::log2(1.0 + budget.snr_linear() * static_cast<double>(n_bs) / static_cast<double>(K) * acc);
}

} // namespace risq
