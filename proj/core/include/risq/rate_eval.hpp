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
#include "risq/phase_profile.hpp"

#include <optional>
#include <vector>

namespace risq
{

/// Transmit and noise power, both linear. Only their ratio enters the rate.
class LinkBudget
{
public:
    /// Throws std::invalid_argument unless both powers are positive and finite.
    LinkBudget(double transmit_power, double noise_power);

    /// sigma^2 = 1, P = 10^(snr_db / 10).
    static LinkBudget from_snr_db(double snr_db);

    double transmit_power() const { return transmit_power_; }
    double noise_power() const { return noise_power_; }
    double snr_linear() const { return transmit_power_ / noise_power_; }

private:
    double transmit_power_;
    double noise_power_;
};

/// Rates in bits/s/Hz. `sum_rate_bits` is the subcarrier mean (the 1/K-scaled sum).
struct RateReport
{
    std::vector<double> per_subcarrier_bits;
    double sum_rate_bits = 0.0;
    std::optional<double> upper_bound_bits;
};

/// h_ru * diag(exp(j phases)) * H_br, a 1 x N row vector.
CRowVector effective_channel(const CRowVector &h_ru_k, const PhaseProfile &profile, const CMatrix &h_br_k);

/// MRT precoder sqrt(P) * effective^H / ||effective||. A zero channel maps to the zero vector.
CVector mrt_beamformer(const CRowVector &effective, double transmit_power);

/// log2(1 + snr * ||effective||^2).
double subcarrier_rate(const CRowVector &effective, const LinkBudget &budget);

/// Per-subcarrier rates of a common profile and their mean. For a LoS
/// realization with unit-modulus gains the Jensen upper bound is attached.
RateReport sum_rate(const ChannelRealization &channels, const PhaseProfile &profile, const LinkBudget &budget);

/// Per-subcarrier optimum: every subcarrier uses a profile designed for it alone
/// (design_ideal in LoS, per-subcarrier covariance design in NLoS).
RateReport ideal_rate(const ChannelRealization &channels, const LinkBudget &budget);

/// sum_m exp(j 2 pi m (phi_BR,k - phi_Ru,k) + j phases[m]) for a LoS path set.
/// |z| <= M, with equality iff the profile is ideal for subcarrier k.
cdouble z_factor(const PathSet &paths, const PhaseProfile &profile, const FrequencyGrid &grid, std::size_t k);

/// log2(1 + (snr N / K) sum_k |z_k|^2), unit-gain convention. Rejects NLoS.
double rate_upper_bound(const PathSet &paths, const PhaseProfile &profile, const FrequencyGrid &grid,
                        std::size_t n_bs, const LinkBudget &budget);

} // namespace risq
