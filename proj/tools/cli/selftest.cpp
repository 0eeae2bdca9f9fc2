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

#include "cli.hpp"

#include "risq/phase_design.hpp"
#include "risq/rate_eval.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace risq::cli
{

namespace
{

constexpr std::uint64_t kSelftestSeed = 0x5E1F7E57;

CheckResult at_most(std::string name, double measured, double limit)
{
    return {std::move(name), measured, limit, measured <= limit};
}

double rel_err(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

} // namespace

std::vector<CheckResult> run_selftest()
{
    std::vector<CheckResult> out;
    Rng rng(kSelftestSeed);
    const double snr = 10.0;
    const LinkBudget budget(snr, 1.0);

    // Unit-norm steering vectors.
    {
        double worst = 0.0;
        for (int i = 0; i < 200; ++i)
        {
            const std::size_t n = 1 + rng.uniform_index(8);
            worst = std::max(worst, std::abs(array_response(n, rng.uniform() * 4.0 - 2.0).norm() - 1.0));
        }
        out.push_back(at_most("array-response-norm", worst, 1e-12));
    }

    // |z_k| = M and the closed-form rate under the per-subcarrier optimum.
    {
        double z_err = 0.0, rate_err = 0.0;
        for (int i = 0; i < 200; ++i)
        {
            const std::size_t M = 1 + rng.uniform_index(8), N = 1 + rng.uniform_index(8), K = 1 + rng.uniform_index(8);
            const PathSet paths = sample_path_set(rng, Scenario::LoS, 1, GainMode::Unit);
            const FrequencyGrid grid = build_frequency_grid(28e9, 2e9, K);
            const ChannelRealization ch = gen_channels(paths, grid, N, M);
            const double expected = std::log2(1.0 + snr * static_cast<double>(N * M * M));
            for (std::size_t k = 0; k < K; ++k)
            {
                const PhaseProfile p = design_ideal(paths, grid, M, k);
                z_err = std::max(z_err, std::abs(std::abs(z_factor(paths, p, grid, k)) - static_cast<double>(M)));
                const double r = subcarrier_rate(effective_channel(ch.h_ris_user[k], p, ch.h_bs_ris[k]), budget);
                rate_err = std::max(rate_err, rel_err(r, expected));
            }
        }
        out.push_back(at_most("ideal-z-equals-M", z_err, 1e-9));
        out.push_back(at_most("ideal-closed-form-rate", rate_err, 1e-9));
    }

    // Jensen: mean rate never exceeds the upper bound.
    {
        double violations = 0.0;
        for (int i = 0; i < 1000; ++i)
        {
            const std::size_t M = 1 + rng.uniform_index(8), N = 1 + rng.uniform_index(8), K = 1 + rng.uniform_index(8);
            const PathSet paths = sample_path_set(rng, Scenario::LoS, 1, GainMode::Unit);
            const FrequencyGrid grid = build_frequency_grid(28e9, 4e9, K);
            const ChannelRealization ch = gen_channels(paths, grid, N, M);
            const PhaseProfile p = design_random(rng, M);
            const RateReport rep = sum_rate(ch, p, budget);
            if (rep.sum_rate_bits > rate_upper_bound(paths, p, grid, N, budget) + 1e-12)
                violations += 1.0;
        }
        out.push_back(at_most("jensen-upper-bound-violations", violations, 0.0));
    }

    // Single subcarrier: central and MCCM designs both reach the optimum.
    {
        double central_err = 0.0, mccm_err = 0.0;
        for (int i = 0; i < 100; ++i)
        {
            const std::size_t M = 1 + rng.uniform_index(8), N = 1 + rng.uniform_index(8);
            const PathSet paths = sample_path_set(rng, Scenario::LoS, 1, GainMode::Unit);
            const FrequencyGrid grid = build_frequency_grid(28e9, 2e9, 1);
            const ChannelRealization ch = gen_channels(paths, grid, N, M);
            const double ideal = ideal_rate(ch, budget).sum_rate_bits;
            central_err = std::max(central_err, rel_err(sum_rate(ch, design_central(paths, M), budget).sum_rate_bits, ideal));
            mccm_err = std::max(mccm_err, rel_err(sum_rate(ch, design_mccm(ch, budget).profile, budget).sum_rate_bits, ideal));
        }
        out.push_back(at_most("single-carrier-central", central_err, 1e-9));
        out.push_back(at_most("single-carrier-mccm", mccm_err, 1e-6));
    }

    // MRT: explicit received SNR through the precoder matches the closed form.
    {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i)
        {
            const std::size_t M = 1 + rng.uniform_index(8), N = 1 + rng.uniform_index(8);
            const PathSet paths = sample_path_set(rng, Scenario::NLoS, 3, GainMode::Random);
            const FrequencyGrid grid = build_frequency_grid(28e9, 2e9, 4);
            const ChannelRealization ch = gen_channels(paths, grid, N, M);
            const PhaseProfile p = design_random(rng, M);
            for (std::size_t k = 0; k < 4; ++k)
            {
                const CRowVector eff = effective_channel(ch.h_ris_user[k], p, ch.h_bs_ris[k]);
                const CVector f = mrt_beamformer(eff, budget.transmit_power());
                const double rx_snr = std::norm((eff * f)(0)) / budget.noise_power();
                worst = std::max(worst, std::abs(std::log2(1.0 + rx_snr) - subcarrier_rate(eff, budget)));
            }
        }
        out.push_back(at_most("mrt-consistency", worst, 1e-10));
    }

    // MCCM is Hermitian PSD with the expected trace.
    {
        double herm = 0.0, psd = 0.0, trace_err = 0.0;
        for (int i = 0; i < 100; ++i)
        {
            const std::size_t M = 1 + rng.uniform_index(8), K = 1 + rng.uniform_index(8);
            const PathSet paths = sample_path_set(rng, Scenario::NLoS, 5, GainMode::Random);
            const ChannelRealization ch = gen_channels(paths, build_frequency_grid(28e9, 2e9, K), 2, M);
            const Mccm c = mean_channel_covariance(ch.h_ris_user);
            herm = std::max(herm, c.hermitian_error());
            Eigen::SelfAdjointEigenSolver<CMatrix> es(c.matrix());
            psd = std::max(psd, -es.eigenvalues().minCoeff() / std::max(c.trace(), 1e-300));
            double expected = 0.0;
            for (const auto &h : ch.h_ris_user)
                expected += h.squaredNorm();
            expected /= static_cast<double>(K);
            trace_err = std::max(trace_err, rel_err(c.trace(), expected));
        }
        out.push_back(at_most("mccm-hermitian", herm, 1e-10));
        out.push_back(at_most("mccm-psd", psd, 1e-10));
        out.push_back(at_most("mccm-trace", trace_err, 1e-12));
    }

    // The carrier design is the subcarrier average of the per-subcarrier optima.
    {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i)
        {
            const std::size_t M = 1 + rng.uniform_index(8), K = 1 + rng.uniform_index(8);
            const PathSet paths = sample_path_set(rng, Scenario::LoS, 1, GainMode::Unit);
            const FrequencyGrid grid = build_frequency_grid(28e9, 2e9, K);
            const PhaseProfile central = design_central(paths, M);
            for (std::size_t m = 0; m < M; ++m)
            {
                double mean = 0.0;
                for (std::size_t k = 0; k < K; ++k)
                    mean += design_ideal(paths, grid, M, k).phases()[m];
                mean /= static_cast<double>(K);
                worst = std::max(worst, std::abs(mean - central.phases()[m]));
            }
        }
        out.push_back(at_most("central-is-subcarrier-mean", worst, 1e-9));
    }

    return out;
}

} // namespace risq::cli
