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

#include "oracles.hpp"
#include "risq/channel.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <numeric>

using namespace risq;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

constexpr double pi = std::numbers::pi;

// ================================================================================================
// Frequency grid
// ================================================================================================

TEST_CASE("Grid - reference setup end points")
{
    const auto g = build_frequency_grid(28e9, 2e9, 128);
    REQUIRE(g.num_subcarriers() == 128);
    CHECK_THAT(g[0], WithinRel(27007812500.0, 1e-15));
    CHECK_THAT(g[127], WithinRel(28992187500.0, 1e-15));
}

TEST_CASE("Grid - single subcarrier sits on the carrier")
{
    for (double bw : {0.0, 1e9, 4e9})
    {
        const auto g = build_frequency_grid(28e9, bw, 1);
        REQUIRE(g.num_subcarriers() == 1);
        CHECK(g[0] == 28e9);
    }
}

TEST_CASE("Grid - symmetric about the carrier")
{
    for (std::size_t K : {1u, 2u, 7u, 128u, 1000u})
    {
        const auto g = build_frequency_grid(28e9, 2e9, K);
        const auto f = g.frequencies();
        CHECK_THAT(std::accumulate(f.begin(), f.end(), 0.0) / static_cast<double>(K), WithinRel(28e9, 1e-15));
        for (std::size_t k = 0; k < K; ++k)
            CHECK_THAT(f[k] + f[K - 1 - k], WithinRel(56e9, 1e-15));
        for (std::size_t k = 1; k < K; ++k)
            CHECK(f[k] > f[k - 1]);
    }
}

TEST_CASE("Grid - invalid parameters are rejected")
{
    CHECK_THROWS_AS(build_frequency_grid(28e9, 2e9, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_frequency_grid(28e9, 56e9, 8), std::invalid_argument);
    CHECK_THROWS_AS(build_frequency_grid(28e9, 60e9, 8), std::invalid_argument);
    CHECK_THROWS_AS(build_frequency_grid(0.0, 1e9, 8), std::invalid_argument);
    CHECK_THROWS_AS(build_frequency_grid(28e9, -1.0, 8), std::invalid_argument);
    CHECK_NOTHROW(build_frequency_grid(28e9, 55.9e9, 8));
}

// ================================================================================================
// Spatial angle and array response
// ================================================================================================

TEST_CASE("Spatial angle - examples")
{
    CHECK(spatial_angle(27e9, 0.0, 28e9) == 0.0);
    CHECK_THAT(spatial_angle(28e9, pi / 2, 28e9), WithinAbs(0.5, 1e-15));
    CHECK_THAT(spatial_angle(1.05 * 28e9, pi / 2, 28e9), WithinAbs(0.525, 1e-15));
}

TEST_CASE("Spatial angle - agrees with the physical definition")
{
    Rng rng(11);
    for (int i = 0; i < 100; ++i)
    {
        const double f = 27e9 + 2e9 * rng.uniform(), th = rng.uniform_open_closed(2 * pi);
        CHECK_THAT(spatial_angle(f, th, 28e9), WithinAbs(oracle::spatial_angle(f, th, 28e9), 1e-15));
    }
}

TEST_CASE("Spatial angle - squint grows with frequency and collapses without bandwidth")
{
    const double th = 0.7;
    const auto g = build_frequency_grid(28e9, 4e9, 64);
    for (std::size_t k = 1; k < g.num_subcarriers(); ++k)
        CHECK(spatial_angle(g[k], th, 28e9) > spatial_angle(g[k - 1], th, 28e9));

    const auto narrow = build_frequency_grid(28e9, 0.0, 16);
    for (double f : narrow.frequencies())
        CHECK(spatial_angle(f, th, 28e9) == 0.5 * std::sin(th));
}

TEST_CASE("Array response - examples")
{
    const CVector one = array_response(1, 0.37);
    REQUIRE(one.size() == 1);
    CHECK(std::abs(one[0] - cdouble(1.0, 0.0)) < 1e-15);

    const CVector flat = array_response(4, 0.0);
    for (Eigen::Index m = 0; m < 4; ++m)
        CHECK(std::abs(flat[m] - cdouble(0.5, 0.0)) < 1e-15);

    const CVector alt = array_response(8, 0.5);
    for (Eigen::Index m = 0; m < 8; ++m)
        CHECK(std::abs(alt[m] - cdouble((m % 2 ? -1.0 : 1.0) / std::sqrt(8.0), 0.0)) < 1e-14);

    CHECK_THROWS_AS(array_response(0, 0.1), std::invalid_argument);
}

TEST_CASE("Array response - unit norm for any size and angle")
{
    Rng rng(3);
    for (int i = 0; i < 500; ++i)
    {
        const std::size_t n = 1 + rng.uniform_index(300);
        const double phi = 10.0 * (rng.uniform() - 0.5);
        CHECK_THAT(array_response(n, phi).norm(), WithinAbs(1.0, 1e-12));
    }
}

// ================================================================================================
// Path sampling
// ================================================================================================

TEST_CASE("Paths - same seed gives the same path set")
{
    Rng a(42), b(42);
    const auto p = sample_path_set(a, Scenario::NLoS, 5);
    const auto q = sample_path_set(b, Scenario::NLoS, 5);
    CHECK(p.bs_ris_aoa_rad == q.bs_ris_aoa_rad);
    CHECK(p.bs_ris_aod_rad == q.bs_ris_aod_rad);
    CHECK(p.bs_ris_gain == q.bs_ris_gain);
    CHECK(p.bs_ris_delay_s == q.bs_ris_delay_s);
    REQUIRE(p.ru_paths.size() == q.ru_paths.size());
    for (std::size_t l = 0; l < p.ru_paths.size(); ++l)
    {
        CHECK(p.ru_paths[l].angle_rad == q.ru_paths[l].angle_rad);
        CHECK(p.ru_paths[l].gain == q.ru_paths[l].gain);
        CHECK(p.ru_paths[l].delay_s == q.ru_paths[l].delay_s);
    }
}

TEST_CASE("Paths - path counts and supports")
{
    Rng rng(5);
    const auto nlos = sample_path_set(rng, Scenario::NLoS, 5);
    CHECK(nlos.ru_paths.size() == 5);
    CHECK(nlos.scenario == Scenario::NLoS);

    const auto los = sample_path_set(rng, Scenario::LoS, 5);
    CHECK(los.ru_paths.size() == 1);

    CHECK_THROWS_AS(sample_path_set(rng, Scenario::NLoS, 0), std::invalid_argument);

    for (int i = 0; i < 2000; ++i)
    {
        const auto p = sample_path_set(rng, Scenario::NLoS, 3);
        CHECK((p.bs_ris_aoa_rad > 0.0 && p.bs_ris_aoa_rad <= 2 * pi));
        CHECK((p.bs_ris_delay_s > 0.0 && p.bs_ris_delay_s <= max_path_delay_s));
        for (const auto &r : p.ru_paths)
        {
            CHECK((r.angle_rad > 0.0 && r.angle_rad <= 2 * pi));
            CHECK((r.delay_s > 0.0 && r.delay_s <= max_path_delay_s));
        }
    }
}

TEST_CASE("Paths - delay mean matches U(0, 20 ns)")
{
    Rng rng(2024);
    constexpr int n = 100000;
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        acc += sample_path_set(rng, Scenario::LoS, 1).bs_ris_delay_s;
    const double mean = acc / n;
    const double se = max_path_delay_s / std::sqrt(12.0) / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(mean - 10e-9) < 3.0 * se);
}

TEST_CASE("Paths - unit gain mode and CN(0,1) gains")
{
    Rng rng(8);
    const auto u = sample_path_set(rng, Scenario::NLoS, 4, GainMode::Unit);
    CHECK(u.bs_ris_gain == cdouble(1.0, 0.0));
    for (const auto &r : u.ru_paths)
        CHECK(r.gain == cdouble(1.0, 0.0));

    constexpr int n = 50000;
    double power = 0.0;
    cdouble mean{0.0, 0.0};
    for (int i = 0; i < n; ++i)
    {
        const cdouble g = sample_path_set(rng, Scenario::LoS, 1).bs_ris_gain;
        power += std::norm(g);
        mean += g;
    }
    // E|g|^2 = 1 with sd 1 per sample; E g = 0 with sd 1/sqrt(2) per component.
    CHECK(std::abs(power / n - 1.0) < 4.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(mean / static_cast<double>(n)) < 4.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("Paths - validation")
{
    PathSet p;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.ru_paths.push_back({});
    CHECK_NOTHROW(p.validate());
    p.ru_paths.push_back({});
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.scenario = Scenario::NLoS;
    CHECK_NOTHROW(p.validate());
    p.ru_paths[1].delay_s = -1e-9;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.ru_paths[1].delay_s = 1.0; // beyond the sampled support but allowed
    CHECK_NOTHROW(p.validate());
}

// ================================================================================================
// Channel generation
// ================================================================================================

TEST_CASE("Channels - BS-RIS matrix matches the entrywise definition")
{
    Rng rng(77);
    const auto paths = sample_path_set(rng, Scenario::LoS, 1);
    const auto grid = build_frequency_grid(28e9, 2e9, 8);
    const std::size_t M = 6, N = 5;
    const auto ch = gen_channels(paths, grid, N, M);
    REQUIRE(ch.num_subcarriers() == 8);
    REQUIRE(ch.num_elements() == M);
    REQUIRE(ch.num_bs_antennas() == N);
    for (std::size_t k = 0; k < 8; ++k)
        for (std::size_t m = 0; m < M; ++m)
            for (std::size_t n = 0; n < N; ++n)
            {
                const cdouble expected = oracle::bs_ris_entry(m, n, M, N, paths.bs_ris_gain, paths.bs_ris_delay_s,
                                                              paths.bs_ris_aoa_rad, paths.bs_ris_aod_rad, grid[k],
                                                              28e9);
                CHECK(std::abs(ch.h_bs_ris[k](m, n) - expected) < 1e-12 * std::sqrt(double(M * N)));
            }
}

TEST_CASE("Channels - rank one and constant Frobenius norm")
{
    Rng rng(9);
    for (int i = 0; i < 20; ++i)
    {
        const auto paths = sample_path_set(rng, Scenario::NLoS, 5);
        const auto grid = build_frequency_grid(28e9, 4e9, 16);
        const std::size_t M = 12, N = 7;
        const auto ch = gen_channels(paths, grid, N, M);
        const double expected = std::sqrt(double(M * N)) * std::abs(paths.bs_ris_gain);
        for (const auto &H : ch.h_bs_ris)
        {
            Eigen::JacobiSVD<CMatrix> svd(H);
            const auto s = svd.singularValues();
            CHECK(s[1] <= 1e-12 * s[0]);
            CHECK_THAT(H.norm(), WithinRel(expected, 1e-12));
        }
    }
}

TEST_CASE("Channels - LoS unit gain RIS-user norm is sqrt(M)")
{
    Rng rng(10);
    for (int i = 0; i < 20; ++i)
    {
        const auto paths = sample_path_set(rng, Scenario::LoS, 1, GainMode::Unit);
        const auto ch = gen_channels(paths, build_frequency_grid(28e9, 2e9, 32), 4, 64);
        for (const auto &h : ch.h_ris_user)
            CHECK_THAT(h.norm(), WithinRel(8.0, 1e-12));
    }
}

TEST_CASE("Channels - NLoS RIS-user channel is the normalized path sum")
{
    Rng rng(12);
    const auto paths = sample_path_set(rng, Scenario::NLoS, 3);
    const std::size_t M = 9;
    const double f = 28.3e9, fc = 28e9;
    const CRowVector h = ris_user_channel(paths, f, fc, M);
    for (std::size_t m = 0; m < M; ++m)
    {
        cdouble expected{0.0, 0.0};
        for (const auto &p : paths.ru_paths)
        {
            const double phi = oracle::spatial_angle(f, p.angle_rad, fc);
            expected += std::sqrt(double(M) / 3.0) * p.gain * std::polar(1.0, -2 * pi * p.delay_s * f) *
                        std::polar(1.0 / std::sqrt(double(M)), -2 * pi * double(m) * phi);
        }
        CHECK(std::abs(h[static_cast<Eigen::Index>(m)] - expected) < 1e-12);
    }
}

TEST_CASE("Channels - zero bandwidth gives identical subcarriers")
{
    Rng rng(13);
    const auto paths = sample_path_set(rng, Scenario::NLoS, 5);
    const auto ch = gen_channels(paths, build_frequency_grid(28e9, 0.0, 8), 3, 5);
    for (std::size_t k = 1; k < 8; ++k)
    {
        CHECK(ch.h_bs_ris[k] == ch.h_bs_ris[0]);
        CHECK(ch.h_ris_user[k] == ch.h_ris_user[0]);
    }
}

TEST_CASE("Channels - deterministic in their inputs")
{
    Rng rng(14);
    const auto paths = sample_path_set(rng, Scenario::NLoS, 2);
    const auto grid = build_frequency_grid(28e9, 1e9, 4);
    const auto a = gen_channels(paths, grid, 3, 4);
    const auto b = gen_channels(paths, grid, 3, 4);
    for (std::size_t k = 0; k < 4; ++k)
    {
        CHECK(a.h_bs_ris[k] == b.h_bs_ris[k]);
        CHECK(a.h_ris_user[k] == b.h_ris_user[k]);
    }
    CHECK_THROWS_AS(gen_channels(paths, grid, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(gen_channels(paths, grid, 3, 0), std::invalid_argument);
}

TEST_CASE("Rng - substreams are reproducible and distinct")
{
    Rng a = Rng::substream(7, {3, 0});
    Rng b = Rng::substream(7, {3, 0});
    Rng c = Rng::substream(7, {3, 1});
    Rng d = Rng::substream(7, {4, 0});
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
    CHECK(x != d.next_u64());
}
