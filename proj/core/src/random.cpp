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

#include "risq/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace risq
{

namespace
{

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

Rng Rng::substream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys)
{
    std::uint64_t h = splitmix64(seed);
    for (std::uint64_t key : keys)
        h = splitmix64(h ^ splitmix64(key + 0x632BE59BD9B4E019ULL));
    return Rng(h);
}

double Rng::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform_open_closed(double upper)
{
    return upper * (1.0 - uniform());
}

double Rng::uniform_closed_open(double upper)
{
    return upper * uniform();
}

std::uint64_t Rng::uniform_index(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("Rng::uniform_index: n must be positive");
    // Rejection sampling removes modulo bias.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = engine_();
    while (x >= limit)
        x = engine_();
    return x % n;
}

double Rng::standard_normal()
{
    if (spare_normal_)
    {
        const double z = *spare_normal_;
        spare_normal_.reset();
        return z;
    }
    // Box-Muller; u1 in (0, 1] keeps the log finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_normal_ = r * std::sin(a);
    return r * std::cos(a);
}

std::complex<double> Rng::complex_normal()
{
    const double re = standard_normal();
    const double im = standard_normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

} // namespace risq
