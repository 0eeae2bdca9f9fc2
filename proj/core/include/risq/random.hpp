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

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>

namespace risq
{

/// Seeded random source with platform-independent output.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the standard. The
/// real-valued transforms are implemented here rather than through the
/// <random> distributions, whose algorithms are implementation-defined, so
/// that sweeps are bit-reproducible across standard libraries.
class Rng
{
public:
    explicit Rng(std::uint64_t seed);

    /// Independent substream keyed by (seed, keys...). Used to give every
    /// Monte Carlo trial and every scheme its own stream.
    static Rng substream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform();

    /// Uniform on (0, upper].
    double uniform_open_closed(double upper);

    /// Uniform on [0, upper).
    double uniform_closed_open(double upper);

    /// Uniform integer on [0, n). n must be positive.
    std::uint64_t uniform_index(std::uint64_t n);

    double standard_normal();

    /// Circularly-symmetric CN(0, 1): real and imaginary parts each N(0, 1/2).
    std::complex<double> complex_normal();

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_normal_;
};

} // namespace risq
