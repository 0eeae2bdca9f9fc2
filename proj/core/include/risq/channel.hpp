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

#include "risq/random.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace risq
{

using cdouble = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CRowVector = Eigen::RowVectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Upper end of the path delay support, in seconds.
inline constexpr double max_path_delay_s = 20e-9;

enum class Scenario
{
    LoS,
    NLoS
};

std::string_view to_string(Scenario s);

/// Path gain model. Unit mode sets every gain to 1 so that closed forms which
/// ignore |alpha| hold exactly.
enum class GainMode
{
    Unit,
    Random
};

std::string_view to_string(GainMode g);

// ================================================================================================
// Frequency grid
// ================================================================================================

/// K OFDM subcarriers placed symmetrically around the carrier:
/// f_k = f_c + (B/K) * (k - (K-1)/2), k = 0..K-1.
class FrequencyGrid
{
public:
    FrequencyGrid(double carrier_hz, double bandwidth_hz, std::size_t num_subcarriers);

    double carrier_hz() const { return carrier_hz_; }
    double bandwidth_hz() const { return bandwidth_hz_; }
    std::size_t num_subcarriers() const { return frequencies_.size(); }
    std::span<const double> frequencies() const { return frequencies_; }
    double operator[](std::size_t k) const { return frequencies_[k]; }

private:
    double carrier_hz_;
    double bandwidth_hz_;
    std::vector<double> frequencies_;
};

/// Throws std::invalid_argument for K = 0, a nonpositive carrier, a negative
/// bandwidth, or bandwidth >= 2 * carrier (nonpositive lowest subcarrier).
FrequencyGrid build_frequency_grid(double carrier_hz, double bandwidth_hz, std::size_t num_subcarriers);

// ================================================================================================
// Array geometry
// ================================================================================================

/// Normalized spatial angle (f / c) * d * sin(theta) of a ULA with half-wavelength
/// spacing at the carrier, i.e. (f / (2 f_c)) * sin(theta).
double spatial_angle(double f_hz, double theta_rad, double carrier_hz);

/// Unit-norm ULA response: entry m is exp(j 2 pi m phi) / sqrt(n).
CVector array_response(std::size_t n_elements, double phi);

// ================================================================================================
// Path description
// ================================================================================================

struct RuPath
{
    double angle_rad = 0.0;
    cdouble gain{1.0, 0.0};
    double delay_s = 0.0;
};

/// Geometry of one channel realization. The BS-RIS link is always a single LoS
/// path; the RIS-user link has one path (LoS) or L paths (NLoS).
struct PathSet
{
    double bs_ris_aoa_rad = 0.0;
    double bs_ris_aod_rad = 0.0;
    cdouble bs_ris_gain{1.0, 0.0};
    double bs_ris_delay_s = 0.0;
    std::vector<RuPath> ru_paths;
    Scenario scenario = Scenario::LoS;

    std::size_t num_ru_paths() const { return ru_paths.size(); }

    /// Throws std::invalid_argument when L = 0, LoS with L != 1, or any delay
    /// is negative or non-finite.
    void validate() const;
};

/// Draws angles i.i.d. on (0, 2 pi], delays i.i.d. on (0, 20 ns] and gains
/// CN(0, 1) (or 1 in unit mode). LoS forces a single RIS-user path regardless
/// of num_paths; num_paths = 0 is rejected.
PathSet sample_path_set(Rng &rng, Scenario scenario, std::size_t num_paths, GainMode gains = GainMode::Random);

// ================================================================================================
// Channel realization
// ================================================================================================

struct ChannelRealization
{
    std::vector<CMatrix> h_bs_ris;      ///< K matrices, M x N
    std::vector<CRowVector> h_ris_user; ///< K row vectors, 1 x M
    FrequencyGrid grid;
    PathSet source_paths;

    std::size_t num_subcarriers() const { return h_bs_ris.size(); }
    std::size_t num_elements() const { return h_bs_ris.empty() ? 0 : static_cast<std::size_t>(h_bs_ris.front().rows()); }
    std::size_t num_bs_antennas() const { return h_bs_ris.empty() ? 0 : static_cast<std::size_t>(h_bs_ris.front().cols()); }
};

/// BS-RIS spatial angle at the RIS for frequency f.
double bs_ris_spatial_angle(const PathSet &paths, double f_hz, double carrier_hz);

/// BS-RIS channel at one frequency:
/// sqrt(MN) alpha exp(-j 2 pi tau f) a_M(phi_BR) a_N(phi_BS)^H.
CMatrix bs_ris_channel(const PathSet &paths, double f_hz, double carrier_hz, std::size_t n_bs, std::size_t n_ris);

/// RIS-user channel at one frequency. LoS: sqrt(M) alpha beta a_M(phi)^H.
/// NLoS: sqrt(M / L) sum_l alpha_l beta_l a_M(phi_l)^H.
CRowVector ris_user_channel(const PathSet &paths, double f_hz, double carrier_hz, std::size_t n_ris);

/// Evaluates both links on every subcarrier of the grid.
ChannelRealization gen_channels(const PathSet &paths, const FrequencyGrid &grid, std::size_t n_bs, std::size_t n_ris);

} // namespace risq
