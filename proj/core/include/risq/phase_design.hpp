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
#include "risq/rate_eval.hpp"

#include <cstddef>
#include <optional>
#include <span>

namespace risq
{

// ================================================================================================
// Angle-based designers (single-path RIS-user link)
// ================================================================================================

/// Per-subcarrier optimum for LoS: phases[m] = 2 pi m (phi_Ru,k - phi_BR,k).
/// Throws std::invalid_argument for NLoS paths or k outside the grid.
PhaseProfile design_ideal(const PathSet &paths, const FrequencyGrid &grid, std::size_t n_ris, std::size_t k);

/// Carrier-frequency design from the long-term physical angles only:
/// phases[m] = pi m (sin(theta_Ru) - sin(theta_BR)). Throws for NLoS.
PhaseProfile design_central(const PathSet &paths, std::size_t n_ris);

/// design_ideal at subcarrier k, tagged for use as a common profile
/// (Random-index draws k per realization, Side-index uses k = 0).
PhaseProfile design_indexed(const PathSet &paths, const FrequencyGrid &grid, std::size_t n_ris, std::size_t k);

/// Phases i.i.d. uniform on [0, 2 pi).
PhaseProfile design_random(Rng &rng, std::size_t n_ris);

// ================================================================================================
// Covariance-based designers
// ================================================================================================

/// Mean channel covariance (1/K) sum_k h_k^H h_k of RIS-user row vectors.
class Mccm
{
public:
    explicit Mccm(CMatrix matrix);

    const CMatrix &matrix() const { return matrix_; }
    std::size_t size() const { return static_cast<std::size_t>(matrix_.rows()); }
    double trace() const { return matrix_.trace().real(); }

    /// max_ij |A - A^H|_ij
    double hermitian_error() const;

private:
    CMatrix matrix_;
};

/// Throws std::invalid_argument on empty input or inconsistent lengths.
Mccm mean_channel_covariance(std::span<const CRowVector> h_ris_user);

struct PrincipalDirection
{
    CVector vector;        ///< unit norm; first non-negligible entry real and positive
    double eigenvalue = 0; ///< largest eigenvalue
    bool degenerate = false;
};

/// Relative gap below which the top eigenvalue is reported as degenerate.
inline constexpr double degeneracy_tolerance = 1e-9;

/// Eigenvector of the largest eigenvalue of the Hermitian MCCM. When the top
/// eigenvalue is repeated the returned vector is some member of the top
/// eigenspace and `degenerate` is set.
PrincipalDirection principal_direction(const Mccm &mccm);

/// Closed form for the rank-one covariance h^H h: direction h^H / ||h||,
/// eigenvalue ||h||^2. Normalized like the general overload.
PrincipalDirection principal_direction(const CRowVector &h);

/// phases[m] = arg(v[m]); an exactly zero entry gets phase 0.
PhaseProfile phase_extraction(const CVector &v, SchemeTag tag = {SchemeTag::Kind::Mccm, std::nullopt});

struct CovarianceDesign
{
    PhaseProfile profile;
    bool degenerate = false;
};

/// Two-stage profile Phi = Phi2 * Phi1 built from the mean covariance over all
/// subcarriers. Phi1 aligns the BS-RIS response at the carrier; Phi2 is the
/// phase-extracted principal direction. Of the two conjugation conventions the
/// one with the higher sum rate under `budget` is kept.
CovarianceDesign design_mccm(const ChannelRealization &channels, const LinkBudget &budget = LinkBudget(1.0, 1.0));

/// Same construction from the covariance of a single subcarrier k, with Phi1
/// aligned at f_k. std::nullopt designs at the carrier frequency itself from the
/// path set. Used for the NLoS Central / Random-index / Side-index baselines.
CovarianceDesign design_subcarrier_covariance(const ChannelRealization &channels, std::optional<std::size_t> k,
                                              const LinkBudget &budget = LinkBudget(1.0, 1.0));

} // namespace risq
