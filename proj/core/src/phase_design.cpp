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

#include "risq/phase_design.hpp"
#include "detail/covariance_design.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <string>

namespace risq
{

namespace
{

constexpr double two_pi = 2.0 * std::numbers::pi;

void require_los(const PathSet &paths, const char *who)
{
    if (paths.scenario != Scenario::LoS || paths.ru_paths.size() != 1)
        throw std::invalid_argument(std::string(who) + ": requires a LoS path set (single RIS-user path)");
}

void require_subcarrier(const FrequencyGrid &grid, std::size_t k, const char *who)
{
    if (k >= grid.num_subcarriers())
        throw std::invalid_argument(std::string(who) + ": subcarrier index " + std::to_string(k) +
                                    " outside grid of " + std::to_string(grid.num_subcarriers()));
}

// Rotates v so that its first non-negligible entry is real and positive.
void canonicalize_phase(CVector &v)
{
    for (Eigen::Index i = 0; i < v.size(); ++i)
    {
        const double mag = std::abs(v[i]);
        if (mag > 1e-8)
        {
            v *= std::conj(v[i]) / mag;
            return;
        }
    }
}

std::vector<double> linear_phase(std::size_t n, double slope)
{
    std::vector<double> p(n);
    for (std::size_t m = 0; m < n; ++m)
        p[m] = slope * static_cast<double>(m);
    return p;
}

} // namespace

PhaseProfile design_ideal(const PathSet &paths, const FrequencyGrid &grid, std::size_t n_ris, std::size_t k)
{
    require_los(paths, "design_ideal");
    require_subcarrier(grid, k, "design_ideal");
    const double f = grid[k];
    const double phi_ru = spatial_angle(f, paths.ru_paths.front().angle_rad, grid.carrier_hz());
    const double phi_br = spatial_angle(f, paths.bs_ris_aoa_rad, grid.carrier_hz());
    return PhaseProfile(linear_phase(n_ris, two_pi * (phi_ru - phi_br)), {SchemeTag::Kind::Ideal, k});
}

PhaseProfile design_central(const PathSet &paths, std::size_t n_ris)
{
    require_los(paths, "design_central");
    const double slope = std::numbers::pi * (std::sin(paths.ru_paths.front().angle_rad) - std::sin(paths.bs_ris_aoa_rad));
    return PhaseProfile(linear_phase(n_ris, slope), {SchemeTag::Kind::Central, std::nullopt});
}

PhaseProfile design_indexed(const PathSet &paths, const FrequencyGrid &grid, std::size_t n_ris, std::size_t k)
{
    PhaseProfile p = design_ideal(paths, grid, n_ris, k);
    return PhaseProfile(std::vector<double>(p.phases().begin(), p.phases().end()), {SchemeTag::Kind::Indexed, k});
}

PhaseProfile design_random(Rng &rng, std::size_t n_ris)
{
    std::vector<double> p(n_ris);
    for (double &x : p)
        x = rng.uniform_closed_open(two_pi);
    return PhaseProfile(std::move(p), {SchemeTag::Kind::Random, std::nullopt});
}

// ------------------------------------------------------------------------------------------------

Mccm::Mccm(CMatrix matrix) : matrix_(std::move(matrix))
{
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
        throw std::invalid_argument("Mccm: matrix must be square and nonempty");
}

double Mccm::hermitian_error() const
{
    return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

Mccm mean_channel_covariance(std::span<const CRowVector> h_ris_user)
{
    if (h_ris_user.empty())
        throw std::invalid_argument("mean_channel_covariance: at least one subcarrier is required");
    const Eigen::Index M = h_ris_user.front().size();
    if (M == 0)
        throw std::invalid_argument("mean_channel_covariance: channel vectors must be nonempty");

    CMatrix acc = CMatrix::Zero(M, M);
    for (const auto &h : h_ris_user)
    {
        if (h.size() != M)
            throw std::invalid_argument("mean_channel_covariance: inconsistent channel lengths");
        acc.selfadjointView<Eigen::Lower>().rankUpdate(h.adjoint());
    }
    // Only the lower triangle was accumulated; mirror it so the result is exactly Hermitian.
    CMatrix full = acc.selfadjointView<Eigen::Lower>();
    full /= static_cast<double>(h_ris_user.size());
    return Mccm(std::move(full));
}

PrincipalDirection principal_direction(const Mccm &mccm)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> es(mccm.matrix());
    if (es.info() != Eigen::Success)
        throw std::runtime_error("principal_direction: eigen-decomposition failed");

    const Eigen::Index n = es.eigenvalues().size();
    PrincipalDirection out;
    out.eigenvalue = es.eigenvalues()[n - 1];
    out.vector = es.eigenvectors().col(n - 1);
    out.vector.normalize();
    canonicalize_phase(out.vector);
    if (n > 1)
    {
        const double gap = out.eigenvalue - es.eigenvalues()[n - 2];
        out.degenerate = gap <= degeneracy_tolerance * std::abs(out.eigenvalue);
    }
    return out;
}

PrincipalDirection principal_direction(const CRowVector &h)
{
    PrincipalDirection out;
    out.eigenvalue = h.squaredNorm();
    if (out.eigenvalue == 0.0)
    {
        out.vector = CVector::Zero(h.size());
        if (h.size() > 0)
            out.vector[0] = 1.0;
        out.degenerate = h.size() > 1;
        return out;
    }
    out.vector = h.adjoint() / std::sqrt(out.eigenvalue);
    canonicalize_phase(out.vector);
    return out;
}

PhaseProfile phase_extraction(const CVector &v, SchemeTag tag)
{
    std::vector<double> p(static_cast<std::size_t>(v.size()));
    for (Eigen::Index m = 0; m < v.size(); ++m)
    {
        if (v[m] == cdouble{0.0, 0.0})
        {
            std::clog << "risq: phase_extraction: zero entry at element " << m << ", phase set to 0\n";
            p[static_cast<std::size_t>(m)] = 0.0;
        }
        else
        {
            p[static_cast<std::size_t>(m)] = std::arg(v[m]);
        }
    }
    return PhaseProfile(std::move(p), tag);
}

// ------------------------------------------------------------------------------------------------

namespace detail
{

std::vector<double> receive_phases(const PathSet &paths, double f_hz, double carrier_hz, std::size_t n_ris)
{
    return linear_phase(n_ris, -two_pi * bs_ris_spatial_angle(paths, f_hz, carrier_hz));
}

std::pair<PhaseProfile, PhaseProfile> candidate_profiles(const std::vector<double> &receive, const CVector &direction,
                                                         SchemeTag tag)
{
    const PhaseProfile plain = phase_extraction(direction, tag);
    const PhaseProfile conjugate = phase_extraction(direction.conjugate(), tag);
    std::vector<double> a(receive.size()), b(receive.size());
    for (std::size_t m = 0; m < receive.size(); ++m)
    {
        a[m] = receive[m] + plain.phases()[m];
        b[m] = receive[m] + conjugate.phases()[m];
    }
    return {PhaseProfile(std::move(a), tag), PhaseProfile(std::move(b), tag)};
}

} // namespace detail

namespace
{

CovarianceDesign pick_by_sum_rate(const ChannelRealization &channels, const std::vector<double> &receive,
                                  const PrincipalDirection &dir, SchemeTag tag, const LinkBudget &budget)
{
    auto [plain, conjugate] = detail::candidate_profiles(receive, dir.vector, tag);
    const double r_plain = sum_rate(channels, plain, budget).sum_rate_bits;
    const double r_conj = sum_rate(channels, conjugate, budget).sum_rate_bits;
    return {r_conj > r_plain ? std::move(conjugate) : std::move(plain), dir.degenerate};
}

} // namespace

CovarianceDesign design_mccm(const ChannelRealization &channels, const LinkBudget &budget)
{
    const std::size_t M = channels.num_elements();
    const double fc = channels.grid.carrier_hz();
    const PrincipalDirection dir = principal_direction(mean_channel_covariance(channels.h_ris_user));
    const auto receive = detail::receive_phases(channels.source_paths, fc, fc, M);
    return pick_by_sum_rate(channels, receive, dir, {SchemeTag::Kind::Mccm, std::nullopt}, budget);
}

CovarianceDesign design_subcarrier_covariance(const ChannelRealization &channels, std::optional<std::size_t> k,
                                              const LinkBudget &budget)
{
    const std::size_t M = channels.num_elements();
    const double fc = channels.grid.carrier_hz();
    double f = fc;
    CRowVector h;
    if (k)
    {
        require_subcarrier(channels.grid, *k, "design_subcarrier_covariance");
        f = channels.grid[*k];
        h = channels.h_ris_user[*k];
    }
    else
    {
        h = ris_user_channel(channels.source_paths, fc, fc, M);
    }
    const CRowVector rows[] = {h};
    const PrincipalDirection dir = principal_direction(mean_channel_covariance(rows));
    const auto receive = detail::receive_phases(channels.source_paths, f, fc, M);
    return pick_by_sum_rate(channels, receive, dir, {SchemeTag::Kind::Covariance, k}, budget);
}

} // namespace risq
