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

#include "risq/phase_profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace risq
{

PhaseProfile::PhaseProfile(std::vector<double> phases_rad, SchemeTag tag)
    : phases_(std::move(phases_rad)), tag_(tag)
{
    if (phases_.empty())
        throw std::invalid_argument("PhaseProfile: at least one element is required");
    if (!std::all_of(phases_.begin(), phases_.end(), [](double p) { return std::isfinite(p); }))
        throw std::invalid_argument("PhaseProfile: phases must be finite");
}

CVector PhaseProfile::reflection() const
{
    CVector r(static_cast<Eigen::Index>(phases_.size()));
    for (std::size_t m = 0; m < phases_.size(); ++m)
        r[static_cast<Eigen::Index>(m)] = std::polar(1.0, phases_[m]);
    return r;
}

CMatrix PhaseProfile::diagonal() const
{
    return reflection().asDiagonal();
}

PhaseProfile PhaseProfile::shifted(double c) const
{
    std::vector<double> p = phases_;
    for (double &x : p)
        x += c;
    return PhaseProfile(std::move(p), tag_);
}

bool PhaseProfile::equivalent_to(const PhaseProfile &other, double tol) const
{
    if (other.size() != size())
        return false;
    for (std::size_t m = 0; m < phases_.size(); ++m)
        if (wrapped_distance(phases_[m], other.phases_[m]) > tol)
            return false;
    return true;
}

double wrapped_distance(double a, double b)
{
    const double two_pi = 2.0 * std::numbers::pi;
    double d = std::fmod(std::abs(a - b), two_pi);
    return std::min(d, two_pi - d);
}

} // namespace risq
