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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace risq
{

/// Which designer produced a profile. `subcarrier` is set for the per-subcarrier
/// designs (Ideal, Indexed, Covariance); a Covariance tag without an index was
/// designed at the carrier frequency.
struct SchemeTag
{
    enum class Kind
    {
        Ideal,
        Central,
        Random,
        Indexed,
        Mccm,
        Covariance
    };

    Kind kind = Kind::Ideal;
    std::optional<std::size_t> subcarrier;

    friend bool operator==(const SchemeTag &, const SchemeTag &) = default;
};

/// Common RIS phase configuration: element m reflects with exp(j * phases[m]).
///
/// Phases are stored unwrapped; the unit-modulus constraint on the reflection
/// coefficients holds by construction of the representation.
class PhaseProfile
{
public:
    /// Throws std::invalid_argument on an empty or non-finite phase vector.
    PhaseProfile(std::vector<double> phases_rad, SchemeTag tag);

    std::span<const double> phases() const { return phases_; }
    std::size_t size() const { return phases_.size(); }
    const SchemeTag &tag() const { return tag_; }

    /// exp(j * phases[m]) for every element.
    CVector reflection() const;

    /// The diagonal matrix diag(exp(j * phases)).
    CMatrix diagonal() const;

    /// Same profile with c added to every phase.
    PhaseProfile shifted(double c) const;

    /// Elementwise equality modulo 2 pi, to within tol radians.
    bool equivalent_to(const PhaseProfile &other, double tol = 1e-9) const;

private:
    std::vector<double> phases_;
    SchemeTag tag_;
};

/// Distance between two angles on the circle, in [0, pi].
double wrapped_distance(double a, double b);

} // namespace risq
