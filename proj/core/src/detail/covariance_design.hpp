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

#include <utility>
#include <vector>

namespace risq::detail
{

// Phases of Phi1: -2 pi m phi_BR(f), turning a_M(phi_BR(f)) into the all-ones direction.
std::vector<double> receive_phases(const PathSet &paths, double f_hz, double carrier_hz, std::size_t n_ris);

// Phi1 composed with phase_extraction(direction) and with phase_extraction(conj(direction)).
std::pair<PhaseProfile, PhaseProfile> candidate_profiles(const std::vector<double> &receive, const CVector &direction,
                                                         SchemeTag tag);

} // namespace risq::detail
