// SPDX-License-Identifier: Apache-2.0
//
// polardeg - operational degrees of polarization for 2D and 3D fields
// Copyright (C) 2026 The polardeg authors
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

#include "polardeg/groups.hpp"
#include "polardeg/polarization.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace polardeg
{

// Realizations of a zero-mean circular complex Gaussian field, E = A z with A A^dagger = rho.
struct FieldEnsemble
{
    int dim = 0;
    std::size_t shots = 0;
    std::uint64_t seed = 0;
    std::vector<std::array<complex, 3>> samples;
};

// Shot i depends only on (seed, i).
FieldEnsemble sample_ensemble(const CoherenceMatrix &rho, std::size_t shots, std::uint64_t seed);

// (1/shots) sum E E^dagger, normalized and validated by make_coherence. A single shot gives a pure state.
CoherenceMatrix estimate_coherence(const FieldEnsemble &e);

// Tr(rho_hat rho_hat_g): the statistical stand-in for the interferometric visibility measurement.
double estimate_overlap(const FieldEnsemble &e, const GroupElement &g);

} // namespace polardeg
