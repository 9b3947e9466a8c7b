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

#include "polardeg/matrix.hpp"

#include <array>
#include <vector>

namespace polardeg
{

using Vec8 = std::array<double, 8>;

// Pauli matrices (sigma_1 real off-diagonal, sigma_2 imaginary off-diagonal, sigma_3 = diag(1,-1))
// for dim 2, or the Gell-Mann matrices Lambda_1..Lambda_8 in standard order for dim 3.
// All generators are traceless, Hermitian and normalized to Tr(G_r G_s) = 2 delta_rs.
struct GeneratorBasis
{
    int dim = 0;
    std::vector<ComplexMatrix> generators;

    std::size_t size() const { return generators.size(); }
    const ComplexMatrix &operator[](std::size_t r) const { return generators[r]; }
};

GeneratorBasis build_basis(int dim);

// Cached standard bases; built once, immutable.
const GeneratorBasis &pauli_basis();
const GeneratorBasis &gell_mann_basis();

// su(3) structure constants, zero-based indices: f(0,1,2) is f_123.
struct StructureTensors
{
    std::array<double, 512> f_data{};
    std::array<double, 512> d_data{};

    double f(int r, int s, int t) const { return f_data[64 * r + 8 * s + t]; }
    double d(int r, int s, int t) const { return d_data[64 * r + 8 * s + t]; }
};

// f_rst = Tr([L_r, L_s] L_t) / 4i,  d_rst = Tr({L_r, L_s} L_t) / 4.
StructureTensors compute_structure_tensors(const GeneratorBasis &basis);

const StructureTensors &su3_structure();

// (a ^ b)_r = f_rst a_s b_t
Vec8 wedge(const Vec8 &a, const Vec8 &b, const StructureTensors &t);

// (a * b)_r = sqrt(3) d_rst a_s b_t
Vec8 star(const Vec8 &a, const Vec8 &b, const StructureTensors &t);

} // namespace polardeg
