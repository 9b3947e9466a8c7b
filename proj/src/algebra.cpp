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

#include "polardeg/algebra.hpp"

#include "polardeg/errors.hpp"

#include <cmath>
#include <string>

namespace polardeg
{

namespace
{

constexpr double kImagResidueTol = 1e-12;

ComplexMatrix off_diagonal(int i, int j, complex upper)
{
    ComplexMatrix m(3);
    m(i, j) = upper;
    m(j, i) = std::conj(upper);
    return m;
}

} // namespace

GeneratorBasis build_basis(int dim)
{
    const complex I(0.0, 1.0);
    GeneratorBasis basis;
    basis.dim = dim;

    if (dim == 2)
    {
        ComplexMatrix s1(2), s2(2), s3(2);
        s1(0, 1) = 1.0;
        s1(1, 0) = 1.0;
        s2(0, 1) = -I;
        s2(1, 0) = I;
        s3(0, 0) = 1.0;
        s3(1, 1) = -1.0;
        basis.generators = {s1, s2, s3};
        return basis;
    }
    if (dim == 3)
    {
        ComplexMatrix l3(3), l8(3);
        l3(0, 0) = 1.0;
        l3(1, 1) = -1.0;
        const double k = 1.0 / std::sqrt(3.0);
        l8(0, 0) = k;
        l8(1, 1) = k;
        l8(2, 2) = -2.0 * k;
        basis.generators = {off_diagonal(0, 1, 1.0), off_diagonal(0, 1, -I), l3,
                            off_diagonal(0, 2, 1.0), off_diagonal(0, 2, -I), off_diagonal(1, 2, 1.0),
                            off_diagonal(1, 2, -I),  l8};
        return basis;
    }
    throw Error(ErrorKind::UnsupportedDim, "generator basis requires dim 2 or 3, got " + std::to_string(dim));
}

const GeneratorBasis &pauli_basis()
{
    static const GeneratorBasis basis = build_basis(2);
    return basis;
}

const GeneratorBasis &gell_mann_basis()
{
    static const GeneratorBasis basis = build_basis(3);
    return basis;
}

StructureTensors compute_structure_tensors(const GeneratorBasis &basis)
{
    if (basis.dim != 3 || basis.size() != 8)
        throw Error(ErrorKind::UnsupportedDim, "structure tensors are defined for the su(3) basis only");

    const complex four_i(0.0, 4.0);
    StructureTensors t;
    for (int r = 0; r < 8; ++r)
        for (int s = 0; s < 8; ++s)
        {
            const ComplexMatrix rs = basis[r] * basis[s];
            const ComplexMatrix sr = basis[s] * basis[r];
            const ComplexMatrix comm = rs - sr;
            const ComplexMatrix anti = rs + sr;
            for (int u = 0; u < 8; ++u)
            {
                const complex f = trace_product(comm, basis[u]) / four_i;
                const complex d = trace_product(anti, basis[u]) / 4.0;
                if (std::abs(f.imag()) > kImagResidueTol || std::abs(d.imag()) > kImagResidueTol)
                    throw Error(ErrorKind::InternalConsistency, "structure constant has an imaginary residue");
                t.f_data[64 * r + 8 * s + u] = f.real();
                t.d_data[64 * r + 8 * s + u] = d.real();
            }
        }
    return t;
}

const StructureTensors &su3_structure()
{
    static const StructureTensors t = compute_structure_tensors(gell_mann_basis());
    return t;
}

Vec8 wedge(const Vec8 &a, const Vec8 &b, const StructureTensors &t)
{
    Vec8 out{};
    for (int r = 0; r < 8; ++r)
        for (int s = 0; s < 8; ++s)
            for (int u = 0; u < 8; ++u)
                out[r] += t.f(r, s, u) * a[s] * b[u];
    return out;
}

Vec8 star(const Vec8 &a, const Vec8 &b, const StructureTensors &t)
{
    const double root3 = std::sqrt(3.0);
    Vec8 out{};
    for (int r = 0; r < 8; ++r)
    {
        for (int s = 0; s < 8; ++s)
            for (int u = 0; u < 8; ++u)
                out[r] += t.d(r, s, u) * a[s] * b[u];
        out[r] *= root3;
    }
    return out;
}

} // namespace polardeg
