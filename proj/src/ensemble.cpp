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

#include "polardeg/ensemble.hpp"

#include "polardeg/errors.hpp"
#include "polardeg/rng.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace polardeg
{

namespace
{

// Principal square root V diag(sqrt(l)) V^dagger.
ComplexMatrix principal_sqrt(const CoherenceMatrix &rho)
{
    const auto &eig = rho.eigen();
    const int n = rho.dim();
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
        {
            complex s = 0.0;
            for (int k = 0; k < n; ++k)
                s += eig.vectors(i, k) * std::sqrt(std::max(eig.values[k], 0.0)) * std::conj(eig.vectors(j, k));
            a(i, j) = s;
        }
    return a;
}

} // namespace

FieldEnsemble sample_ensemble(const CoherenceMatrix &rho, std::size_t shots, std::uint64_t seed)
{
    if (shots < 1)
        throw Error(ErrorKind::InvalidArgument, "ensemble needs at least one shot");

    const int n = rho.dim();
    const ComplexMatrix a = principal_sqrt(rho);
    const double s = 1.0 / std::sqrt(2.0);

    FieldEnsemble e;
    e.dim = n;
    e.shots = shots;
    e.seed = seed;
    e.samples.resize(shots);
    for (std::size_t i = 0; i < shots; ++i)
    {
        CounterRng rng(seed, i);
        std::normal_distribution<double> normal;
        std::array<complex, 3> z{};
        for (int k = 0; k < n; ++k)
        {
            const double re = normal(rng);
            const double im = normal(rng);
            z[k] = complex(re * s, im * s);
        }
        auto &field = e.samples[i];
        for (int r = 0; r < n; ++r)
        {
            complex acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += a(r, k) * z[k];
            field[r] = acc;
        }
    }
    return e;
}

CoherenceMatrix estimate_coherence(const FieldEnsemble &e)
{
    if (e.samples.empty())
        throw Error(ErrorKind::InvalidArgument, "empty ensemble");
    const int n = e.dim;
    ComplexMatrix acc(n);
    for (const auto &field : e.samples)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                acc(i, j) += field[i] * std::conj(field[j]);
    acc *= 1.0 / static_cast<double>(e.samples.size());
    return make_coherence(acc);
}

double estimate_overlap(const FieldEnsemble &e, const GroupElement &g)
{
    const CoherenceMatrix rho = estimate_coherence(e);
    const CoherenceMatrix rho_g = conjugate(rho, g);
    return trace_product(rho.matrix(), rho_g.matrix()).real();
}

} // namespace polardeg
