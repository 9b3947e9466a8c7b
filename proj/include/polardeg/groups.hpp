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
#include "polardeg/polarization.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace polardeg
{

// SU(2) Euler angles. Construction reduces to alpha in [0, 4pi), beta in [0, pi], gamma in [0, 2pi)
// using exact identities, so the represented group element never changes.
class EulerSU2
{
public:
    EulerSU2(double alpha, double beta, double gamma);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }

private:
    double alpha_, beta_, gamma_;
};

// Euler-like angles (a1, b1, a2, b2, a3, b3, g1, g2) of
//   T23(a1,b1,-a1) T12(a2,b2,-a2) T23(a3,b3,-a3) Phi(g1,g2).
// Only exact periodicities are reduced (alphas and g1 mod 2pi, betas and g2 mod 4pi);
// the chart is a covering of SU(3), not a bijection.
class EulerSU3
{
public:
    static constexpr std::size_t size = 8;
    enum Index
    {
        Alpha1,
        Beta1,
        Alpha2,
        Beta2,
        Alpha3,
        Beta3,
        Gamma1,
        Gamma2
    };

    EulerSU3() = default;
    explicit EulerSU3(const std::array<double, 8> &angles);

    double operator[](std::size_t i) const { return a_[i]; }
    const std::array<double, 8> &angles() const { return a_; }

    // (b1, b2, b3) set, everything else zero.
    static EulerSU3 from_betas(double b1, double b2, double b3);

private:
    std::array<double, 8> a_{};
};

// Unitary matrix of unit determinant, dim 2 or 3.
class GroupElement
{
public:
    // Validates unitarity and det = 1 within tol::recon.
    explicit GroupElement(ComplexMatrix u);

    static GroupElement identity(int dim);

    int dim() const { return u_.dim(); }
    const ComplexMatrix &matrix() const { return u_; }
    GroupElement inverse() const;

    friend GroupElement operator*(const GroupElement &a, const GroupElement &b);

private:
    struct Trusted
    {
    };
    GroupElement(ComplexMatrix u, Trusted) : u_(std::move(u)) {}

    ComplexMatrix u_;
};

// Raw matrices without validation, for inner loops.
ComplexMatrix su2_matrix(double alpha, double beta, double gamma);
ComplexMatrix su3_matrix(const std::array<double, 8> &angles);

GroupElement su2_from_euler(const EulerSU2 &e);
GroupElement su3_from_euler(const EulerSU3 &e);

// R rho R^dagger
CoherenceMatrix conjugate(const CoherenceMatrix &rho, const GroupElement &g);

StokesVector adjoint_on_stokes(const StokesVector &n, const GroupElement &g);

// Angles of sample `index` drawn uniformly from the sampling ranges: for SU(2) alpha in [0,4pi),
// beta in [0,pi], gamma in [0,2pi); for SU(3) betas in [0,pi], all other angles in [0,2pi).
// Uniform Euler angles are NOT Haar distributed.
std::array<double, 3> sample_su2_angles(std::uint64_t seed, std::uint64_t index);
std::array<double, 8> sample_su3_angles(std::uint64_t seed, std::uint64_t index);

// Width of the sampling range of each coordinate.
std::array<double, 3> su2_angle_ranges();
std::array<double, 8> su3_angle_ranges();

std::vector<GroupElement> sample_group(int dim, std::size_t count, std::uint64_t seed);

} // namespace polardeg
