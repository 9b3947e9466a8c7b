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

#include "polardeg/groups.hpp"

#include "polardeg/errors.hpp"
#include "polardeg/rng.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace polardeg
{

namespace
{

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kFourPi = 4.0 * kPi;

// x mod period in [0, period); also returns how many periods were removed.
double wrap(double x, double period, long long *turns = nullptr)
{
    const double k = std::floor(x / period);
    double r = x - k * period;
    long long t = static_cast<long long>(k);
    if (r >= period) // rounding at the upper edge
    {
        r -= period;
        ++t;
    }
    if (r < 0.0)
        r = 0.0;
    if (turns)
        *turns = t;
    return r;
}

// Writes the 2x2 block of R(alpha, beta, gamma) into rows/cols (i, i+1) of m.
void put_su2_block(ComplexMatrix &m, int i, double alpha, double beta, double gamma)
{
    const double c = std::cos(0.5 * beta);
    const double s = std::sin(0.5 * beta);
    const complex plus = std::polar(1.0, 0.5 * (alpha + gamma));
    const complex minus = std::polar(1.0, 0.5 * (alpha - gamma));
    m(i, i) = std::conj(plus) * c;
    m(i, i + 1) = -std::conj(minus) * s;
    m(i + 1, i) = minus * s;
    m(i + 1, i + 1) = plus * c;
}

ComplexMatrix subgroup_23(double alpha, double beta)
{
    ComplexMatrix t(3);
    t(0, 0) = 1.0;
    put_su2_block(t, 1, alpha, beta, -alpha);
    return t;
}

ComplexMatrix subgroup_12(double alpha, double beta)
{
    ComplexMatrix t(3);
    t(2, 2) = 1.0;
    put_su2_block(t, 0, alpha, beta, -alpha);
    return t;
}

void check_dims(int a, int b)
{
    if (a != b)
        throw Error(ErrorKind::DimMismatch, "dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace

EulerSU2::EulerSU2(double alpha, double beta, double gamma)
{
    // R(a, b + 2pi, g) = -R(a, b, g) = R(a + 2pi, b, g), and R(a, -b, g) = R(a + pi, b, g - pi).
    beta = wrap(beta, kFourPi);
    if (beta >= kTwoPi)
    {
        beta -= kTwoPi;
        alpha += kTwoPi;
    }
    if (beta > kPi)
    {
        beta = kTwoPi - beta;
        alpha += 3.0 * kPi;
        gamma -= kPi;
    }
    long long turns = 0;
    gamma = wrap(gamma, kTwoPi, &turns);
    if (turns % 2 != 0)
        alpha += kTwoPi;
    alpha_ = wrap(alpha, kFourPi);
    beta_ = beta;
    gamma_ = gamma;
}

EulerSU3::EulerSU3(const std::array<double, 8> &angles)
{
    for (std::size_t i = 0; i < 8; ++i)
    {
        const bool four_pi = i == Beta1 || i == Beta2 || i == Beta3 || i == Gamma2;
        a_[i] = wrap(angles[i], four_pi ? kFourPi : kTwoPi);
    }
}

EulerSU3 EulerSU3::from_betas(double b1, double b2, double b3)
{
    std::array<double, 8> a{};
    a[Beta1] = b1;
    a[Beta2] = b2;
    a[Beta3] = b3;
    return EulerSU3(a);
}

GroupElement::GroupElement(ComplexMatrix u) : u_(std::move(u))
{
    const double unit_dev = (u_.adjoint() * u_ - ComplexMatrix::identity(u_.dim())).max_abs();
    if (unit_dev > tol::recon)
        throw Error(ErrorKind::InvalidArgument, "matrix is not unitary (deviation " + std::to_string(unit_dev) + ")");
    const double det_dev = std::abs(determinant(u_) - 1.0);
    if (det_dev > tol::recon)
        throw Error(ErrorKind::InvalidArgument, "determinant differs from 1 by " + std::to_string(det_dev));
}

GroupElement GroupElement::identity(int dim)
{
    return GroupElement(ComplexMatrix::identity(dim), Trusted{});
}

GroupElement GroupElement::inverse() const
{
    return GroupElement(u_.adjoint(), Trusted{});
}

GroupElement operator*(const GroupElement &a, const GroupElement &b)
{
    return GroupElement(a.u_ * b.u_, GroupElement::Trusted{});
}

ComplexMatrix su2_matrix(double alpha, double beta, double gamma)
{
    ComplexMatrix m(2);
    put_su2_block(m, 0, alpha, beta, gamma);
    return m;
}

ComplexMatrix su3_matrix(const std::array<double, 8> &a)
{
    using I = EulerSU3::Index;
    ComplexMatrix phi(3);
    phi(0, 0) = std::polar(1.0, -2.0 * a[I::Gamma1]);
    phi(1, 1) = std::polar(1.0, a[I::Gamma1] - 0.5 * a[I::Gamma2]);
    phi(2, 2) = std::polar(1.0, a[I::Gamma1] + 0.5 * a[I::Gamma2]);
    return subgroup_23(a[I::Alpha1], a[I::Beta1]) * subgroup_12(a[I::Alpha2], a[I::Beta2]) *
           subgroup_23(a[I::Alpha3], a[I::Beta3]) * phi;
}

GroupElement su2_from_euler(const EulerSU2 &e)
{
    return GroupElement(su2_matrix(e.alpha(), e.beta(), e.gamma()));
}

GroupElement su3_from_euler(const EulerSU3 &e)
{
    return GroupElement(su3_matrix(e.angles()));
}

CoherenceMatrix conjugate(const CoherenceMatrix &rho, const GroupElement &g)
{
    check_dims(rho.dim(), g.dim());
    return make_coherence(g.matrix() * rho.matrix() * g.matrix().adjoint());
}

StokesVector adjoint_on_stokes(const StokesVector &n, const GroupElement &g)
{
    check_dims(n.dim(), g.dim());
    return to_stokes(conjugate(from_stokes(n), g));
}

std::array<double, 3> su2_angle_ranges()
{
    return {kFourPi, kPi, kTwoPi};
}

std::array<double, 8> su3_angle_ranges()
{
    return {kTwoPi, kPi, kTwoPi, kPi, kTwoPi, kPi, kTwoPi, kFourPi};
}

std::array<double, 3> sample_su2_angles(std::uint64_t seed, std::uint64_t index)
{
    CounterRng rng(seed, index);
    const auto w = su2_angle_ranges();
    std::array<double, 3> a{};
    for (std::size_t i = 0; i < 3; ++i)
        a[i] = w[i] * rng.uniform();
    return a;
}

std::array<double, 8> sample_su3_angles(std::uint64_t seed, std::uint64_t index)
{
    CounterRng rng(seed, index);
    const auto w = su3_angle_ranges();
    std::array<double, 8> a{};
    for (std::size_t i = 0; i < 8; ++i)
        a[i] = w[i] * rng.uniform();
    return a;
}

std::vector<GroupElement> sample_group(int dim, std::size_t count, std::uint64_t seed)
{
    if (dim != 2 && dim != 3)
        throw Error(ErrorKind::UnsupportedDim, "group dimension must be 2 or 3");
    std::vector<GroupElement> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
    {
        if (dim == 2)
        {
            const auto a = sample_su2_angles(seed, i);
            out.push_back(su2_from_euler(EulerSU2(a[0], a[1], a[2])));
        }
        else
        {
            out.push_back(su3_from_euler(EulerSU3(sample_su3_angles(seed, i))));
        }
    }
    return out;
}

} // namespace polardeg
